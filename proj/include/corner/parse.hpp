#pragma once

#include <stdexcept>
#include <string>

#include "corner/poly.hpp"

namespace corner {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

// Grammar:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' nat)?
//   var      := ('x'|'y'|'q') nat            on corner spaces
//               ('Q'|'P') nat                on phase spaces
// Whitespace is ignored.  Exponents must be non-negative integers.
Poly parse_expression(const std::string& text, const Space& space);

}  // namespace corner
