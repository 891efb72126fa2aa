#include "corner/parse.hpp"

#include <cctype>

namespace corner {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const Space& space) : text_(text), space_(space) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& text_;
  const Space& space_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    Poly p = term() * Rational(sign);
    for (;;) {
      if (accept('+'))
        p = p + term();
      else if (accept('-'))
        p = p - term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      size_t at = pos_;
      long e = natural();
      if (e > kDegreeCap) throw ParseError("exponent exceeds degree cap", at);
      Poly out = Poly::constant(space_, 1);
      for (long i = 0; i < e; ++i) out = out * b;
      return out;
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("expected number, variable or '('");
  }

  long natural() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::stol(text_.substr(start, pos_ - start));
  }

  Poly rational() {
    long num = natural();
    if (accept('/')) {
      size_t at = pos_;
      long den = natural();
      if (den == 0) throw ParseError("zero denominator", at);
      return Poly::constant(space_, Rational(num, den));
    }
    return Poly::constant(space_, Rational(num));
  }

  Poly variable() {
    size_t at = pos_;
    char kind = text_[pos_++];
    long idx = natural();
    int var = -1;
    if (space_.kind == Space::Kind::corner) {
      if (kind == 'x' && idx >= 1 && idx <= space_.r) var = space_.x_index(static_cast<int>(idx) - 1);
      if (kind == 'y' && idx >= 1 && idx <= space_.k) var = space_.y_index(static_cast<int>(idx) - 1);
      if (kind == 'q' && idx >= 1 && idx <= space_.n) var = space_.q_index(static_cast<int>(idx) - 1);
    } else {
      if (kind == 'Q' && idx >= 1 && idx <= space_.n) var = space_.Q_index(static_cast<int>(idx) - 1);
      if (kind == 'P' && idx >= 1 && idx <= space_.n) var = space_.P_index(static_cast<int>(idx) - 1);
    }
    if (var < 0) throw ParseError("unknown variable '" + std::string(1, kind) + std::to_string(idx) + "'", at);
    return Poly::variable(space_, var);
  }
};

}  // namespace

Poly parse_expression(const std::string& text, const Space& space) {
  return Parser(text, space).run();
}

}  // namespace corner
