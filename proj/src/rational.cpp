#include "corner/rational.hpp"

#include <cctype>

namespace corner {

std::optional<Rational> rational_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  bool negative = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  if (pos >= s.size()) return std::nullopt;

  std::string intpart, fracpart, denpart;
  std::string* cur = &intpart;
  bool seen_dot = false, seen_slash = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur->push_back(c);
    } else if (c == '.' && !seen_dot && !seen_slash) {
      seen_dot = true;
      cur = &fracpart;
    } else if (c == '/' && !seen_slash && !seen_dot) {
      seen_slash = true;
      cur = &denpart;
    } else {
      return std::nullopt;
    }
  }
  if (intpart.empty() && fracpart.empty()) return std::nullopt;

  Rational result;
  if (seen_slash) {
    if (intpart.empty() || denpart.empty()) return std::nullopt;
    mpz_class den(denpart);
    if (den == 0) return std::nullopt;
    result = Rational(mpz_class(intpart), den);
  } else {
    mpz_class num(intpart.empty() ? std::string("0") : intpart);
    if (!fracpart.empty()) {
      mpz_class scale = 1;
      for (size_t i = 0; i < fracpart.size(); ++i) scale *= 10;
      result = Rational(num * scale + mpz_class(fracpart), scale);
    } else {
      result = Rational(num);
    }
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace corner
