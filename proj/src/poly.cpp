#include "corner/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace corner {

std::string mono_to_string(const Space& space, const Mono& m) {
  std::ostringstream out;
  bool first = true;
  for (size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!first) out << "*";
    out << space.var_name(static_cast<int>(v));
    if (m[v] > 1) out << "^" << m[v];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

Poly Poly::constant(const Space& space, const Rational& c) {
  Poly p(space);
  p.add_term(Mono(space.vars(), 0), c);
  return p;
}

Poly Poly::variable(const Space& space, int var) {
  if (var < 0 || var >= space.vars()) throw std::invalid_argument("variable out of range");
  Mono m(space.vars(), 0);
  m[var] = 1;
  return monomial(space, m, 1);
}

Poly Poly::monomial(const Space& space, const Mono& m, const Rational& c) {
  if (static_cast<int>(m.size()) != space.vars())
    throw std::invalid_argument("exponent vector has wrong length");
  Poly p(space);
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  if (total_degree(m) > kDegreeCap) throw std::domain_error("total degree exceeds cap");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

int Poly::order() const {
  if (terms_.empty()) return kDegreeCap + 1;
  return total_degree(terms_.begin()->first);  // map order is graded
}

Rational Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Mono(space_.vars(), 0)); }

Poly Poly::operator-() const {
  Poly out(space_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::operator+(const Poly& rhs) const {
  if (!(space_ == rhs.space_)) throw std::invalid_argument("space mismatch");
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  if (!(space_ == rhs.space_)) throw std::invalid_argument("space mismatch");
  Poly out(space_);
  const int nv = space_.vars();
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Mono m(nv);
      for (int v = 0; v < nv; ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out(space_);
  if (c == 0) return out;
  for (const auto& [m, cc] : terms_) out.terms_.emplace(m, cc * c);
  return out;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= space_.vars()) throw std::invalid_argument("unknown variable");
  Poly out(space_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    out.add_term(d, c * m[var]);
  }
  return out;
}

Poly Poly::truncate(int max_degree) const {
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
  Poly out(space_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

Poly Poly::graded_part(int degree) const {
  Poly out(space_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == degree) out.terms_.emplace(m, c);
  return out;
}

std::vector<Poly> Poly::identity_images(const Space& space) {
  std::vector<Poly> images;
  images.reserve(space.vars());
  for (int v = 0; v < space.vars(); ++v) images.push_back(Poly::variable(space, v));
  return images;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != space_.vars())
    throw std::invalid_argument("one image per variable required");
  Space target = images.empty() ? space_ : images[0].space();
  for (const Poly& im : images)
    if (!(im.space() == target)) throw std::invalid_argument("image space mismatch");

  // power cache per variable
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](int v, int e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) term = term * power(static_cast<int>(v), m[v]);
    out = out + term;
  }
  return out;
}

Poly Poly::map_variables(const Space& target, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != space_.vars())
    throw std::invalid_argument("var_map length mismatch");
  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Mono t(target.vars(), 0);
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (var_map[v] < 0) throw std::invalid_argument("variable not present in target space");
      t[var_map[v]] += m[v];
    }
    out.add_term(t, c);
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != space_.vars())
    throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::vector<Rational>> powers(point.size());
  auto power = [&](int v, int e) -> const Rational& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Rational(1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[v]);
    return cache[e];
  };
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t *= power(static_cast<int>(v), m[v]);
    sum += t;
  }
  return sum;
}

int Poly::degree_in_block(int first_var, int count) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int v = first_var; v < first_var + count; ++v) s += m[v];
    d = std::max(d, s);
  }
  return d;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool is_const = total_degree(m) == 0;
    if (a != 1 || is_const) {
      out << to_string(a);
      if (!is_const) out << "*";
    }
    if (!is_const) out << mono_to_string(space_, m);
  }
  return out.str();
}

}  // namespace corner
