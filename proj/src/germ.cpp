#include "corner/germ.hpp"

#include <stdexcept>

#include "corner/parse.hpp"

namespace corner {

bool is_germ(const Poly& p) {
  const Space& s = p.space();
  if (s.kind != Space::Kind::corner || s.n != 0) return false;
  for (const auto& [m, c] : p.terms())
    if (total_degree(m) <= 1) return false;
  return true;
}

Germ make_germ(const Poly& p) {
  if (p.space().kind != Space::Kind::corner || p.space().n != 0)
    throw std::invalid_argument("germ must live in an (r, k, 0) space");
  if (!is_germ(p))
    throw std::invalid_argument("germ must have zero constant and linear part");
  return Germ{p};
}

Germ make_germ(const std::string& expr, int r, int k) {
  return make_germ(parse_expression(expr, Space::corner_space(r, k, 0)));
}

Poly restrict_q_zero(const Poly& family) {
  const Space& s = family.space();
  Space target = Space::corner_space(s.r, s.k, 0);
  Poly out(target);
  for (const auto& [m, c] : family.terms()) {
    bool has_q = false;
    for (int l = 0; l < s.n; ++l)
      if (m[s.q_index(l)] > 0) has_q = true;
    if (has_q) continue;
    Mono t(target.vars());
    for (int v = 0; v < s.r + s.k; ++v) t[v] = m[v];
    out.add_term(t, c);
  }
  return out;
}

bool is_generating_family(const Poly& p) {
  if (p.space().kind != Space::Kind::corner) return false;
  if (p.constant_term() != 0) return false;
  return is_germ(restrict_q_zero(p));
}

GeneratingFamily make_family(const Poly& p) {
  if (p.space().kind != Space::Kind::corner)
    throw std::invalid_argument("family must live in a corner space");
  if (p.constant_term() != 0) throw std::invalid_argument("family must vanish at the origin");
  Poly core = restrict_q_zero(p);
  if (!is_germ(core))
    throw std::invalid_argument("q = 0 restriction must be a germ (no constant or linear part)");
  return GeneratingFamily{p, Germ{core}};
}

GeneratingFamily make_family(const std::string& expr, int r, int k, int n) {
  return make_family(parse_expression(expr, Space::corner_space(r, k, n)));
}

Poly unfolding_direction(const GeneratingFamily& F, int l) {
  const Space& s = F.space();
  if (l < 0 || l >= s.n) throw std::invalid_argument("parameter index out of range");
  return restrict_q_zero(F.poly.derivative(s.q_index(l)));
}

Poly embed_in_family_space(const Poly& germ, int n) {
  const Space& s = germ.space();
  Space target = Space::corner_space(s.r, s.k, n);
  std::vector<int> var_map(s.vars());
  for (int v = 0; v < s.vars(); ++v) var_map[v] = v;
  return germ.map_variables(target, var_map);
}

GeneratingFamily restrict_parameter(const GeneratingFamily& F, int l, const Rational& value) {
  const Space& s = F.space();
  if (l < 0 || l >= s.n) throw std::invalid_argument("parameter index out of range");
  Space target = Space::corner_space(s.r, s.k, s.n - 1);
  std::vector<Poly> images;
  images.reserve(s.vars());
  for (int v = 0; v < s.r + s.k; ++v) images.push_back(Poly::variable(target, v));
  for (int j = 0; j < s.n; ++j) {
    if (j == l)
      images.push_back(Poly::constant(target, value));
    else
      images.push_back(Poly::variable(target, target.q_index(j < l ? j : j - 1)));
  }
  return make_family(F.poly.substitute(images));
}

}  // namespace corner
