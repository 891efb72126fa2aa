#include "corner/classify.hpp"

#include <sstream>
#include <stdexcept>

#include "corner/parse.hpp"

namespace corner {
namespace {

const char* sgn_str(int s) { return s >= 0 ? "+" : "-"; }

Mono mono2(const Space& s, int i, int j) {
  Mono m(s.vars(), 0);
  m[0] = i;
  m[1] = j;
  return m;
}

// ---- splitting -----------------------------------------------------------

Poly rotate_pair(const Poly& g, int vi, int vj) {
  // y_i -> y_i + y_j, y_j -> y_i - y_j turns a cross term into squares
  std::vector<Poly> images = Poly::identity_images(g.space());
  images[vi] = Poly::variable(g.space(), vi) + Poly::variable(g.space(), vj);
  images[vj] = Poly::variable(g.space(), vi) - Poly::variable(g.space(), vj);
  return g.substitute(images);
}

Poly eliminate_square(Poly g, int vj, const Rational& e, int order) {
  const Space& s = g.space();
  Mono sq(s.vars(), 0);
  sq[vj] = 2;
  for (int d = 2; d <= order; ++d) {
    Poly tail(s);
    for (const auto& [m, c] : g.terms()) {
      if (total_degree(m) != d || m[vj] == 0) continue;
      if (m == sq) continue;
      tail.add_term(m, c);
    }
    if (tail.is_zero()) continue;
    Poly shift(s);  // tail / y_j
    for (const auto& [m, c] : tail.terms()) {
      Mono t = m;
      t[vj] -= 1;
      shift.add_term(t, c);
    }
    std::vector<Poly> images = Poly::identity_images(s);
    images[vj] = Poly::variable(s, vj) - shift * (Rational(1) / (2 * e));
    g = g.substitute(images).truncate(order);
  }
  return g;
}

}  // namespace

SplitResult split_y_squares(const Germ& f, int order) {
  Poly g = f.poly.truncate(order);
  std::vector<int> signs;
  int guard = f.space().k * f.space().k + 4;
  while (guard-- > 0) {
    const Space& s = g.space();
    if (s.k == 0) break;
    int pick = -1;
    for (int j = 0; j < s.k && pick < 0; ++j) {
      Mono sq(s.vars(), 0);
      sq[s.y_index(j)] = 2;
      if (g.coeff(sq) != 0) pick = j;
    }
    if (pick < 0) {
      // no diagonal square available: rotate the first pure-y cross term
      int ri = -1, rj = -1;
      for (int i = 0; i < s.k && ri < 0; ++i)
        for (int j = i + 1; j < s.k && ri < 0; ++j) {
          Mono m(s.vars(), 0);
          m[s.y_index(i)] = 1;
          m[s.y_index(j)] = 1;
          if (g.coeff(m) != 0) {
            ri = i;
            rj = j;
          }
        }
      if (ri < 0) break;
      g = rotate_pair(g, s.y_index(ri), s.y_index(rj)).truncate(order);
      continue;
    }
    int vj = s.y_index(pick);
    Mono sq(s.vars(), 0);
    sq[vj] = 2;
    Rational e = g.coeff(sq);
    g = eliminate_square(std::move(g), vj, e, order);
    // drop e*y^2 and remove the variable
    Poly rest(s);
    for (const auto& [m, c] : g.terms()) {
      if (m == sq) continue;
      if (m[vj] != 0) throw std::logic_error("splitting left a mixed term");
      rest.add_term(m, c);
    }
    Space target = Space::corner_space(s.r, s.k - 1, 0);
    std::vector<int> var_map(s.vars(), -1);
    int next = 0;
    for (int v = 0; v < s.vars(); ++v) {
      if (v == vj) continue;
      var_map[v] = next++;
    }
    g = rest.map_variables(target, var_map);
    signs.push_back(sign_of(e));
  }
  return SplitResult{Germ{g}, signs};
}

std::optional<Rational> mu_invariant(const Poly& quadratic) {
  if (quadratic.is_zero()) throw std::invalid_argument("zero quadratic part");
  const Space& s = quadratic.space();
  Rational c11 = quadratic.coeff(mono2(s, 2, 0));
  Rational c12 = quadratic.coeff(mono2(s, 1, 1));
  Rational c22 = quadratic.coeff(mono2(s, 0, 2));
  if (c11 == 0 || c22 == 0) return std::nullopt;
  return (c12 * c12) / (4 * c11 * c22);
}

namespace {

struct Outcome {
  bool matched = false;
  std::string label, group, detail;
  Regime regime = Regime::caustic_stable;
  int modulus = 0;
  std::optional<Rational> a;
  int expected_codim = -1;
};

Outcome unmatched(std::string detail) {
  Outcome o;
  o.detail = std::move(detail);
  return o;
}

Outcome classify_r2_k0(const Poly& g) {
  const Space& s = g.space();
  Rational q20 = g.coeff(mono2(s, 2, 0));
  Rational q11 = g.coeff(mono2(s, 1, 1));
  Rational q02 = g.coeff(mono2(s, 0, 2));
  Rational e30 = g.coeff(mono2(s, 3, 0));
  Rational e21 = g.coeff(mono2(s, 2, 1));
  Rational e12 = g.coeff(mono2(s, 1, 2));
  Rational e03 = g.coeff(mono2(s, 0, 3));

  if (q20 != 0 && q11 != 0 && q02 != 0) {
    Rational mu = (q11 * q11) / (4 * q20 * q02);
    int s1 = sign_of(q20 * q11);
    if (mu == 1) {
      // perfect square: residual cubic class decides the B_{2,2,3} signs
      Rational gamma = e03 - Rational(s1) * e12 + e21 - Rational(s1) * e30;
      if (gamma == 0) return unmatched("perfect-square quadratic with vanishing cubic class");
      Outcome o;
      o.matched = true;
      o.label = std::string("B_{2,2,3}^{") + sgn_str(s1) + "," + sgn_str(sign_of(gamma * q20)) + "}";
      o.group = "B_{2,2,3}^{*,*}";
      o.expected_codim = 3;
      return o;
    }
    Outcome o;
    o.matched = true;
    o.modulus = 1;
    o.a = Rational(1) / (4 * mu);
    std::string region = mu < 0 ? "-" : (mu > 1 ? "+,1" : "+,2");
    o.label = std::string("B_{2,2,a}^{") + sgn_str(s1) + "," + region + "}";
    o.group = std::string("B_{2,2}^{*,") + region + "}";
    o.regime = Regime::weakly_caustic_stable;
    o.expected_codim = 3;
    return o;
  }
  if (q20 != 0 && q11 == 0 && q02 != 0) {
    Outcome o;
    o.matched = true;
    o.label = std::string("B_{2,2}^{") + sgn_str(sign_of(q20 * q02)) + ",0}";
    o.group = "B_{2,2}^{*,0}";
    o.expected_codim = 3;
    return o;
  }
  if (q20 != 0 && q11 != 0 && q02 == 0) {
    if (e03 == 0) return unmatched("missing x2^3 class for a B_{2,3} pattern");
    Outcome o;
    o.matched = true;
    o.label = std::string("B_{2,3}^{") + sgn_str(sign_of(q20 * q11)) + "," +
              sgn_str(sign_of(q20 * e03)) + "}";
    o.group = "B_{2,3}^{*,*}";
    o.expected_codim = 3;
    return o;
  }
  if (q20 == 0 && q11 != 0 && q02 != 0) {
    if (e30 == 0) return unmatched("missing x1^3 class for a B_{3,2} pattern");
    Outcome o;
    o.matched = true;
    o.label = std::string("B_{3,2}^{") + sgn_str(sign_of(e30 * q11)) + "," +
              sgn_str(sign_of(e30 * q02)) + "}";
    o.group = "B_{3,2}^{*,*}";
    o.expected_codim = 3;
    return o;
  }
  if (q20 != 0 && q11 == 0 && q02 == 0) {
    if (e12 == 0 || e03 == 0) return unmatched("rank-one quadratic without the B_{2,3'} cubics");
    Outcome o;
    o.matched = true;
    o.label = std::string("B_{2,3'}^{") + sgn_str(sign_of(q20 * e12)) + "," +
              sgn_str(sign_of(q20 * e03)) + "}";
    o.group = "B_{2,3'}^{*,*}";
    o.expected_codim = 4;
    return o;
  }
  if (q20 == 0 && q11 == 0 && q02 != 0) {
    if (e30 == 0 || e21 == 0) return unmatched("rank-one quadratic without the B_{3,2'} cubics");
    Outcome o;
    o.matched = true;
    o.label = std::string("B_{3,2'}^{") + sgn_str(sign_of(e30 * e21)) + "," +
              sgn_str(sign_of(e30 * q02)) + "}";
    o.group = "B_{3,2'}^{*,*}";
    o.expected_codim = 4;
    return o;
  }
  return unmatched("quadratic support outside every table pattern");
}

Outcome classify_r2_k1(const Poly& g) {
  const Space& s = g.space();
  auto mono3 = [&](int i, int j, int m) {
    Mono mm(s.vars(), 0);
    mm[0] = i;
    mm[1] = j;
    mm[2] = m;
    return mm;
  };
  Rational d1 = g.coeff(mono3(1, 0, 1));
  Rational d2 = g.coeff(mono3(0, 1, 1));
  Rational p11 = g.coeff(mono3(2, 0, 0));
  Rational p12 = g.coeff(mono3(1, 1, 0));
  Rational p22 = g.coeff(mono3(0, 2, 0));
  Rational t = g.coeff(mono3(0, 0, 3));
  if (g.coeff(mono3(0, 0, 2)) != 0) throw std::logic_error("unsplit y square");
  if (t == 0) return unmatched("no cubic y term after splitting");

  if (d1 != 0 && d2 != 0) {
    Rational w = d1 * d1 * p22 - d1 * d2 * p12 + d2 * d2 * p11;
    if (w == 0) return unmatched("degenerate x block for a C_{3,2} pattern");
    Outcome o;
    o.matched = true;
    o.label = std::string("C_{3,2}^{") + sgn_str(sign_of(t * d1)) + "," +
              sgn_str(sign_of(d1 * d2)) + "}";
    o.group = "C_{3,2}^{*,*}";
    o.expected_codim = 3;
    return o;
  }
  if (d1 != 0 && d2 == 0) {
    Rational e2 = g.coeff(mono3(0, 1, 2));
    if (p22 == 0 || e2 == 0) return unmatched("C_{3,2,1} pattern incomplete");
    Outcome o;
    o.matched = true;
    o.label = std::string("C_{3,2,1}^{") + sgn_str(sign_of(t * d1)) + "," +
              sgn_str(sign_of(p22 * e2)) + "}";
    o.group = "C_{3,2,1}^{*,*}";
    o.expected_codim = 4;
    return o;
  }
  if (d1 == 0 && d2 != 0) {
    Rational e1 = g.coeff(mono3(1, 0, 2));
    if (p11 == 0 || e1 == 0) return unmatched("C_{3,2,2} pattern incomplete");
    Outcome o;
    o.matched = true;
    o.label = std::string("C_{3,2,2}^{") + sgn_str(sign_of(t * d2)) + "," +
              sgn_str(sign_of(p11 * e1)) + "}";
    o.group = "C_{3,2,2}^{*,*}";
    o.expected_codim = 4;
    return o;
  }
  return unmatched("no x y cross term after splitting");
}

Outcome classify_r1(const Poly& g, int codim) {
  const Space& s = g.space();
  if (s.k == 0) {
    if (g.is_zero()) return unmatched("germ without x dependence");
    int l = g.order();
    Outcome o;
    o.matched = true;
    o.label = "B_" + std::to_string(l);
    o.expected_codim = l - 1;
    return o;
  }
  if (s.k == 1) {
    auto mono = [&](int i, int j) {
      Mono m(s.vars(), 0);
      m[0] = i;
      m[1] = j;
      return m;
    };
    Rational d = g.coeff(mono(1, 1));
    Rational w = g.coeff(mono(2, 0));
    if (d != 0) {
      int l = -1;
      Rational gamma;
      for (int m = 3; m <= g.degree(); ++m)
        if (g.coeff(mono(0, m)) != 0) {
          l = m;
          gamma = g.coeff(mono(0, m));
          break;
        }
      if (l < 0) return unmatched("x y germ without a pure y term");
      int eps = (l % 2 == 0) ? 1 : sign_of(d * gamma);
      Outcome o;
      o.matched = true;
      o.label = "C_" + std::to_string(l) + "^{" + sgn_str(eps) + "}";
      o.expected_codim = l - 1;
      return o;
    }
    if (w != 0) {
      if (g.coeff(mono(0, 3)) == 0) return unmatched("x^2 germ without y^3");
      Outcome o;
      o.matched = true;
      o.label = "F_4";
      o.expected_codim = 3;
      return o;
    }
    return unmatched("degenerate quadratic part");
  }
  (void)codim;
  return unmatched("more than one residual internal variable");
}

Outcome classify_r0(const Poly& g, int codim) {
  if (g.space().k == 0 && g.is_zero()) {
    Outcome o;
    o.matched = true;
    o.label = "A_1";
    o.expected_codim = 0;
    return o;
  }
  if (g.space().k == 1 && !g.is_zero()) {
    int l = g.order();
    Outcome o;
    o.matched = true;
    o.label = "A_" + std::to_string(l - 1);
    o.expected_codim = l - 2;
    return o;
  }
  (void)codim;
  return unmatched("degenerate smooth germ");
}

}  // namespace

ClassificationReport classify_germ(const Germ& f) {
  const Space& s = f.space();
  if (s.r > 2) throw std::invalid_argument("unsupported corner rank r > 2");

  ClassificationReport report;
  SplitResult split = split_y_squares(f);
  const Poly& g = split.residual.poly;
  report.split_signs = split.square_signs;
  report.residual_germ = g.str();
  if (!f.poly.is_zero()) report.weights = quasihomogeneous_weights(f);
  Poly quad = g.graded_part(2);
  if (s.r == 2 && !quad.is_zero() && g.space().k == 0) report.mu = mu_invariant(quad);

  report.codim_caustic = codimension_auto(split.residual, Relation::C);
  if (report.codim_caustic.exceeds_bound) {
    report.detail = "codimension exceeds bound";
    return report;
  }
  const int codim = report.codim_caustic.value;

  Outcome o;
  if (s.r == 2) {
    if (codim > 4) {
      report.detail = "codimension exceeds the table cutoff";
      report.codim_weak = codim;
      return report;
    }
    if (g.space().k == 0)
      o = classify_r2_k0(g);
    else if (g.space().k == 1)
      o = classify_r2_k1(g);
    else
      o = unmatched("more than one residual internal variable");
  } else if (s.r == 1) {
    o = classify_r1(g, codim);
  } else {
    o = classify_r0(g, codim);
  }

  if (o.matched && o.expected_codim >= 0 && o.expected_codim != codim) {
    report.detail = "pattern " + o.label + " rejected: codimension " + std::to_string(codim) +
                    " instead of " + std::to_string(o.expected_codim);
    report.codim_weak = codim;
    return report;
  }
  if (!o.matched) {
    report.detail = o.detail;
    report.codim_weak = codim;
    return report;
  }
  report.matched = true;
  report.label = o.label;
  report.group = o.group;
  report.regime = o.regime;
  report.modulus_count = o.modulus;
  report.modulus_a = o.a;
  report.codim_weak = codim - o.modulus;
  report.detail = o.detail;
  return report;
}

WeakClass weak_class(const ClassificationReport& report) {
  if (!report.matched) throw std::invalid_argument("report did not match a table entry");
  if (report.modulus_count == 0) {
    if (const NormalFormEntry* e = find_entry(report.label))
      return WeakClass{report.label, e->representative};
    // r <= 1 labels: rebuild the representative from the label
    const std::string& l = report.label;
    if (l.rfind("B_", 0) == 0)
      return WeakClass{l, make_germ("x1^" + l.substr(2), 1, 0)};
    if (l.rfind("C_", 0) == 0) {
      size_t caret = l.find('^');
      std::string deg = l.substr(2, caret - 2);
      std::string sgn = l.substr(caret + 2, 1);
      return WeakClass{l, make_germ("x1*y1 " + sgn + " y1^" + deg, 1, 1)};
    }
    if (l == "F_4") return WeakClass{l, make_germ("x1^2 + y1^3", 1, 1)};
    if (l.rfind("A_", 0) == 0) {
      int idx = std::stoi(l.substr(2));
      return WeakClass{l, make_germ("y1^" + std::to_string(idx + 1), 0, 1)};
    }
    throw std::invalid_argument("no representative for label " + l);
  }
  // modulus classes: fixed representative per region
  std::string s1 = report.label.find("^{+") != std::string::npos ? "+" : "-";
  std::string coeff;
  std::string weak_label;
  if (report.label.find(",+,1}") != std::string::npos) {
    coeff = "+ 1/5*x2^2";
    weak_label = "B_{2,2}^{" + s1 + ",+,1}";
  } else if (report.label.find(",+,2}") != std::string::npos) {
    coeff = "+ x2^2";
    weak_label = "B_{2,2}^{" + s1 + ",+,2}";
  } else {
    coeff = "- x2^2";
    weak_label = "B_{2,2}^{" + s1 + ",-}";
  }
  Germ rep = make_germ("x1^2 " + s1 + " x1*x2 " + coeff, 2, 0);
  return WeakClass{weak_label, rep};
}

}  // namespace corner
