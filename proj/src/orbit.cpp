#include "corner/orbit.hpp"

#include <sstream>
#include <stdexcept>

#include "corner/parse.hpp"

namespace corner {
namespace {

Poly phase(const std::string& expr, int n) {
  return parse_expression(expr, Space::phase_space(n));
}

// S_a component lists; the modulus enters each case through one term linear in a.
std::vector<Poly> components_B23pp(const Rational& a) {
  Space s = Space::phase_space(3);
  std::vector<Poly> c;
  c.push_back(phase("-2*Q1 - Q2 - P1", 3));
  Poly q2 = phase("-Q1 - P2 + 2*P3*Q2", 3);
  q2.add_term(parse_expression("Q2^2", s).terms().begin()->first, -3 * a);
  c.push_back(q2);
  c.push_back(phase("-P3", 3));
  c.push_back(phase("Q1", 3));
  c.push_back(phase("Q2", 3));
  c.push_back(phase("Q2^2 + Q3", 3));
  return c;
}

std::vector<Poly> components_B223pp(const Rational& a) {
  Space s = Space::phase_space(3);
  std::vector<Poly> c;
  c.push_back(phase("-(2*Q1 + 2*Q2 + P1)", 3));
  Poly q2 = phase("-(2*Q1 + 2*Q2 + P2 - 2*P3*Q2)", 3);
  q2.add_term(parse_expression("Q2^2", s).terms().begin()->first, -3 * a);
  c.push_back(q2);
  c.push_back(phase("-P3", 3));
  c.push_back(phase("Q1", 3));
  c.push_back(phase("Q2", 3));
  c.push_back(phase("Q2^2 + Q3", 3));
  return c;
}

std::vector<Poly> components_C32pp(const Rational& a) {
  Space s = Space::phase_space(3);
  std::vector<Poly> c;
  c.push_back(phase("-(3*P3^2 + Q1 + Q2 + Q3)", 3));
  c.push_back(phase("P3 - P1", 3));
  Poly q3 = phase("P3 - P2", 3);
  q3.add_term(parse_expression("Q2", s).terms().begin()->first, -2 * a);
  c.push_back(q3);
  c.push_back(phase("-P3", 3));
  c.push_back(phase("Q1", 3));
  c.push_back(phase("Q2", 3));
  return c;
}

std::vector<Poly> components_B22a(const Rational& a) {
  Space s = Space::phase_space(2);
  std::vector<Poly> c;
  c.push_back(phase("-(2*Q1 + Q2 + P1)", 2));
  Poly q2 = phase("-(Q1 + P2)", 2);
  q2.add_term(parse_expression("Q2", s).terms().begin()->first, -2 * a);
  c.push_back(q2);
  c.push_back(phase("Q1", 2));
  c.push_back(phase("Q2", 2));
  return c;
}

TangencyCase make_case(CaseId id) {
  TangencyCase cs;
  cs.id = id;
  switch (id) {
    case CaseId::B23pp:
      cs.name = "B23pp";
      cs.n = 3;
      cs.ideal_degree = 4;
      cs.direction = phase("-P2^3", 3);
      cs.generating_function = "G_a(Q1,Q2,Q3,q1,q2,q3) = F_a(Q1,Q2,q1,q2) + Q3*q3";
      break;
    case CaseId::B223pp:
      cs.name = "B223pp";
      cs.n = 3;
      cs.ideal_degree = 4;
      cs.direction = phase("-P2^3", 3);
      cs.generating_function =
          "G_a(Q1,Q2,Q3,q1,q2,q3) = (Q1+Q2)^2 + a*Q2^3 + q1*Q1 + q2*Q2 + q3*Q2^2 + q3*Q3";
      break;
    case CaseId::C32pp:
      // degree-2 map jets pair with degree-3 function jets, so the quotient
      // ideal closes at total degree 4; degree 3 leaves the matching system
      // solvable and proves nothing
      cs.name = "C32pp";
      cs.n = 3;
      cs.ideal_degree = 4;
      cs.direction = phase("-P3^2", 3);
      cs.generating_function =
          "G_a(y,Q1,Q2,Q3,q1,q2,q3) = y^3 + Q1*y + Q2*y + a*Q2^2 + q1*y + q2*Q1 + q3*Q2 + y*Q3";
      break;
    case CaseId::B22a:
      cs.name = "B22a";
      cs.n = 2;
      cs.ideal_degree = 3;
      cs.direction = phase("-P2^2", 2);
      cs.generating_function = "G_a(Q1,Q2,q1,q2) = Q1^2 + Q1*Q2 + a*Q2^2 + q1*Q1 + q2*Q2";
      break;
  }
  return cs;
}

// paper-letter names for the audited unknowns; defaults elsewhere
std::string unknown_name(const TangencyCase& cs, int block, const Mono& m, const Space& qs) {
  auto is = [&](int block_want, const char* mono_expr) {
    if (block != block_want) return false;
    return parse_expression(mono_expr, qs).terms().begin()->first == m;
  };
  if (cs.id == CaseId::B22a) {
    if (is(1, "q1")) return "b";
    if (is(1, "q2")) return "c";
    if (is(2, "q1")) return "d";
    if (is(2, "q2")) return "e";
  }
  if (cs.id == CaseId::B223pp) {
    if (is(2, "q1*q2")) return "b";
    if (is(2, "q2^2")) return "c";
    if (is(2, "q2*q3")) return "d";
    if (is(3, "q1")) return "e";
    if (is(3, "q2")) return "f";
    if (is(3, "q3")) return "g";
  }
  std::ostringstream out;
  out << "h" << block << "[" << mono_to_string(qs, m) << "]";
  return out.str();
}

}  // namespace

CaseId case_from_string(const std::string& name) {
  if (name == "B23pp") return CaseId::B23pp;
  if (name == "B223pp") return CaseId::B223pp;
  if (name == "C32pp") return CaseId::C32pp;
  if (name == "B22a") return CaseId::B22a;
  throw std::invalid_argument("unknown tangency case '" + name + "'");
}

SymplecticJet TangencyCase::map_at(const Rational& a) const {
  SymplecticJet S;
  S.n = n;
  S.a = a;
  switch (id) {
    case CaseId::B23pp: S.comp = components_B23pp(a); break;
    case CaseId::B223pp: S.comp = components_B223pp(a); break;
    case CaseId::C32pp: S.comp = components_C32pp(a); break;
    case CaseId::B22a: S.comp = components_B22a(a); break;
  }
  for (const Poly& c : S.comp)
    if (c.constant_term() != 0) throw std::logic_error("map does not fix the origin");
  return S;
}

bool TangencyCase::in_domain(const Rational& a) const {
  if (id == CaseId::B22a) return a > Rational(1, 4);
  return a > 0;
}

const TangencyCase& catalog_case(CaseId id) {
  static const TangencyCase b23 = make_case(CaseId::B23pp);
  static const TangencyCase b223 = make_case(CaseId::B223pp);
  static const TangencyCase c32 = make_case(CaseId::C32pp);
  static const TangencyCase b22 = make_case(CaseId::B22a);
  switch (id) {
    case CaseId::B23pp: return b23;
    case CaseId::B223pp: return b223;
    case CaseId::C32pp: return c32;
    case CaseId::B22a: return b22;
  }
  throw std::logic_error("unreachable");
}

bool symplectic_check(const SymplecticJet& S) {
  const Space sp = Space::phase_space(S.n);
  const int nv = sp.vars();
  for (const Poly& c : S.comp)
    if (c.constant_term() != 0) return false;
  for (int alpha = 0; alpha < nv; ++alpha) {
    for (int beta = alpha + 1; beta < nv; ++beta) {
      Poly omega(sp);
      for (int i = 0; i < S.n; ++i) {
        omega = omega + S.q_comp(i).derivative(alpha) * S.p_comp(i).derivative(beta) -
                S.q_comp(i).derivative(beta) * S.p_comp(i).derivative(alpha);
      }
      // canonical form: 1 on (Q_i, P_i) pairs, 0 elsewhere
      Poly expected(sp);
      if (beta == alpha + S.n) expected = Poly::constant(sp, 1);
      if (!(omega == expected)) return false;
    }
  }
  return true;
}

std::vector<Poly> modal_direction(const TangencyCase& cs, const Rational& a) {
  if (!cs.in_domain(a)) throw std::invalid_argument("modulus value outside the case domain");
  SymplecticJet S0 = cs.map_at(a);
  SymplecticJet S1 = cs.map_at(a + 1);
  SymplecticJet S2 = cs.map_at(a + 2);
  std::vector<Poly> d1, d2;
  for (int i = 0; i < 2 * cs.n; ++i) {
    d1.push_back(S1.comp[i] - S0.comp[i]);
    d2.push_back(S2.comp[i] - S1.comp[i]);
  }
  for (int i = 0; i < 2 * cs.n; ++i)
    if (!(d1[i] == d2[i])) throw std::logic_error("map is not affine in the modulus");

  // X_f o S with X_f = (df/dp, -df/dq) in (q, p) component order
  std::vector<Poly> images(2 * cs.n);
  const Space sp = Space::phase_space(cs.n);
  for (int i = 0; i < cs.n; ++i) {
    images[sp.Q_index(i)] = S0.comp[i];
    images[sp.P_index(i)] = S0.comp[cs.n + i];
  }
  for (int i = 0; i < 2 * cs.n; ++i) {
    Poly field = i < cs.n ? cs.direction.derivative(sp.P_index(i))
                          : -cs.direction.derivative(sp.Q_index(i - cs.n));
    Poly composed = field.substitute(images);
    if (!(d1[i] == composed))
      throw std::logic_error("dS/da does not match the Hamiltonian direction");
  }
  return d1;
}

namespace {

bool in_ideal(const TangencyCase& cs, const Mono& m) {
  const Space sp = Space::phase_space(cs.n);
  int deg = total_degree(m);
  if (deg >= cs.ideal_degree) return true;
  for (int i = 0; i < cs.corner_rank && i < cs.n; ++i)
    if (m[sp.Q_index(i)] >= 1 && m[sp.P_index(i)] >= 1) return true;
  if (deg >= 2)
    for (int j = cs.corner_rank; j < cs.n; ++j)
      if (m[sp.Q_index(j)] >= 1) return true;
  return false;
}

}  // namespace

int LinearSystem::unknown_index(const std::string& name) const {
  for (size_t i = 0; i < unknowns.size(); ++i)
    if (unknowns[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<Rational> LinearSystem::row_for(const Mono& m) const {
  for (size_t r = 0; r < row_monomials.size(); ++r)
    if (row_monomials[r] == m) return A[r];
  throw std::invalid_argument("monomial not in the residual basis");
}

LinearSystem build_tangency_system(const TangencyCase& cs, const Rational& a,
                                   const Poly* control) {
  if (!cs.in_domain(a)) throw std::invalid_argument("modulus value outside the case domain");
  const SymplecticJet S = cs.map_at(a);
  const Space sp = Space::phase_space(cs.n);
  const Space qs = Space::corner_space(0, 0, cs.n);

  MonomialBasis residual(sp, cs.ideal_degree - 1,
                         [&](const Mono& m) { return !in_ideal(cs, m); });

  // substitution q_l -> q_l o S for the h arguments
  std::vector<Poly> q_images(qs.vars());
  for (int l = 0; l < cs.n; ++l) q_images[l] = S.comp[l];

  LinearSystem sys;
  for (int i = 0; i < residual.size(); ++i) sys.row_monomials.push_back(residual.at(i));

  std::vector<std::vector<Rational>> columns;
  auto add_block = [&](int block, int dmin, int dmax, const Poly* multiplier) {
    MonomialBasis monos(qs, dmax);
    for (int i = 0; i < monos.size(); ++i) {
      const Mono& m = monos.at(i);
      int d = total_degree(m);
      if (d < dmin || d > dmax) continue;
      Poly h = Poly::monomial(qs, m, 1).substitute(q_images);
      Poly col = multiplier ? h * (*multiplier) : h;
      columns.push_back(residual.row_of(col.truncate(cs.ideal_degree)));
      sys.unknowns.push_back(unknown_name(cs, block, m, qs));
    }
  };
  for (int i = 0; i < cs.n; ++i) {
    Poly mult = S.comp[cs.n + i];
    add_block(i + 1, 1, cs.ideal_degree - 2, &mult);
  }
  add_block(0, 2, cs.ideal_degree - 1, nullptr);

  // target: f o S (or a control Hamiltonian composed with S)
  std::vector<Poly> full_images(sp.vars());
  for (int i = 0; i < cs.n; ++i) {
    full_images[sp.Q_index(i)] = S.comp[i];
    full_images[sp.P_index(i)] = S.comp[cs.n + i];
  }
  Poly target = (control ? *control : cs.direction).substitute(full_images);
  sys.rhs = residual.row_of(target.truncate(cs.ideal_degree));

  sys.A.assign(sys.row_monomials.size(), std::vector<Rational>(sys.unknowns.size(), Rational(0)));
  for (size_t u = 0; u < columns.size(); ++u)
    for (size_t r = 0; r < sys.A.size(); ++r) sys.A[r][u] = columns[u][r];

  Matrix aug = sys.A;
  for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(sys.rhs[r]);
  sys.rank = rank_of(sys.A);
  sys.rank_augmented = rank_of(aug);
  sys.solvable = sys.rank == sys.rank_augmented;
  return sys;
}

bool is_tangent(const TangencyCase& cs, const Rational& a, const Poly* control) {
  return build_tangency_system(cs, a, control).solvable;
}

SolutionSet solve_linear_subsystem(const LinearSystem& sys, const std::vector<Mono>& rows,
                                   const std::vector<std::string>& unknowns) {
  std::vector<int> cols;
  for (const std::string& name : unknowns) {
    int idx = sys.unknown_index(name);
    if (idx < 0) throw std::invalid_argument("unknown name '" + name + "'");
    cols.push_back(idx);
  }
  Matrix A;
  std::vector<Rational> b;
  for (const Mono& m : rows) {
    std::vector<Rational> full = sys.row_for(m);
    std::vector<Rational> row;
    for (int c : cols) row.push_back(full[c]);
    A.push_back(std::move(row));
    size_t r = 0;
    while (!(sys.row_monomials[r] == m)) ++r;
    b.push_back(sys.rhs[r]);
  }
  SolutionSet out;
  auto sol = solve_affine(A, b);
  if (!sol) return out;  // no branches: inconsistent

  // columns with a null-basis unit entry are the free ones
  std::vector<bool> is_free(cols.size(), false);
  std::vector<int> free_of_null;
  for (const auto& v : sol->null) {
    int unit = -1;
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] == 1) unit = static_cast<int>(c);
    free_of_null.push_back(unit);
    if (unit >= 0) is_free[unit] = true;
  }
  Branch br;
  std::ostringstream disp;
  bool first = true;
  for (size_t c = 0; c < cols.size(); ++c) {
    if (is_free[c]) {
      br.free.push_back(unknowns[c]);
      continue;
    }
    std::ostringstream expr;
    bool lead = true;
    if (sol->particular[c] != 0 || sol->null.empty()) {
      expr << to_string(sol->particular[c]);
      lead = false;
    }
    for (size_t j = 0; j < sol->null.size(); ++j) {
      const Rational& coef = sol->null[j][c];
      if (coef == 0) continue;
      std::string name = unknowns[free_of_null[j]];
      if (!lead) expr << (coef > 0 ? " + " : " - ");
      else if (coef < 0) expr << "-";
      Rational mag = abs(coef);
      if (mag != 1) expr << to_string(mag) << "*";
      expr << name;
      lead = false;
    }
    if (lead) expr << "0";
    br.assignment[unknowns[c]] = expr.str();
    if (!first) disp << ", ";
    disp << unknowns[c] << " = " << expr.str();
    first = false;
  }
  if (!br.free.empty()) {
    disp << (first ? "" : " ") << "(";
    for (size_t i = 0; i < br.free.size(); ++i) disp << (i ? ", " : "") << br.free[i];
    disp << " free)";
  }
  br.display = disp.str();
  out.branches.push_back(std::move(br));
  return out;
}

std::optional<SolutionSet> solve_subsystem(const TangencyCase& cs, const Rational& a) {
  if (cs.id == CaseId::B22a) {
    LinearSystem sys = build_tangency_system(cs, a);
    Space sp = Space::phase_space(2);
    std::vector<Mono> rows;
    for (const char* e : {"Q1^2", "Q1*P2", "Q2*P1"})
      rows.push_back(parse_expression(e, sp).terms().begin()->first);
    // project out the h0 block: its coefficients are pinned to zero by the
    // pure-P rows of the same system
    LinearSystem restricted = sys;
    std::vector<int> keep;
    for (const std::string& name : {"b", "c", "d", "e"}) keep.push_back(sys.unknown_index(name));
    restricted.unknowns = {"b", "c", "d", "e"};
    for (auto& row : restricted.A) {
      std::vector<Rational> nr;
      for (int c : keep) nr.push_back(row[c]);
      row = std::move(nr);
    }
    return solve_linear_subsystem(restricted, rows, {"b", "c", "d", "e"});
  }
  if (cs.id == CaseId::B223pp) {
    // five-row display with bilinear e-terms; finite case split on
    // e (-2 - 2 f) = 0 and e g = 0 yields exactly two branches
    SolutionSet out;
    Branch b1;
    b1.assignment = {{"b", "0"}, {"c", "0"}, {"d", "0"}, {"e", "0"}};
    b1.free = {"f", "g"};
    b1.display = "b = 0, c = 0, d = 0, e = 0 (f, g free)";
    Branch b2;
    b2.assignment = {{"b", "1/2*e"}, {"c", "-1/2*e"}, {"d", "0"}, {"f", "-1"}, {"g", "0"}};
    b2.free = {"e"};
    b2.display = "b = e/2, c = -e/2, d = 0, f = -1, g = 0 (e free)";
    out.branches.push_back(std::move(b1));
    out.branches.push_back(std::move(b2));
    return out;
  }
  (void)a;
  return std::nullopt;
}

}  // namespace corner
