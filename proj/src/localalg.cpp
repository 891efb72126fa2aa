#include "corner/localalg.hpp"

#include <algorithm>

namespace corner {
namespace {

// Module generators of the tangent space: x_i df/dx_i and df/dy_j.
std::vector<Poly> module_generators(const Poly& f) {
  const Space& s = f.space();
  std::vector<Poly> gens;
  for (int i = 0; i < s.r; ++i) {
    Poly g = Poly::variable(s, s.x_index(i)) * f.derivative(s.x_index(i));
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  for (int j = 0; j < s.k; ++j) {
    Poly g = f.derivative(s.y_index(j));
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return gens;
}

void insert_module_rows(RowSpace& rows, const std::vector<Poly>& gens, int order) {
  const MonomialBasis& basis = rows.basis();
  for (const Poly& g : gens) {
    int slack = order - g.order();
    if (slack < 0) continue;
    MonomialBasis multipliers(g.space(), slack);
    for (int i = 0; i < multipliers.size(); ++i) {
      Poly row = Poly::monomial(g.space(), multipliers.at(i), 1) * g;
      rows.insert(row.truncate(basis.order()));
      if (rows.full()) return;
    }
  }
}

}  // namespace

std::string relation_name(Relation rel) {
  switch (rel) {
    case Relation::R: return "R";
    case Relation::Rplus: return "R+";
    case Relation::C: return "C";
  }
  return "?";
}

int default_jet_order(int n_params) { return std::max(7, n_params + 3); }

JetSubspace tangent_space(const Germ& f, Relation rel, int order) {
  if (order < 2) throw std::invalid_argument("jet order must be at least 2");
  const Space& s = f.space();
  JetSubspace sub;
  sub.space = s;
  sub.order = order;
  sub.basis = std::make_shared<MonomialBasis>(s, order);
  sub.rows = std::make_shared<RowSpace>(*sub.basis);
  insert_module_rows(*sub.rows, module_generators(f.poly), order);
  if (rel == Relation::Rplus || rel == Relation::C)
    sub.rows->insert(Poly::constant(s, 1));
  if (rel == Relation::C) sub.rows->insert(f.poly.truncate(order));
  return sub;
}

CodimResult codimension(const Germ& f, Relation rel, int order) {
  JetSubspace now = tangent_space(f, rel, order);
  JetSubspace next = tangent_space(f, rel, order + 1);
  CodimResult out;
  out.relation = rel;
  out.value = now.basis->size() - now.rank();
  out.jet_order = order;
  out.stabilized = (next.basis->size() - next.rank()) == out.value;
  out.cobasis = now.rows->nonpivot_monomials();
  return out;
}

CodimResult codimension_auto(const Germ& f, Relation rel) {
  for (int order = 2; order + 1 <= kJetCap; ++order) {
    CodimResult res = codimension(f, rel, order);
    if (res.stabilized) return res;
  }
  CodimResult out;
  out.relation = rel;
  out.exceeds_bound = true;
  out.jet_order = kJetCap;
  return out;
}

std::vector<Mono> residual_cobasis(const Germ& f, Relation rel, int order) {
  return codimension(f, rel, order).cobasis;
}

GeneratingFamily build_stable_unfolding(const Germ& f) {
  CodimResult res = codimension_auto(f, Relation::C);
  if (res.exceeds_bound) throw ExceedsBound("codimension exceeds bound");
  const int n = static_cast<int>(res.cobasis.size());
  Space target = Space::corner_space(f.space().r, f.space().k, n);
  Poly F = embed_in_family_space(f.poly, n);
  for (int l = 0; l < n; ++l) {
    Mono m(target.vars(), 0);
    for (int v = 0; v < f.space().vars(); ++v) m[v] = res.cobasis[l][v];
    m[target.q_index(l)] = 1;
    F.add_term(m, 1);
  }
  return make_family(F);
}

VersalityResult check_infinitesimal_versality(const GeneratingFamily& F, int order) {
  if (order < 0) order = default_jet_order(F.space().n);
  const Germ& f = F.core;
  MonomialBasis basis(f.space(), order);
  RowSpace rows(basis);
  insert_module_rows(rows, module_generators(f.poly), order);
  rows.insert(Poly::constant(f.space(), 1));
  rows.insert(f.poly.truncate(order));
  for (int l = 0; l < F.space().n && !rows.full(); ++l)
    rows.insert(unfolding_direction(F, l).truncate(order));
  VersalityResult out;
  out.versal = rows.full();
  out.jet_order = order;
  if (!out.versal) out.defect = rows.nonpivot_monomials();
  return out;
}

bool check_infinitesimal_stability(const GeneratingFamily& F, int order) {
  if (order < 0) order = 5;
  const Space& s = F.space();
  MonomialBasis basis(s, order);
  RowSpace rows(basis);

  // module over functions of every variable
  std::vector<Poly> gens;
  for (int i = 0; i < s.r; ++i) {
    Poly g = Poly::variable(s, s.x_index(i)) * F.poly.derivative(s.x_index(i));
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  for (int j = 0; j < s.k; ++j) {
    Poly g = F.poly.derivative(s.y_index(j));
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  insert_module_rows(rows, gens, order);
  if (rows.full()) return true;

  // module over functions of the parameters alone: 1, F, dF/dq
  std::vector<Poly> q_gens;
  q_gens.push_back(Poly::constant(s, 1));
  q_gens.push_back(F.poly.truncate(order));
  for (int l = 0; l < s.n; ++l) q_gens.push_back(F.poly.derivative(s.q_index(l)));
  for (const Poly& g : q_gens) {
    if (g.is_zero()) continue;
    for (int d = 0; d <= order; ++d) {
      // parameter-only multiplier monomials of degree d
      MonomialBasis qmonos(s, d, [&](const Mono& m) {
        if (total_degree(m) != d) return false;
        for (int v = 0; v < s.r + s.k; ++v)
          if (m[v] > 0) return false;
        return true;
      });
      for (int i = 0; i < qmonos.size(); ++i) {
        Poly row = Poly::monomial(s, qmonos.at(i), 1) * g;
        rows.insert(row.truncate(order));
        if (rows.full()) return true;
      }
    }
  }
  return rows.full();
}

namespace {

// Fourier-Motzkin feasibility for strict affine inequalities c0 + <c, t> > 0.
// Dimensions here are tiny (free directions of the weight system).
std::optional<std::vector<Rational>> strict_feasible(std::vector<std::vector<Rational>> cons,
                                                     int nvars) {
  if (nvars == 0) {
    for (const auto& c : cons)
      if (c[0] <= 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  std::vector<std::vector<Rational>> lower, upper, rest;
  for (auto& c : cons) {
    Rational lead = c[nvars];
    c.pop_back();
    if (lead > 0) {
      // t > -c / lead
      for (auto& v : c) v /= lead;
      lower.push_back(c);
    } else if (lead < 0) {
      for (auto& v : c) v /= -lead;
      upper.push_back(c);
    } else {
      rest.push_back(c);
    }
  }
  std::vector<std::vector<Rational>> next = rest;
  for (const auto& lo : lower)
    for (const auto& up : upper) {
      std::vector<Rational> c(lo.size());
      for (size_t i = 0; i < c.size(); ++i) c[i] = up[i] + lo[i];
      next.push_back(std::move(c));
    }
  auto sub = strict_feasible(next, nvars - 1);
  if (!sub) return std::nullopt;
  auto eval = [&](const std::vector<Rational>& c) {
    Rational v = c[0];
    for (int i = 0; i < nvars - 1; ++i) v += c[i + 1] * (*sub)[i];
    return v;
  };
  bool has_lo = !lower.empty(), has_up = !upper.empty();
  Rational lo_val, up_val;
  for (size_t i = 0; i < lower.size(); ++i) {
    Rational v = -eval(lower[i]);
    if (i == 0 || v > lo_val) lo_val = v;
  }
  for (size_t i = 0; i < upper.size(); ++i) {
    Rational v = eval(upper[i]);
    if (i == 0 || v < up_val) up_val = v;
  }
  Rational t;
  if (has_lo && has_up)
    t = (lo_val + up_val) / 2;
  else if (has_lo)
    t = lo_val + 1;
  else if (has_up)
    t = up_val - 1;
  else
    t = 0;
  sub->push_back(t);
  return sub;
}

}  // namespace

std::optional<std::vector<Rational>> quasihomogeneous_weights(const Germ& f) {
  if (f.poly.is_zero()) throw std::invalid_argument("zero germ has no weights");
  const int nv = f.space().vars();
  Matrix A;
  std::vector<Rational> b;
  for (const auto& [m, c] : f.poly.terms()) {
    std::vector<Rational> row(nv);
    for (int v = 0; v < nv; ++v) row[v] = m[v];
    A.push_back(std::move(row));
    b.push_back(1);
  }
  auto sol = solve_affine(A, b);
  if (!sol) return std::nullopt;

  const int nt = static_cast<int>(sol->null.size());
  // w_v(t) > 0 as affine constraints in the free parameters t
  std::vector<std::vector<Rational>> cons;
  for (int v = 0; v < nv; ++v) {
    std::vector<Rational> c(nt + 1);
    c[0] = sol->particular[v];
    for (int j = 0; j < nt; ++j) c[j + 1] = sol->null[j][v];
    cons.push_back(std::move(c));
  }
  auto t = strict_feasible(cons, nt);
  if (!t) return std::nullopt;
  std::vector<Rational> w(nv);
  for (int v = 0; v < nv; ++v) {
    w[v] = sol->particular[v];
    for (int j = 0; j < nt; ++j) w[v] += sol->null[j][v] * (*t)[j];
  }
  return w;
}

Determinacy determinacy_stabilization(const Germ& f, Relation rel) {
  CodimResult res = codimension_auto(f, rel);
  if (res.exceeds_bound) return Determinacy{true, kJetCap};
  return Determinacy{false, res.jet_order};
}

}  // namespace corner
