#include "corner/caustic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "corner/dpoly.hpp"
#include "corner/jets.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace corner {

StratumSpec StratumSpec::make(int r, std::vector<int> sigma) {
  std::sort(sigma.begin(), sigma.end());
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 0 || sigma[i] >= r) throw std::invalid_argument("stratum index out of range");
    if (i > 0 && sigma[i] == sigma[i - 1]) throw std::invalid_argument("repeated stratum index");
  }
  return StratumSpec{r, std::move(sigma)};
}

std::vector<int> StratumSpec::complement() const {
  std::vector<int> out;
  for (int i = 0; i < r; ++i)
    if (std::find(sigma.begin(), sigma.end(), i) == sigma.end()) out.push_back(i);
  return out;
}

std::string StratumSpec::str() const {
  if (sigma.empty()) return "o";
  std::string s;
  for (int i : sigma) s += std::to_string(i + 1);
  return s;
}

EquationSystem stratum_equations(const GeneratingFamily& F, const StratumSpec& sigma) {
  const Space& s = F.space();
  if (sigma.r != s.r) throw std::invalid_argument("stratum rank does not match the family");
  EquationSystem out;
  for (int i : sigma.sigma) out.zero.push_back(Poly::variable(s, s.x_index(i)));
  for (int i : sigma.complement()) out.critical.push_back(F.poly.derivative(s.x_index(i)));
  for (int j = 0; j < s.k; ++j) out.critical.push_back(F.poly.derivative(s.y_index(j)));
  for (int i : sigma.complement()) out.nonneg_x.push_back(s.x_index(i));
  return out;
}

namespace {

Rational exact(double v) { return Rational(v); }  // binary doubles convert exactly

struct SweepSetup {
  const GeneratingFamily* F = nullptr;
  char kind = 'C';
  std::vector<int> sigma, tau;
  std::string label;
  std::vector<int> zero_vars;  // pinned corner variables
  std::vector<int> free_vars;  // swept corner variables, then internal ones
  std::vector<bool> free_is_corner;
  std::vector<Poly> crit;
  std::vector<std::vector<Poly>> hess;  // fold components only
  std::vector<Poly> sign_crit;          // optional quasi-caustic sign filter
  bool with_hessian = false;
  bool strict_interior = false;
};

void check_affine_in_q(const GeneratingFamily& F) {
  const Space& s = F.space();
  if (F.poly.degree_in_block(s.q_index(0), s.n) > 1)
    throw std::invalid_argument("sweep requires a family affine in the parameters");
}

SweepSetup fold_setup(const GeneratingFamily& F, const StratumSpec& sigma) {
  check_affine_in_q(F);
  const Space& s = F.space();
  SweepSetup su;
  su.F = &F;
  su.kind = 'C';
  su.sigma = sigma.sigma;
  su.label = "C_" + sigma.str();
  su.strict_interior = true;
  su.with_hessian = true;
  for (int i : sigma.sigma) su.zero_vars.push_back(s.x_index(i));
  for (int i : sigma.complement()) {
    su.free_vars.push_back(s.x_index(i));
    su.free_is_corner.push_back(true);
  }
  for (int j = 0; j < s.k; ++j) {
    su.free_vars.push_back(s.y_index(j));
    su.free_is_corner.push_back(false);
  }
  for (int i : sigma.complement()) su.crit.push_back(F.poly.derivative(s.x_index(i)));
  for (int j = 0; j < s.k; ++j) su.crit.push_back(F.poly.derivative(s.y_index(j)));
  const size_t m = su.free_vars.size();
  su.hess.assign(m, std::vector<Poly>(m, Poly(s)));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      su.hess[a][b] = F.poly.derivative(su.free_vars[a]).derivative(su.free_vars[b]);
  return su;
}

SweepSetup quasi_setup(const GeneratingFamily& F, const StratumSpec& sigma,
                       const StratumSpec& tau, bool sign_constraint) {
  check_affine_in_q(F);
  if (sigma.sigma == tau.sigma) throw std::invalid_argument("quasi-caustic needs distinct strata");
  const Space& s = F.space();
  SweepSetup su;
  su.F = &F;
  su.kind = 'Q';
  su.sigma = sigma.sigma;
  su.tau = tau.sigma;
  su.label = "Q_" + sigma.str() + "_" + tau.str();
  std::vector<int> uni, inter;
  for (int i = 0; i < s.r; ++i) {
    bool in_s = std::find(sigma.sigma.begin(), sigma.sigma.end(), i) != sigma.sigma.end();
    bool in_t = std::find(tau.sigma.begin(), tau.sigma.end(), i) != tau.sigma.end();
    if (in_s || in_t) uni.push_back(i);
    if (in_s && in_t) inter.push_back(i);
  }
  for (int i : uni) su.zero_vars.push_back(s.x_index(i));
  for (int i = 0; i < s.r; ++i)
    if (std::find(uni.begin(), uni.end(), i) == uni.end()) {
      su.free_vars.push_back(s.x_index(i));
      su.free_is_corner.push_back(true);
    }
  for (int j = 0; j < s.k; ++j) {
    su.free_vars.push_back(s.y_index(j));
    su.free_is_corner.push_back(false);
  }
  for (int i = 0; i < s.r; ++i)
    if (std::find(inter.begin(), inter.end(), i) == inter.end())
      su.crit.push_back(F.poly.derivative(s.x_index(i)));
  for (int j = 0; j < s.k; ++j) su.crit.push_back(F.poly.derivative(s.y_index(j)));
  if (sign_constraint)
    for (int i : inter) su.sign_crit.push_back(F.poly.derivative(s.x_index(i)));
  return su;
}

// ---------------------------------------------------------------------------
// exact per-witness data

struct PartialEval {
  // affine representation c(v) + sum M(v) q of every critical equation
  Matrix M;
  std::vector<Rational> rhs;  // -c(v)
};

PartialEval partial_eval(const SweepSetup& su, const std::vector<Rational>& v) {
  const Space& s = su.F->space();
  Space qs = Space::corner_space(0, 0, s.n);
  std::vector<Poly> images(s.vars());
  for (int var = 0; var < s.r + s.k; ++var) images[var] = Poly::constant(qs, 0);
  for (int z : su.zero_vars) images[z] = Poly::constant(qs, 0);
  for (size_t i = 0; i < su.free_vars.size(); ++i)
    images[su.free_vars[i]] = Poly::constant(qs, v[i]);
  for (int l = 0; l < s.n; ++l) images[s.q_index(l)] = Poly::variable(qs, l);

  PartialEval pe;
  for (const Poly& e : su.crit) {
    Poly p = e.substitute(images);
    std::vector<Rational> row(s.n, Rational(0));
    for (int l = 0; l < s.n; ++l) {
      Mono m(s.n, 0);
      m[l] = 1;
      row[l] = p.coeff(m);
    }
    pe.M.push_back(std::move(row));
    pe.rhs.push_back(-p.constant_term());
  }
  return pe;
}

Poly hessian_det_in_q(const SweepSetup& su, const std::vector<Rational>& v) {
  const Space& s = su.F->space();
  Space qs = Space::corner_space(0, 0, s.n);
  std::vector<Poly> images(s.vars());
  for (int var = 0; var < s.r + s.k; ++var) images[var] = Poly::constant(qs, 0);
  for (int z : su.zero_vars) images[z] = Poly::constant(qs, 0);
  for (size_t i = 0; i < su.free_vars.size(); ++i)
    images[su.free_vars[i]] = Poly::constant(qs, v[i]);
  for (int l = 0; l < s.n; ++l) images[s.q_index(l)] = Poly::variable(qs, l);

  const size_t m = su.free_vars.size();
  std::vector<std::vector<Poly>> H(m, std::vector<Poly>(m, Poly(qs)));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) H[a][b] = su.hess[a][b].substitute(images);

  // Laplace expansion; matrices here are at most 3x3
  std::function<Poly(const std::vector<std::vector<Poly>>&)> det =
      [&](const std::vector<std::vector<Poly>>& mat) -> Poly {
    size_t sz = mat.size();
    if (sz == 0) return Poly::constant(qs, 1);
    if (sz == 1) return mat[0][0];
    Poly sum(qs);
    int sign = 1;
    for (size_t c = 0; c < sz; ++c) {
      std::vector<std::vector<Poly>> minor(sz - 1, std::vector<Poly>(sz - 1, Poly(qs)));
      for (size_t i = 1; i < sz; ++i) {
        size_t jc = 0;
        for (size_t j = 0; j < sz; ++j) {
          if (j == c) continue;
          minor[i - 1][jc++] = mat[i][j];
        }
      }
      sum = sum + mat[0][c] * det(minor) * Rational(sign);
      sign = -sign;
    }
    return sum;
  };
  return det(H);
}

// ---------------------------------------------------------------------------
// numeric helpers

std::vector<double> real_roots(const std::vector<double>& coeff, double lo, double hi,
                               int samples) {
  auto eval = [&](double x) {
    double s = 0.0;
    for (size_t i = coeff.size(); i-- > 0;) s = s * x + coeff[i];
    return s;
  };
  bool nonconst = false;
  for (size_t i = 1; i < coeff.size(); ++i)
    if (coeff[i] != 0.0) nonconst = true;
  std::vector<double> roots;
  if (!nonconst) return roots;
  double prev_x = lo, prev_f = eval(lo);
  for (int i = 1; i <= samples; ++i) {
    double x = lo + (hi - lo) * i / samples;
    double f = eval(x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if (f != 0.0 && ((prev_f < 0) != (f < 0))) {
      double a = prev_x, b = x, fa = prev_f;
      for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b), fm = eval(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if ((fa < 0) != (fm < 0))
          b = m;
        else {
          a = m;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = f;
  }
  if (eval(hi) == 0.0) roots.push_back(hi);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              roots.end());
  return roots;
}

struct CompiledNumeric {
  // crit_i = A_i(x, y) + sum_j B_ij(x, y) q_j, Hessian likewise
  std::vector<DPoly> A;
  std::vector<std::vector<DPoly>> B;
  std::vector<std::vector<DPoly>> H0;
  std::vector<std::vector<std::vector<DPoly>>> Hq;
  std::vector<DPoly> sign_crit;
};

CompiledNumeric compile_numeric(const SweepSetup& su) {
  const Space& s = su.F->space();
  CompiledNumeric cn;
  auto q_zero = [&](const Poly& p) {
    std::vector<Poly> images = Poly::identity_images(s);
    for (int l = 0; l < s.n; ++l) images[s.q_index(l)] = Poly::constant(s, 0);
    return p.substitute(images);
  };
  for (const Poly& e : su.crit) {
    cn.A.push_back(DPoly::compile(q_zero(e)));
    std::vector<DPoly> row;
    for (int l = 0; l < s.n; ++l) row.push_back(DPoly::compile(e.derivative(s.q_index(l))));
    cn.B.push_back(std::move(row));
  }
  const size_t m = su.hess.size();
  cn.H0.assign(m, {});
  cn.Hq.assign(m, {});
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      cn.H0[a].push_back(DPoly::compile(q_zero(su.hess[a][b])));
      std::vector<DPoly> hq;
      for (int l = 0; l < s.n; ++l)
        hq.push_back(DPoly::compile(su.hess[a][b].derivative(s.q_index(l))));
      cn.Hq[a].push_back(std::move(hq));
    }
  for (const Poly& e : su.sign_crit) cn.sign_crit.push_back(DPoly::compile(e));
  return cn;
}

double det_numeric(std::vector<std::vector<double>> m) {
  const size_t n = m.size();
  double det = 1.0;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    for (size_t i = c + 1; i < n; ++i)
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    if (m[p][c] == 0.0) return 0.0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      double f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

// Gaussian solve of an m x n system; false when rank-deficient or inconsistent.
bool solve_numeric(std::vector<std::vector<double>> M, std::vector<double> b,
                   std::vector<double>& out) {
  const size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    for (size_t i = rank; i < rows; ++i)
      if (std::abs(M[i][c]) > std::abs(M[p][c])) p = i;
    if (std::abs(M[p][c]) < 1e-12) continue;
    std::swap(M[p], M[rank]);
    std::swap(b[p], b[rank]);
    double lead = M[rank][c];
    for (size_t j = c; j < cols; ++j) M[rank][j] /= lead;
    b[rank] /= lead;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      double f = M[i][c];
      if (f == 0.0) continue;
      for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  if (rank < cols) return false;
  for (size_t i = rank; i < rows; ++i)
    if (std::abs(b[i]) > 1e-8) return false;
  out.assign(cols, 0.0);
  for (size_t i = 0; i < rank; ++i) out[pivot_col[i]] = b[i];
  return true;
}

// ---------------------------------------------------------------------------

struct RawPoint {
  std::vector<int> key;
  int branch = 0;
  GeoPoint pt;
};

struct Frame {
  std::vector<std::vector<Rational>> axis_values;  // witness axes, then t axes
  int v_axes = 0;
  int t_axes = 0;
  bool solve_last_v = false;  // fold sweep with fully determined q
  int expected_null = 0;
};

std::vector<Rational> axis_for_var(const SweepSetup& su, size_t i, const Rational& WB,
                                   int res) {
  std::vector<Rational> vals;
  if (su.free_is_corner[i]) {
    int j0 = su.strict_interior ? 1 : 0;
    for (int j = j0; j <= res; ++j) vals.push_back(WB * j / res);
  } else {
    for (int j = 0; j <= res; ++j) vals.push_back(-WB + 2 * WB * j / res);
  }
  return vals;
}

double vec_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

Component run_sweep(const SweepSetup& su, const SweepConfig& cfg, bool parallel) {
  const Space& s = su.F->space();
  const int n = s.n;
  if (static_cast<int>(cfg.window.size()) != n)
    throw std::invalid_argument("window dimension does not match the parameter count");
  if (cfg.resolution < 2) throw std::invalid_argument("resolution too small");
  const int res = cfg.resolution;

  Component comp;
  comp.label = su.label;
  comp.kind = su.kind;
  comp.sigma = su.sigma;
  comp.tau = su.tau;

  if (su.with_hessian && su.free_vars.empty()) return comp;  // no Hessian to degenerate

  double wmax = 1.0;
  for (auto& w : cfg.window) wmax = std::max({wmax, std::abs(w[0]), std::abs(w[1])});
  Rational WB = cfg.witness_bound > 0 ? exact(cfg.witness_bound) : exact(2 * wmax + 1);

  // probe the generic null dimension of the affine system at an irregular point
  int expected_null;
  {
    std::vector<Rational> probe;
    for (size_t i = 0; i < su.free_vars.size(); ++i)
      probe.push_back(WB * Rational(2 * static_cast<int>(i) + 3, 7 * static_cast<int>(i) + 11));
    PartialEval pe = partial_eval(su, probe);
    auto sol = solve_affine(pe.M, pe.rhs);
    expected_null = sol ? static_cast<int>(sol->null.size()) : n - rank_of(pe.M);
  }

  Frame fr;
  fr.expected_null = expected_null;
  fr.v_axes = static_cast<int>(su.free_vars.size());
  for (size_t i = 0; i < su.free_vars.size(); ++i)
    fr.axis_values.push_back(axis_for_var(su, i, WB, res));
  if (su.kind == 'Q') {
    fr.t_axes = expected_null;
  } else if (expected_null >= 1) {
    fr.t_axes = expected_null - 1;  // last t coordinate is solved
  } else if (fr.v_axes >= 1) {
    fr.solve_last_v = true;  // q determined; solve the determinant along the last axis
  }

  // key axes: witness axes (minus the solved one) plus enumerated t axes
  int key_v = fr.v_axes - (fr.solve_last_v ? 1 : 0);
  std::vector<int> key_sizes;
  for (int i = 0; i < key_v; ++i) key_sizes.push_back(static_cast<int>(fr.axis_values[i].size()));
  for (int t = 0; t < fr.t_axes; ++t) key_sizes.push_back(res + 1);
  long total = 1;
  for (int sz : key_sizes) total *= sz;

  const double lo_w[2] = {0, 0};
  (void)lo_w;
  CompiledNumeric cn = fr.solve_last_v ? compile_numeric(su) : CompiledNumeric{};
  CompiledNumeric cn_res = compile_numeric(su);  // residual evaluation

  auto in_window = [&](const std::vector<double>& q) {
    for (int l = 0; l < n; ++l) {
      double margin = 1e-9 * (1 + std::abs(q[l]));
      if (q[l] < cfg.window[l][0] - margin || q[l] > cfg.window[l][1] + margin) return false;
    }
    return true;
  };

  auto make_point = [&](const std::vector<double>& wit_free, const std::vector<double>& q,
                        const std::vector<int>& key, int branch) -> std::optional<RawPoint> {
    if (!in_window(q)) return std::nullopt;
    std::vector<double> full(s.r + s.k, 0.0);
    for (size_t i = 0; i < su.free_vars.size(); ++i) full[su.free_vars[i]] = wit_free[i];
    // residuals of the defining equations
    std::vector<double> vars(s.vars(), 0.0);
    for (int v = 0; v < s.r + s.k; ++v) vars[v] = full[v];
    for (int l = 0; l < n; ++l) vars[s.r + s.k + l] = q[l];
    double resid = 0.0;
    for (size_t e = 0; e < cn_res.A.size(); ++e) {
      double val = cn_res.A[e].eval(vars.data());
      for (int l = 0; l < n; ++l) val += cn_res.B[e][l].eval(vars.data()) * q[l];
      resid = std::max(resid, std::abs(val));
    }
    if (su.with_hessian) {
      const size_t m = su.free_vars.size();
      std::vector<std::vector<double>> H(m, std::vector<double>(m, 0.0));
      for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
          double val = cn_res.H0[a][b].eval(vars.data());
          for (int l = 0; l < n; ++l) val += cn_res.Hq[a][b][l].eval(vars.data()) * q[l];
          H[a][b] = val;
        }
      resid = std::max(resid, std::abs(det_numeric(H)));
    }
    for (const DPoly& sc : cn_res.sign_crit)
      if (sc.eval(vars.data()) < -cfg.eps) return std::nullopt;
    RawPoint rp;
    rp.key = key;
    rp.branch = branch;
    rp.pt.q = q;
    rp.pt.witness = full;
    rp.pt.residual = resid;
    return rp;
  };

  auto process = [&](long flat) -> std::vector<RawPoint> {
    std::vector<RawPoint> out;
    std::vector<int> key(key_sizes.size(), 0);
    long rem = flat;
    for (size_t i = key_sizes.size(); i-- > 0;) {
      key[i] = static_cast<int>(rem % key_sizes[i]);
      rem /= key_sizes[i];
    }

    if (fr.solve_last_v) {
      // q fully determined by the witness; chase the determinant along the last axis
      std::vector<double> v(fr.v_axes, 0.0);
      for (int i = 0; i < key_v; ++i) v[i] = to_double(fr.axis_values[i][key[i]]);
      const auto& last_axis = fr.axis_values[fr.v_axes - 1];
      double axis_lo = to_double(last_axis.front()), axis_hi = to_double(last_axis.back());
      const int samples = 4 * res;
      auto q_at = [&](double w, std::vector<double>& q) {
        v[fr.v_axes - 1] = w;
        std::vector<double> vars(s.vars(), 0.0);
        for (size_t i = 0; i < su.free_vars.size(); ++i) vars[su.free_vars[i]] = v[i];
        std::vector<std::vector<double>> M(cn.A.size(), std::vector<double>(n, 0.0));
        std::vector<double> b(cn.A.size(), 0.0);
        for (size_t e = 0; e < cn.A.size(); ++e) {
          b[e] = -cn.A[e].eval(vars.data());
          for (int l = 0; l < n; ++l) M[e][l] = cn.B[e][l].eval(vars.data());
        }
        return solve_numeric(M, b, q);
      };
      auto g_at = [&](double w, double& g) {
        std::vector<double> q;
        if (!q_at(w, q)) return false;
        std::vector<double> vars(s.vars(), 0.0);
        for (size_t i = 0; i < su.free_vars.size(); ++i) vars[su.free_vars[i]] = v[i];
        for (int l = 0; l < n; ++l) vars[s.r + s.k + l] = q[l];
        const size_t m = su.free_vars.size();
        std::vector<std::vector<double>> H(m, std::vector<double>(m, 0.0));
        for (size_t a = 0; a < m; ++a)
          for (size_t bb = 0; bb < m; ++bb) {
            double val = cn.H0[a][bb].eval(vars.data());
            for (int l = 0; l < n; ++l) val += cn.Hq[a][bb][l].eval(vars.data()) * q[l];
            H[a][bb] = val;
          }
        g = det_numeric(H);
        return true;
      };
      int branch = 0;
      double prev_w = axis_lo, prev_g = 0.0;
      bool prev_ok = g_at(axis_lo, prev_g);
      for (int i = 1; i <= samples; ++i) {
        double w = axis_lo + (axis_hi - axis_lo) * i / samples;
        double g = 0.0;
        bool ok = g_at(w, g);
        if (prev_ok && ok && prev_g != 0.0 && g != 0.0 && (prev_g < 0) != (g < 0)) {
          double a = prev_w, b = w, fa = prev_g;
          for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a + b), fm;
            if (!g_at(mid, fm)) break;
            if (fm == 0.0) {
              a = b = mid;
              break;
            }
            if ((fa < 0) != (fm < 0))
              b = mid;
            else {
              a = mid;
              fa = fm;
            }
          }
          double root = 0.5 * (a + b);
          std::vector<double> q;
          if (q_at(root, q)) {
            std::vector<double> wit(v.begin(), v.end());
            wit[fr.v_axes - 1] = root;
            bool interior_ok = true;
            if (su.strict_interior)
              for (size_t fi = 0; fi < su.free_vars.size(); ++fi)
                if (su.free_is_corner[fi] && wit[fi] <= 0) interior_ok = false;
            if (interior_ok)
              if (auto rp = make_point(wit, q, key, branch)) out.push_back(std::move(*rp));
            ++branch;
          }
        }
        prev_w = w;
        prev_g = g;
        prev_ok = ok;
      }
      return out;
    }

    // exact path: witness values from the key, then affine solve in q
    std::vector<Rational> v(fr.v_axes, Rational(0));
    for (int i = 0; i < fr.v_axes; ++i) v[i] = fr.axis_values[i][key[i]];
    PartialEval pe = partial_eval(su, v);
    auto sol = solve_affine(pe.M, pe.rhs);
    if (!sol) return out;
    if (static_cast<int>(sol->null.size()) != fr.expected_null) return out;  // degenerate slice

    // normalize null directions to unit max entry
    for (auto& dir : sol->null) {
      Rational mx(0);
      for (const Rational& c : dir)
        if (abs(c) > mx) mx = abs(c);
      if (mx != 0)
        for (Rational& c : dir) c /= mx;
    }
    Rational q0max(0);
    for (const Rational& c : sol->particular)
      if (abs(c) > q0max) q0max = abs(c);
    Rational TB = 2 * (exact(wmax) + q0max) + 1;

    std::vector<double> wit(fr.v_axes);
    for (int i = 0; i < fr.v_axes; ++i) wit[i] = to_double(v[i]);

    if (su.kind == 'Q') {
      // enumerate the whole affine piece
      std::vector<Rational> t(fr.t_axes, Rational(0));
      for (int ti = 0; ti < fr.t_axes; ++ti) {
        int idx = key[fr.v_axes + ti];
        t[ti] = -TB + 2 * TB * idx / res;
      }
      std::vector<double> q(n, 0.0);
      for (int l = 0; l < n; ++l) {
        Rational val = sol->particular[l];
        for (int ti = 0; ti < fr.t_axes; ++ti) val += sol->null[ti][l] * t[ti];
        q[l] = to_double(val);
      }
      if (auto rp = make_point(wit, q, key, 0)) out.push_back(std::move(*rp));
      return out;
    }

    // fold component with a free affine direction: restrict the determinant
    // to the line of the last t coordinate and chase its roots
    Poly det_q = hessian_det_in_q(su, v);
    Space ts = Space::corner_space(0, 0, std::max(fr.expected_null, 1));
    std::vector<Poly> q_images(n);
    for (int l = 0; l < n; ++l) {
      Poly img = Poly::constant(ts, sol->particular[l]);
      for (int ti = 0; ti < fr.expected_null; ++ti)
        img = img + Poly::variable(ts, ti) * sol->null[ti][l];
      q_images[l] = img;
    }
    Poly det_t = det_q.substitute(q_images);
    // fix the enumerated prefix of t
    std::vector<Rational> tpref(fr.t_axes, Rational(0));
    for (int ti = 0; ti < fr.t_axes; ++ti) {
      int idx = key[fr.v_axes + ti];
      tpref[ti] = -TB + 2 * TB * idx / res;
    }
    Space t1 = Space::corner_space(0, 0, 1);
    std::vector<Poly> pin(fr.expected_null);
    for (int ti = 0; ti < fr.t_axes; ++ti) pin[ti] = Poly::constant(t1, tpref[ti]);
    pin[fr.expected_null - 1] = Poly::variable(t1, 0);
    Poly uni = det_t.substitute(pin);
    int deg = uni.degree();
    std::vector<double> coeff(std::max(deg + 1, 1), 0.0);
    for (const auto& [m, c] : uni.terms()) coeff[m[0]] = to_double(c);
    double tb = to_double(TB);
    std::vector<double> roots = real_roots(coeff, -tb, tb, 8 * res);
    int branch = 0;
    for (double root : roots) {
      std::vector<double> q(n, 0.0);
      for (int l = 0; l < n; ++l) {
        double val = to_double(sol->particular[l]);
        for (int ti = 0; ti < fr.t_axes; ++ti) val += to_double(sol->null[ti][l] * tpref[ti]);
        val += to_double(sol->null[fr.expected_null - 1][l]) * root;
        q[l] = val;
      }
      if (auto rp = make_point(wit, q, key, branch)) out.push_back(std::move(*rp));
      ++branch;
    }
    return out;
  };

  std::vector<std::vector<RawPoint>> slots(total);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < total; ++i) slots[i] = process(i);
#else
    for (long i = 0; i < total; ++i) slots[i] = process(i);
#endif
  } else {
    for (long i = 0; i < total; ++i) slots[i] = process(i);
  }

  std::vector<RawPoint> raw;
  for (auto& sl : slots)
    for (auto& rp : sl) raw.push_back(std::move(rp));

  // connectivity over the key lattice
  double diag = 0.0;
  for (auto& w : cfg.window) diag += (w[1] - w[0]) * (w[1] - w[0]);
  diag = std::sqrt(diag);
  const double join = 6.0 * diag / res;

  std::map<std::pair<std::vector<int>, int>, int> index;
  for (size_t i = 0; i < raw.size(); ++i) index[{raw[i].key, raw[i].branch}] = static_cast<int>(i);
  const int dims = static_cast<int>(key_sizes.size());
  auto neighbor = [&](const RawPoint& rp, int axis) -> int {
    std::vector<int> k = rp.key;
    k[axis] += 1;
    auto it = index.find({k, rp.branch});
    return it == index.end() ? -1 : it->second;
  };
  if (dims == 1) {
    for (size_t i = 0; i < raw.size(); ++i) {
      int j = neighbor(raw[i], 0);
      if (j >= 0 && vec_dist(raw[i].pt.q, raw[j].pt.q) <= join)
        comp.segments.push_back({static_cast<int>(i), j});
    }
  } else if (dims == 2) {
    for (size_t i = 0; i < raw.size(); ++i) {
      int a = neighbor(raw[i], 0);
      int b = neighbor(raw[i], 1);
      if (a >= 0 && b >= 0) {
        std::vector<int> k = raw[i].key;
        k[0] += 1;
        k[1] += 1;
        auto it = index.find({k, raw[i].branch});
        if (it != index.end()) {
          int d = it->second;
          double m = std::max({vec_dist(raw[i].pt.q, raw[a].pt.q),
                               vec_dist(raw[i].pt.q, raw[b].pt.q),
                               vec_dist(raw[a].pt.q, raw[d].pt.q),
                               vec_dist(raw[b].pt.q, raw[d].pt.q)});
          if (m <= join) {
            comp.triangles.push_back({static_cast<int>(i), a, d});
            comp.triangles.push_back({static_cast<int>(i), d, b});
          }
        }
      }
    }
  }

  for (auto& rp : raw) {
    comp.max_residual = std::max(comp.max_residual, rp.pt.residual);
    comp.points.push_back(std::move(rp.pt));
  }

  // deduplicate points closer than half a window cell
  double step = diag / res / 2.0;
  std::map<std::vector<long>, int> seen;
  std::vector<int> remap(comp.points.size());
  std::vector<GeoPoint> kept;
  for (size_t i = 0; i < comp.points.size(); ++i) {
    std::vector<long> cell(n);
    for (int l = 0; l < n; ++l) cell[l] = std::lround(comp.points[i].q[l] / step);
    auto [it, inserted] = seen.emplace(cell, static_cast<int>(kept.size()));
    if (inserted) kept.push_back(comp.points[i]);
    remap[i] = it->second;
  }
  comp.points = std::move(kept);
  std::vector<std::array<int, 2>> segs;
  for (auto& sg : comp.segments) {
    int a = remap[sg[0]], b = remap[sg[1]];
    if (a != b) segs.push_back({a, b});
  }
  comp.segments = std::move(segs);
  std::vector<std::array<int, 3>> tris;
  for (auto& tr : comp.triangles) {
    int a = remap[tr[0]], b = remap[tr[1]], c = remap[tr[2]];
    if (a != b && b != c && a != c) tris.push_back({a, b, c});
  }
  comp.triangles = std::move(tris);
  return comp;
}

}  // namespace

Component caustic_stratum(const GeneratingFamily& F, const StratumSpec& sigma,
                          const SweepConfig& cfg) {
  return run_sweep(fold_setup(F, sigma), cfg, cfg.parallel);
}

Component caustic_stratum_serial(const GeneratingFamily& F, const StratumSpec& sigma,
                                 const SweepConfig& cfg) {
  return run_sweep(fold_setup(F, sigma), cfg, false);
}

Component quasi_caustic(const GeneratingFamily& F, const StratumSpec& sigma,
                        const StratumSpec& tau, const SweepConfig& cfg) {
  return run_sweep(quasi_setup(F, sigma, tau, cfg.quasi_sign_constraint), cfg, cfg.parallel);
}

Component quasi_caustic_serial(const GeneratingFamily& F, const StratumSpec& sigma,
                               const StratumSpec& tau, const SweepConfig& cfg) {
  return run_sweep(quasi_setup(F, sigma, tau, cfg.quasi_sign_constraint), cfg, false);
}

CausticGeometry full_caustic(const GeneratingFamily& F, const SweepConfig& cfg) {
  const int r = F.space().r;
  CausticGeometry geo;
  geo.space = F.space();
  geo.config = cfg;

  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) sub.push_back(i);
    subsets.push_back(std::move(sub));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  for (const auto& sub : subsets)
    geo.components.push_back(caustic_stratum(F, StratumSpec::make(r, sub), cfg));
  for (const auto& sub : subsets) {
    StratumSpec sigma = StratumSpec::make(r, sub);
    for (int add = 0; add < r; ++add) {
      if (std::find(sub.begin(), sub.end(), add) != sub.end()) continue;
      std::vector<int> bigger = sub;
      bigger.push_back(add);
      geo.components.push_back(quasi_caustic(F, sigma, StratumSpec::make(r, bigger), cfg));
    }
  }
  return geo;
}

bool residual_check(const Component& comp, const GeneratingFamily& F, double eps) {
  const Space& s = F.space();
  SweepSetup su = comp.kind == 'C'
                      ? fold_setup(F, StratumSpec::make(s.r, comp.sigma))
                      : quasi_setup(F, StratumSpec::make(s.r, comp.sigma),
                                    StratumSpec::make(s.r, comp.tau), false);
  CompiledNumeric cn = compile_numeric(su);
  for (const GeoPoint& p : comp.points) {
    std::vector<double> vars(s.vars(), 0.0);
    for (int v = 0; v < s.r + s.k; ++v) vars[v] = p.witness[v];
    for (int l = 0; l < s.n; ++l) vars[s.r + s.k + l] = p.q[l];
    for (int z : su.zero_vars)
      if (std::abs(p.witness[z]) > eps) return false;
    for (size_t e = 0; e < cn.A.size(); ++e) {
      double val = cn.A[e].eval(vars.data());
      for (int l = 0; l < s.n; ++l) val += cn.B[e][l].eval(vars.data()) * p.q[l];
      if (std::abs(val) > eps) return false;
    }
    if (su.with_hessian) {
      const size_t m = su.free_vars.size();
      std::vector<std::vector<double>> H(m, std::vector<double>(m, 0.0));
      for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
          double val = cn.H0[a][b].eval(vars.data());
          for (int l = 0; l < s.n; ++l) val += cn.Hq[a][b][l].eval(vars.data()) * p.q[l];
          H[a][b] = val;
        }
      if (std::abs(det_numeric(H)) > eps) return false;
    }
    for (size_t i = 0; i < su.free_vars.size(); ++i)
      if (su.free_is_corner[i] && p.witness[su.free_vars[i]] < -eps) return false;
  }
  return true;
}

bool residual_check(const CausticGeometry& geo, const GeneratingFamily& F, double eps) {
  for (const Component& comp : geo.components)
    if (!residual_check(comp, F, eps)) return false;
  return true;
}

}  // namespace corner
