#include "corner/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "corner/dpoly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace corner {
namespace {

struct OracleSystem {
  const GeneratingFamily* F;
  std::vector<int> free_vars;
  std::vector<bool> free_is_corner;
  std::vector<DPoly> eq;                     // square system in the free variables
  std::vector<std::vector<DPoly>> jacobian;  // d eq_i / d free_j
};

OracleSystem build_system(const GeneratingFamily& F, const StratumSpec& sigma) {
  const Space& s = F.space();
  if (sigma.r != s.r) throw std::invalid_argument("stratum rank does not match the family");
  OracleSystem sys;
  sys.F = &F;
  // pin x_sigma to zero up front
  std::vector<Poly> images = Poly::identity_images(s);
  for (int i : sigma.sigma) images[s.x_index(i)] = Poly::constant(s, 0);
  std::vector<Poly> eqs;
  for (int i : sigma.complement()) {
    eqs.push_back(F.poly.derivative(s.x_index(i)).substitute(images));
    sys.free_vars.push_back(s.x_index(i));
    sys.free_is_corner.push_back(true);
  }
  for (int j = 0; j < s.k; ++j) {
    eqs.push_back(F.poly.derivative(s.y_index(j)).substitute(images));
    sys.free_vars.push_back(s.y_index(j));
    sys.free_is_corner.push_back(false);
  }
  for (const Poly& e : eqs) {
    sys.eq.push_back(DPoly::compile(e));
    std::vector<DPoly> row;
    for (int v : sys.free_vars) row.push_back(DPoly::compile(e.derivative(v)));
    sys.jacobian.push_back(std::move(row));
  }
  return sys;
}

bool newton(const OracleSystem& sys, const std::vector<double>& q, std::vector<double>& w,
            double tol) {
  const Space& s = sys.F->space();
  const size_t m = sys.free_vars.size();
  std::vector<double> vars(s.vars(), 0.0);
  for (int l = 0; l < s.n; ++l) vars[s.r + s.k + l] = q[l];
  for (int iter = 0; iter < 60; ++iter) {
    for (size_t i = 0; i < m; ++i) vars[sys.free_vars[i]] = w[i];
    std::vector<double> f(m);
    double norm = 0.0;
    for (size_t i = 0; i < m; ++i) {
      f[i] = sys.eq[i].eval(vars.data());
      norm = std::max(norm, std::abs(f[i]));
    }
    if (norm < tol) return true;
    // solve J d = -f
    std::vector<std::vector<double>> J(m, std::vector<double>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) J[i][j] = sys.jacobian[i][j].eval(vars.data());
    // Gaussian elimination with partial pivoting
    std::vector<double> d = f;
    for (size_t c = 0; c < m; ++c) {
      size_t p = c;
      for (size_t i = c + 1; i < m; ++i)
        if (std::abs(J[i][c]) > std::abs(J[p][c])) p = i;
      if (std::abs(J[p][c]) < 1e-14) return false;
      std::swap(J[p], J[c]);
      std::swap(d[p], d[c]);
      for (size_t i = c + 1; i < m; ++i) {
        double fac = J[i][c] / J[c][c];
        for (size_t j = c; j < m; ++j) J[i][j] -= fac * J[c][j];
        d[i] -= fac * d[c];
      }
    }
    for (size_t c = m; c-- > 0;) {
      for (size_t j = c + 1; j < m; ++j) d[c] -= J[c][j] * d[j];
      d[c] /= J[c][c];
    }
    double step = 0.0;
    for (size_t i = 0; i < m; ++i) {
      w[i] -= d[i];
      step = std::max(step, std::abs(d[i]));
    }
    if (!std::isfinite(step) || step > 1e6) return false;
  }
  return false;
}

int count_at(const OracleSystem& sys, const std::vector<double>& q, const OracleConfig& cfg) {
  const size_t m = sys.free_vars.size();
  if (m == 0) return 1;  // the corner point itself
  if (cfg.box.size() != m) throw std::invalid_argument("oracle box dimension mismatch");
  std::vector<std::vector<double>> found;
  std::vector<int> idx(m, 0);
  for (;;) {
    std::vector<double> w(m);
    for (size_t i = 0; i < m; ++i) {
      double lo = cfg.box[i][0], hi = cfg.box[i][1];
      w[i] = lo + (hi - lo) * (idx[i] + 0.5) / cfg.grid;
    }
    if (newton(sys, q, w, cfg.tol)) {
      bool inside = true;
      for (size_t i = 0; i < m; ++i) {
        if (w[i] < cfg.box[i][0] - 1e-9 || w[i] > cfg.box[i][1] + 1e-9) inside = false;
        if (sys.free_is_corner[i] && w[i] < cfg.interior_eps) inside = false;
      }
      if (inside) {
        bool dup = false;
        for (const auto& prev : found) {
          double d = 0.0;
          for (size_t i = 0; i < m; ++i) d = std::max(d, std::abs(prev[i] - w[i]));
          if (d < cfg.dedup_eps) dup = true;
        }
        if (!dup) found.push_back(w);
      }
    }
    size_t carry = 0;
    while (carry < m && ++idx[carry] == cfg.grid) idx[carry++] = 0;
    if (carry == m) break;
  }
  return static_cast<int>(found.size());
}

std::vector<int> grid_impl(const GeneratingFamily& F, const StratumSpec& sigma,
                           const std::vector<std::array<double, 2>>& window, int nx, int ny,
                           const OracleConfig& cfg, bool parallel) {
  if (F.space().n != 2 || window.size() != 2)
    throw std::invalid_argument("oracle grids are two-parameter scans");
  OracleSystem sys = build_system(F, sigma);
  std::vector<int> counts(static_cast<size_t>(nx) * ny, 0);
  auto cell = [&](long flat) {
    int iy = static_cast<int>(flat / nx), ix = static_cast<int>(flat % nx);
    std::vector<double> q = {window[0][0] + (window[0][1] - window[0][0]) * (ix + 0.5) / nx,
                             window[1][0] + (window[1][1] - window[1][0]) * (iy + 0.5) / ny};
    counts[flat] = count_at(sys, q, cfg);
  };
  const long total = static_cast<long>(nx) * ny;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < total; ++i) cell(i);
#else
    for (long i = 0; i < total; ++i) cell(i);
#endif
  } else {
    for (long i = 0; i < total; ++i) cell(i);
  }
  return counts;
}

}  // namespace

int oracle_critical_counts(const GeneratingFamily& F, const StratumSpec& sigma,
                           const std::vector<double>& q, const OracleConfig& cfg) {
  if (static_cast<int>(q.size()) != F.space().n)
    throw std::invalid_argument("parameter point dimension mismatch");
  OracleSystem sys = build_system(F, sigma);
  return count_at(sys, q, cfg);
}

std::vector<int> oracle_count_grid(const GeneratingFamily& F, const StratumSpec& sigma,
                                   const std::vector<std::array<double, 2>>& window, int nx,
                                   int ny, const OracleConfig& cfg) {
  return grid_impl(F, sigma, window, nx, ny, cfg, cfg.parallel);
}

std::vector<int> oracle_count_grid_serial(const GeneratingFamily& F, const StratumSpec& sigma,
                                          const std::vector<std::array<double, 2>>& window,
                                          int nx, int ny, const OracleConfig& cfg) {
  return grid_impl(F, sigma, window, nx, ny, cfg, false);
}

}  // namespace corner
