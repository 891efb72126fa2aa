#pragma once

#include <array>
#include <string>
#include <vector>

#include "corner/germ.hpp"

namespace corner {

// Stratum selector: the corner variables listed in sigma are pinned to zero,
// the remaining ones stay subject to x >= 0.
struct StratumSpec {
  int r = 0;
  std::vector<int> sigma;  // 0-based, strictly increasing

  static StratumSpec make(int r, std::vector<int> sigma);
  std::vector<int> complement() const;
  std::string str() const;  // "o" for the empty subset, "12" for {1,2}
};

struct EquationSystem {
  std::vector<Poly> zero;      // x_i for i in sigma
  std::vector<Poly> critical;  // dF/dx_i for i outside sigma, then dF/dy_j
  std::vector<int> nonneg_x;   // variable indices with x >= 0
};

EquationSystem stratum_equations(const GeneratingFamily& F, const StratumSpec& sigma);

struct SweepConfig {
  std::vector<std::array<double, 2>> window;  // q-box, one entry per parameter
  int resolution = 64;
  double eps = 1e-9;
  double witness_bound = 0.0;  // 0 derives a bound from the window
  bool parallel = true;
  bool quasi_sign_constraint = false;  // optional dF/dx >= 0 on shared corner indices
};

struct GeoPoint {
  std::vector<double> q;
  std::vector<double> witness;  // full (x, y) values
  double residual = 0.0;
};

struct Component {
  std::string label;
  char kind = 'C';
  std::vector<int> sigma, tau;  // tau empty for fold components
  std::vector<GeoPoint> points;
  std::vector<std::array<int, 2>> segments;
  std::vector<std::array<int, 3>> triangles;
  double max_residual = 0.0;
};

struct CausticGeometry {
  Space space;
  SweepConfig config;
  std::vector<Component> components;
};

// Fold caustic of one stratum: critical points with degenerate Hessian in
// the free variables, swept over a witness grid; exact affine solve in q.
Component caustic_stratum(const GeneratingFamily& F, const StratumSpec& sigma,
                          const SweepConfig& cfg);

// Image of the intersection of two strata.
Component quasi_caustic(const GeneratingFamily& F, const StratumSpec& sigma,
                        const StratumSpec& tau, const SweepConfig& cfg);

// Every fold component plus the quasi-caustics of adjacent strata pairs.
CausticGeometry full_caustic(const GeneratingFamily& F, const SweepConfig& cfg);

// Serial reference paths; identical output to the parallel kernels.
Component caustic_stratum_serial(const GeneratingFamily& F, const StratumSpec& sigma,
                                 const SweepConfig& cfg);
Component quasi_caustic_serial(const GeneratingFamily& F, const StratumSpec& sigma,
                               const StratumSpec& tau, const SweepConfig& cfg);

// Re-evaluates every stored witness against the defining equations.
bool residual_check(const CausticGeometry& geo, const GeneratingFamily& F, double eps);
bool residual_check(const Component& comp, const GeneratingFamily& F, double eps);

}  // namespace corner
