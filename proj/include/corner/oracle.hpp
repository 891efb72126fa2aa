#pragma once

#include "corner/caustic.hpp"

namespace corner {

// Brute-force critical-point counter: dense starts plus Newton refinement on
// the square critical system of a stratum at fixed parameters.  Test oracle,
// fully independent of the sweep pipeline.
struct OracleConfig {
  std::vector<std::array<double, 2>> box;  // witness box per free variable
  int grid = 16;                           // Newton starts per axis
  double tol = 1e-10;                      // accepted residual
  double interior_eps = 1e-7;              // strict x > 0 margin
  double dedup_eps = 1e-6;
  bool parallel = true;
};

int oracle_critical_counts(const GeneratingFamily& F, const StratumSpec& sigma,
                           const std::vector<double>& q, const OracleConfig& cfg);

// Count grid over a 2-parameter window, row-major with ny rows and nx
// columns; cell centers are sampled.
std::vector<int> oracle_count_grid(const GeneratingFamily& F, const StratumSpec& sigma,
                                   const std::vector<std::array<double, 2>>& window, int nx,
                                   int ny, const OracleConfig& cfg);

std::vector<int> oracle_count_grid_serial(const GeneratingFamily& F, const StratumSpec& sigma,
                                          const std::vector<std::array<double, 2>>& window,
                                          int nx, int ny, const OracleConfig& cfg);

}  // namespace corner
