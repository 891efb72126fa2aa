#pragma once

#include <vector>

#include "corner/poly.hpp"

namespace corner {

// Polynomial compiled to double coefficients for the inner loops of sweeps
// and the brute-force oracle.  Exact arithmetic stays upstream; this is
// evaluation only.
struct DPoly {
  struct Term {
    double c;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent)
  };
  int nvars = 0;
  std::vector<Term> terms;

  static DPoly compile(const Poly& p);
  double eval(const double* v) const;
};

}  // namespace corner
