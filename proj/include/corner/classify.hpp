#pragma once

#include <optional>

#include "corner/catalog.hpp"
#include "corner/localalg.hpp"

namespace corner {

// mu = c12^2 / (4 c11 c22) of a quadratic form in x1, x2; invariant under
// positive axis scalings and global rescaling of the germ.  Empty when a
// square term is missing; throws on the zero form.
std::optional<Rational> mu_invariant(const Poly& quadratic);

// Splits off the nondegenerate part of the y-Hessian at the origin by exact
// completion of squares, degree-bounded at `order`.
struct SplitResult {
  Germ residual;                // same r, reduced k
  std::vector<int> square_signs;  // one per split square
};
SplitResult split_y_squares(const Germ& f, int order = kJetCap);

struct ClassificationReport {
  bool matched = false;
  std::string label = "unclassified";
  std::string group;
  Regime regime = Regime::caustic_stable;
  int modulus_count = 0;
  std::optional<Rational> modulus_a;
  CodimResult codim_caustic;
  int codim_weak = -1;
  std::optional<Rational> mu;
  std::optional<std::vector<Rational>> weights;  // quasihomogeneous, in given coordinates
  std::vector<int> split_signs;
  std::string residual_germ;
  std::string detail;
};

// Recognition by invariants against the normal-form tables (r = 2), the
// simple boundary germs (r = 1) and Morse data (r = 0).
ClassificationReport classify_germ(const Germ& f);

struct WeakClass {
  std::string label;
  Germ representative;
};

// Modulus classes collapse onto their fixed weak representative; every
// other matched label maps to itself.
WeakClass weak_class(const ClassificationReport& report);

}  // namespace corner
