#pragma once

#include <optional>

#include "corner/germ.hpp"
#include "corner/jets.hpp"

namespace corner {

// Equivalence relation behind a tangent-space computation.  All three share
// the module generated by x_i dF/dx_i and dF/dy_j; they differ in the scalar
// directions adjoined: none for R, the constants for R+, constants and the
// germ itself for C.
enum class Relation { R, Rplus, C };

std::string relation_name(Relation rel);

// Jet orders never exceed this; a codimension that has not stabilized by
// here is reported as exceeding the bound.
constexpr int kJetCap = 12;

int default_jet_order(int n_params);  // max(7, n + 3)

JetSubspace tangent_space(const Germ& f, Relation rel, int order);

struct CodimResult {
  Relation relation = Relation::C;
  bool exceeds_bound = false;
  int value = -1;
  int jet_order = 0;
  bool stabilized = false;
  std::vector<Mono> cobasis;  // residual classes, minimal degree first
};

// Codimension at a fixed jet order; stabilized compares against order + 1.
CodimResult codimension(const Germ& f, Relation rel, int order);

// Scans jet orders up to the cap until two consecutive values agree; sets
// exceeds_bound instead of a value when that never happens.
CodimResult codimension_auto(const Germ& f, Relation rel);

std::vector<Mono> residual_cobasis(const Germ& f, Relation rel, int order);

struct ExceedsBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f + q_1 a_1 + ... + q_n a_n over the C-relation cobasis; throws
// ExceedsBound when the codimension does not stabilize.
GeneratingFamily build_stable_unfolding(const Germ& f);

struct VersalityResult {
  bool versal = false;
  int jet_order = 0;
  std::vector<Mono> defect;  // uncovered classes when not versal
};

// order < 0 picks the default for the family's parameter count.
VersalityResult check_infinitesimal_versality(const GeneratingFamily& F, int order = -1);

bool check_infinitesimal_stability(const GeneratingFamily& F, int order = -1);

// Positive weights with  sum w_i * alpha_i = 1  across the support, tested
// in the given coordinates only.  Throws on the zero germ.
std::optional<std::vector<Rational>> quasihomogeneous_weights(const Germ& f);

struct Determinacy {
  bool exceeds_bound = false;
  int order = 0;
};

// Smallest jet order at which the codimension agrees with the next order.
Determinacy determinacy_stabilization(const Germ& f, Relation rel);

}  // namespace corner
