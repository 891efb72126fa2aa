#pragma once

#include "corner/poly.hpp"

namespace corner {

// Function germ on the corner: polynomial in (x, y) with zero constant and
// linear part (membership in the square of the maximal ideal).
struct Germ {
  Poly poly;

  const Space& space() const { return poly.space(); }
};

// Checks n == 0 and vanishing of all terms of degree <= 1.
bool is_germ(const Poly& p);
Germ make_germ(const Poly& p);  // throws std::invalid_argument on violation
Germ make_germ(const std::string& expr, int r, int k);

// Unfolding F(x, y, q) with F(0) = 0 whose q = 0 restriction is a Germ.
struct GeneratingFamily {
  Poly poly;
  Germ core;  // restriction q = 0, with the q block removed

  const Space& space() const { return poly.space(); }
};

bool is_generating_family(const Poly& p);
GeneratingFamily make_family(const Poly& p);
GeneratingFamily make_family(const std::string& expr, int r, int k, int n);

// q = 0 restriction moved to the (r, k, 0) space.
Poly restrict_q_zero(const Poly& family);

// dF/dq_l restricted to q = 0, as a polynomial in (x, y).
Poly unfolding_direction(const GeneratingFamily& F, int l);

// Embeds a germ into the (r, k, n) family space.
Poly embed_in_family_space(const Poly& germ, int n);

// Fixes parameter q_l to an exact value, producing a family with n-1
// parameters (remaining ones reindexed in order).
GeneratingFamily restrict_parameter(const GeneratingFamily& F, int l, const Rational& value);

}  // namespace corner
