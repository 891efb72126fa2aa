#pragma once

#include <map>
#include <vector>

#include "corner/rational.hpp"
#include "corner/space.hpp"

namespace corner {

// Operations refuse to build anything of total degree beyond this; every
// object handled here has degree <= 4 plus jet headroom.
constexpr int kDegreeCap = 64;

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed variable space.  Immutable value semantics: all operations return
// new polynomials, no term with coefficient zero is ever stored.
class Poly {
 public:
  using TermMap = std::map<Mono, Rational, MonoLess>;

  Poly() : space_(Space::corner_space(0, 0, 0)) {}
  explicit Poly(Space space) : space_(std::move(space)) {}

  static Poly constant(const Space& space, const Rational& c);
  static Poly variable(const Space& space, int var);
  static Poly monomial(const Space& space, const Mono& m, const Rational& c);

  const Space& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  int order() const;   // minimal total degree of a term; degree cap + 1 for zero

  Rational coeff(const Mono& m) const;
  Rational constant_term() const;

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& rhs) const { return space_ == rhs.space_ && terms_ == rhs.terms_; }

  Poly derivative(int var) const;
  Poly truncate(int max_degree) const;
  Poly graded_part(int degree) const;

  // Substitutes images[v] for variable v; all images must share one target
  // space.  Use identity_images() and overwrite selected entries.
  Poly substitute(const std::vector<Poly>& images) const;
  static std::vector<Poly> identity_images(const Space& space);

  // Moves the polynomial to another space; var_map[v] gives the index of
  // source variable v in the target space.
  Poly map_variables(const Space& target, const std::vector<int>& var_map) const;

  Rational eval(const std::vector<Rational>& point) const;

  int degree_in_block(int first_var, int count) const;

  std::string str() const;

  void add_term(const Mono& m, const Rational& c);  // builder helper

 private:
  Space space_;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

}  // namespace corner
