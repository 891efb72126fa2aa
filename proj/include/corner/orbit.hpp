#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corner/jets.hpp"

namespace corner {

// Polynomial symplectic map jet on (Q, P) phase space: components ordered
// (q o S, then p o S), with the modulus value it was built at.
struct SymplecticJet {
  int n = 0;
  Rational a;
  std::vector<Poly> comp;  // 2n phase-space polynomials

  const Poly& q_comp(int i) const { return comp[i]; }
  const Poly& p_comp(int i) const { return comp[n + i]; }
};

// Exact pullback test: sum of d(q_i o S) ^ d(p_i o S) must equal the
// canonical two-form coefficient by coefficient.
bool symplectic_check(const SymplecticJet& S);

enum class CaseId { B23pp, B223pp, C32pp, B22a };

CaseId case_from_string(const std::string& name);  // throws on unknown id

struct TangencyCase {
  CaseId id;
  std::string name;
  int n = 0;                    // phase-space degrees of freedom
  int corner_rank = 2;          // Q_i P_i ideal generators for i <= rank
  int ideal_degree = 4;         // everything of this total degree and up dies
  Poly direction;               // Hamiltonian of the modulus direction, in (Q, P)
  std::string generating_function;  // catalog metadata only

  SymplecticJet map_at(const Rational& a) const;
  bool in_domain(const Rational& a) const;  // a > 1/4 for B22a, a > 0 otherwise
};

const TangencyCase& catalog_case(CaseId id);

// dS_a/da, verified exactly against X_f o S_a; throws on mismatch.
std::vector<Poly> modal_direction(const TangencyCase& cs, const Rational& a);

struct LinearSystem {
  std::vector<std::string> unknowns;        // h-block coefficient names
  std::vector<Mono> row_monomials;          // residual (Q, P) monomials
  Matrix A;                                 // one row per residual monomial
  std::vector<Rational> rhs;
  int rank = 0;
  int rank_augmented = 0;
  bool solvable = false;

  int unknown_index(const std::string& name) const;
  std::vector<Rational> row_for(const Mono& m) const;  // throws if absent
};

// Coefficient matching of  target == sum h_i(q o S) (p_i o S) + h0(q o S)
// modulo the case ideal.  The default target is f o S_a for the case's
// modulus Hamiltonian; pass `control` to override it with H o S_a.
LinearSystem build_tangency_system(const TangencyCase& cs, const Rational& a,
                                   const Poly* control = nullptr);

bool is_tangent(const TangencyCase& cs, const Rational& a, const Poly* control = nullptr);

struct Branch {
  std::map<std::string, std::string> assignment;  // name -> value or expression
  std::vector<std::string> free;
  std::string display;
};

struct SolutionSet {
  std::vector<Branch> branches;
};

// Affine solution of the rows selected by monomial, restricted to the named
// unknowns (all other unknowns treated as absent; rows touching them are
// rejected).  An empty row selection yields the full space.
SolutionSet solve_linear_subsystem(const LinearSystem& sys, const std::vector<Mono>& rows,
                                   const std::vector<std::string>& unknowns);

// The subsystem each case designates for audit.  B22a: the three rows that
// pin b, c, d.  B223pp: the five-row display with bilinear e-terms, solved
// by finite case splitting into its two branches.  Other cases have none.
std::optional<SolutionSet> solve_subsystem(const TangencyCase& cs, const Rational& a);

}  // namespace corner
