#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "corner/poly.hpp"

namespace corner {

// All monomials of total degree <= order over a space, in canonical term
// order, optionally filtered (the orbit module drops ideal monomials here).
class MonomialBasis {
 public:
  MonomialBasis(const Space& space, int order,
                const std::function<bool(const Mono&)>& keep = {});

  const Space& space() const { return space_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const Mono& at(int i) const { return monos_[i]; }
  int index_of(const Mono& m) const;  // -1 when absent

  // Dense coefficient row; terms outside the basis are dropped, which both
  // truncates at the jet order and reduces modulo a monomial ideal filter.
  std::vector<Rational> row_of(const Poly& p) const;

 private:
  Space space_;
  int order_;
  std::vector<Mono> monos_;
  std::map<Mono, int, MonoLess> index_;
};

// Row space in reduced echelon form over a monomial basis.  Insertions keep
// the reduced form; pivot columns of the row space are canonical.
class RowSpace {
 public:
  explicit RowSpace(const MonomialBasis& basis) : basis_(&basis) {}

  bool insert(const Poly& p);                 // true if the rank grew
  bool insert_row(std::vector<Rational> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  bool full() const { return rank() == basis_->size(); }
  bool contains(const Poly& p) const;

  const MonomialBasis& basis() const { return *basis_; }
  std::vector<int> pivot_columns() const;
  std::vector<int> nonpivot_columns() const;
  std::vector<Mono> nonpivot_monomials() const;

 private:
  const MonomialBasis* basis_;
  std::vector<std::vector<Rational>> rows_;  // kept sorted by pivot column
  std::vector<int> pivots_;
  void reduce(std::vector<Rational>& row) const;
};

// Truncated-jet subspace: generators row-reduced over the degree-<=order
// monomial basis.
struct JetSubspace {
  Space space;
  int order = 0;
  std::shared_ptr<MonomialBasis> basis;
  std::shared_ptr<RowSpace> rows;

  int rank() const { return rows->rank(); }
};

// Dense exact linear algebra used by the orbit systems and caustic sweeps.
using Matrix = std::vector<std::vector<Rational>>;

int rank_of(Matrix m);

struct AffineSolution {
  std::vector<Rational> particular;          // one solution of A x = b
  std::vector<std::vector<Rational>> null;   // basis of the null space of A
};

// Empty optional when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& A, const std::vector<Rational>& b);

}  // namespace corner
