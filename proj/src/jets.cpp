#include "corner/jets.hpp"

#include <algorithm>

namespace corner {
namespace {

void enumerate(const Space& space, int order, int var, Mono& current,
               const std::function<bool(const Mono&)>& keep, std::vector<Mono>& out) {
  // fixed total degree handled by caller loop; fill positions left to right,
  // larger exponents first so canonical order falls out directly
  if (var == space.vars() - 1) {
    current[var] = order;
    if (!keep || keep(current)) out.push_back(current);
    current[var] = 0;
    return;
  }
  for (int e = order; e >= 0; --e) {
    current[var] = e;
    enumerate(space, order - e, var + 1, current, keep, out);
  }
  current[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(const Space& space, int order,
                             const std::function<bool(const Mono&)>& keep)
    : space_(space), order_(order) {
  if (order < 0) throw std::invalid_argument("negative jet order");
  Mono current(space.vars(), 0);
  for (int d = 0; d <= order; ++d) {
    if (space.vars() == 0) {
      if (d == 0 && (!keep || keep(current))) monos_.push_back(current);
      continue;
    }
    enumerate(space, d, 0, current, keep, monos_);
  }
  for (int i = 0; i < static_cast<int>(monos_.size()); ++i) index_.emplace(monos_[i], i);
}

int MonomialBasis::index_of(const Mono& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Rational> MonomialBasis::row_of(const Poly& p) const {
  std::vector<Rational> row(monos_.size(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    int i = index_of(m);
    if (i >= 0) row[i] = c;
  }
  return row;
}

void RowSpace::reduce(std::vector<Rational>& row) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& f = row[pivots_[i]];
    if (f == 0) continue;
    Rational factor = f;  // pivot entries are 1
    const auto& r = rows_[i];
    for (size_t j = pivots_[i]; j < row.size(); ++j)
      if (r[j] != 0) row[j] -= factor * r[j];
  }
}

bool RowSpace::insert_row(std::vector<Rational> row) {
  reduce(row);
  int pivot = -1;
  for (size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) {
      pivot = static_cast<int>(j);
      break;
    }
  if (pivot < 0) return false;
  Rational lead = row[pivot];
  for (size_t j = pivot; j < row.size(); ++j)
    if (row[j] != 0) row[j] /= lead;
  // back-substitute into stored rows
  for (size_t i = 0; i < rows_.size(); ++i) {
    Rational f = rows_[i][pivot];
    if (f == 0) continue;
    for (size_t j = pivot; j < row.size(); ++j)
      if (row[j] != 0) rows_[i][j] -= f * row[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t at = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + at, std::move(row));
  return true;
}

bool RowSpace::insert(const Poly& p) { return insert_row(basis_->row_of(p)); }

bool RowSpace::contains(const Poly& p) const {
  std::vector<Rational> row = basis_->row_of(p);
  reduce(row);
  for (const Rational& c : row)
    if (c != 0) return false;
  return true;
}

std::vector<int> RowSpace::pivot_columns() const { return pivots_; }

std::vector<int> RowSpace::nonpivot_columns() const {
  std::vector<int> out;
  size_t next = 0;
  for (int j = 0; j < basis_->size(); ++j) {
    if (next < pivots_.size() && pivots_[next] == j)
      ++next;
    else
      out.push_back(j);
  }
  return out;
}

std::vector<Mono> RowSpace::nonpivot_monomials() const {
  std::vector<Mono> out;
  for (int j : nonpivot_columns()) out.push_back(basis_->at(j));
  return out;
}

int rank_of(Matrix m) {
  int rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    size_t sel = m.size();
    for (size_t i = rank; i < m.size(); ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    Rational lead = m[rank][col];
    for (size_t j = col; j < cols; ++j) m[rank][j] /= lead;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<size_t>(rank)) continue;
      Rational f = m[i][col];
      if (f == 0) continue;
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<AffineSolution> solve_affine(const Matrix& A, const std::vector<Rational>& b) {
  size_t rows = A.size();
  size_t cols = rows == 0 ? 0 : A[0].size();
  if (rows == 0) {
    // no constraints: everything is a solution
    AffineSolution sol;
    sol.particular.assign(cols, Rational(0));
    for (size_t j = 0; j < cols; ++j) {
      std::vector<Rational> v(cols, Rational(0));
      v[j] = 1;
      sol.null.push_back(std::move(v));
    }
    return sol;
  }
  Matrix m(rows);
  for (size_t i = 0; i < rows; ++i) {
    m[i] = A[i];
    m[i].push_back(b[i]);
  }
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
    size_t sel = rows;
    for (size_t i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    Rational lead = m[rank][col];
    for (size_t j = col; j <= cols; ++j) m[rank][j] /= lead;
    for (size_t i = 0; i < rows; ++i) {
      if (i == static_cast<size_t>(rank)) continue;
      Rational f = m[i][col];
      if (f == 0) continue;
      for (size_t j = col; j <= cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;  // 0 = nonzero row

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) sol.particular[col] = m[pivot_of_col[col]][cols];
  for (size_t freec = 0; freec < cols; ++freec) {
    if (pivot_of_col[freec] >= 0) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[freec] = 1;
    for (size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -m[pivot_of_col[col]][freec];
    sol.null.push_back(std::move(v));
  }
  return sol;
}

}  // namespace corner
