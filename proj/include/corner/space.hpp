#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace corner {

// Variable space of a germ or unfolding: corner variables x1..xr (the germ
// lives on the set x >= 0), internal variables y1..yk, parameters q1..qn.
// Phase spaces carry coordinates Q1..Qn, P1..Pn instead and are used by the
// orbit computations only.
struct Space {
  enum class Kind { corner, phase };

  Kind kind = Kind::corner;
  int r = 0;
  int k = 0;
  int n = 0;

  static Space corner_space(int r, int k, int n) {
    if (r < 0 || k < 0 || n < 0) throw std::invalid_argument("negative variable count");
    return Space{Kind::corner, r, k, n};
  }
  static Space phase_space(int n) {
    if (n <= 0) throw std::invalid_argument("phase space needs n >= 1");
    return Space{Kind::phase, 0, 0, n};
  }

  int vars() const { return kind == Kind::corner ? r + k + n : 2 * n; }

  int x_index(int i) const { return i; }
  int y_index(int j) const { return r + j; }
  int q_index(int l) const { return r + k + l; }
  int Q_index(int i) const { return i; }
  int P_index(int i) const { return n + i; }

  std::string var_name(int v) const {
    if (kind == Kind::corner) {
      if (v < r) return "x" + std::to_string(v + 1);
      if (v < r + k) return "y" + std::to_string(v - r + 1);
      return "q" + std::to_string(v - r - k + 1);
    }
    if (v < n) return "Q" + std::to_string(v + 1);
    return "P" + std::to_string(v - n + 1);
  }

  bool operator==(const Space&) const = default;
};

// Exponent vector; length always equals space.vars().
using Mono = std::vector<int>;

inline int total_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Canonical term order: total degree first, then within a degree earlier
// variables with larger exponents come first (x block before y before q).
inline bool mono_less(const Mono& a, const Mono& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return mono_less(a, b); }
};

std::string mono_to_string(const Space& space, const Mono& m);

}  // namespace corner
