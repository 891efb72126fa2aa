#include "corner/dpoly.hpp"

namespace corner {

DPoly DPoly::compile(const Poly& p) {
  DPoly out;
  out.nvars = p.space().vars();
  for (const auto& [m, c] : p.terms()) {
    Term t;
    t.c = to_double(c);
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t.powers.emplace_back(static_cast<int>(v), m[v]);
    out.terms.push_back(std::move(t));
  }
  return out;
}

double DPoly::eval(const double* v) const {
  double sum = 0.0;
  for (const Term& t : terms) {
    double val = t.c;
    for (const auto& [var, e] : t.powers) {
      double b = v[var];
      for (int i = 0; i < e; ++i) val *= b;
    }
    sum += val;
  }
  return sum;
}

}  // namespace corner
