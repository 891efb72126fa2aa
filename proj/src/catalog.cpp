#include "corner/catalog.hpp"

#include <algorithm>

#include "corner/parse.hpp"

namespace corner {
namespace {

NormalFormEntry entry(std::string label, std::string group, int r, int k, int n,
                      const std::string& germ_expr, const std::string& family_expr,
                      int codim_caustic, int codim_weak, int modulus, Regime regime,
                      std::string figure) {
  NormalFormEntry e;
  e.label = std::move(label);
  e.group = std::move(group);
  e.r = r;
  e.k = k;
  e.n = n;
  e.representative = make_germ(germ_expr, r, k);
  e.family = make_family(family_expr, r, k, n);
  e.codim_caustic = codim_caustic;
  e.codim_weak = codim_weak;
  e.modulus_count = modulus;
  e.regime = regime;
  e.figure = std::move(figure);
  return e;
}

std::vector<NormalFormEntry> build() {
  std::vector<NormalFormEntry> out;
  const char* signs[2] = {"+", "-"};

  // weak regime: two-parameter families, one modulus absorbed per class
  for (const char* s : signs) {
    std::string g = std::string("x1^2 ") + s + " x1*x2 + 1/5*x2^2";
    std::string label = std::string("B_{2,2}^{") + s + ",+,1}";
    out.push_back(entry(label, "B_{2,2}^{*,+,1}", 2, 0, 2, g, g + " + q1*x1 + q2*x2", 3, 2, 1,
                        Regime::weakly_caustic_stable, label));
  }
  for (const char* s : signs) {
    std::string g = std::string("x1^2 ") + s + " x1*x2 + x2^2";
    std::string label = std::string("B_{2,2}^{") + s + ",+,2}";
    out.push_back(entry(label, "B_{2,2}^{*,+,2}", 2, 0, 2, g, g + " + q1*x1 + q2*x2", 3, 2, 1,
                        Regime::weakly_caustic_stable, label));
  }
  for (const char* s : signs) {
    std::string g = std::string("x1^2 ") + s + " x1*x2 - x2^2";
    std::string label = std::string("B_{2,2}^{") + s + ",-}";
    out.push_back(entry(label, "B_{2,2}^{*,-}", 2, 0, 2, g, g + " + q1*x1 + q2*x2", 3, 2, 1,
                        Regime::weakly_caustic_stable, label));
  }

  // caustic-stable regime
  for (const char* s : signs) {
    std::string g = std::string("x1^2 ") + s + " x2^2";
    std::string label = std::string("B_{2,2}^{") + s + ",0}";
    out.push_back(entry(label, "B_{2,2}^{*,0}", 2, 0, 3, g,
                        g + " + q1*x1 + q2*x2 + q3*x1*x2", 3, 3, 0, Regime::caustic_stable,
                        label));
  }
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string("(x1 ") + s1 + " x2)^2 " + s2 + " x2^3";
      std::string label = std::string("B_{2,2,3}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "B_{2,2,3}^{*,*}", 2, 0, 3, g,
                          g + " + q1*x1 + q2*x2 + q3*x2^2", 3, 3, 0, Regime::caustic_stable,
                          label));
    }
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string("x1^2 ") + s1 + " x1*x2 " + s2 + " x2^3";
      std::string label = std::string("B_{2,3}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "B_{2,3}^{*,*}", 2, 0, 3, g, g + " + q1*x1 + q2*x2 + q3*x2^2",
                          3, 3, 0, Regime::caustic_stable, label));
    }
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string("x1^3 ") + s1 + " x1*x2 " + s2 + " x2^2";
      std::string label = std::string("B_{3,2}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "B_{3,2}^{*,*}", 2, 0, 3, g, g + " + q1*x1 + q2*x2 + q3*x1^2",
                          3, 3, 0, Regime::caustic_stable, ""));
    }
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string("x1^2 ") + s1 + " x1*x2^2 " + s2 + " x2^3";
      std::string label = std::string("B_{2,3'}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "B_{2,3'}^{*,*}", 2, 0, 4, g,
                          g + " + q1*x2^2 + q2*x1*x2 + q3*x2 + q4*x1", 4, 4, 0,
                          Regime::caustic_stable, ""));
    }
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string("x1^3 ") + s1 + " x1^2*x2 " + s2 + " x2^2";
      std::string label = std::string("B_{3,2'}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "B_{3,2'}^{*,*}", 2, 0, 4, g,
                          g + " + q1*x1^2 + q2*x1*x2 + q3*x1 + q4*x2", 4, 4, 0,
                          Regime::caustic_stable, ""));
    }
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string(s1) + "y1^3 + x1*y1 " + s2 + " x2*y1 + x2^2";
      std::string label = std::string("C_{3,2}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "C_{3,2}^{*,*}", 2, 1, 3, g, g + " + q1*y1 + q2*x1 + q3*x2",
                          3, 3, 0, Regime::caustic_stable, label));
    }
  // The q3 direction of the two deeper C-families must represent a nonzero
  // residual class; the corner coordinates mirror the C_{3,2} family and
  // make every unfolding here infinitesimally versal.
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string(s1) + "y1^3 + x1*y1 " + s2 + " x2*y1^2 + x2^2";
      std::string label = std::string("C_{3,2,1}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "C_{3,2,1}^{*,*}", 2, 1, 4, g,
                          g + " + q1*y1^2 + q2*y1 + q3*x1 + q4*x2", 4, 4, 0,
                          Regime::caustic_stable, ""));
    }
  for (const char* s1 : signs)
    for (const char* s2 : signs) {
      std::string g = std::string(s1) + "y1^3 + x2*y1 " + s2 + " x1*y1^2 + x1^2";
      std::string label = std::string("C_{3,2,2}^{") + s1 + "," + s2 + "}";
      out.push_back(entry(label, "C_{3,2,2}^{*,*}", 2, 1, 4, g,
                          g + " + q1*y1^2 + q2*y1 + q3*x2 + q4*x1", 4, 4, 0,
                          Regime::caustic_stable, ""));
    }
  return out;
}

}  // namespace

std::string regime_name(Regime regime) {
  return regime == Regime::caustic_stable ? "caustic-stable" : "weakly-caustic-stable";
}

const std::vector<NormalFormEntry>& catalog() {
  static const std::vector<NormalFormEntry> entries = build();
  return entries;
}

const NormalFormEntry* find_entry(const std::string& label) {
  for (const NormalFormEntry& e : catalog())
    if (e.label == label) return &e;
  return nullptr;
}

std::vector<std::string> catalog_groups(Regime regime) {
  std::vector<std::string> out;
  for (const NormalFormEntry& e : catalog())
    if (e.regime == regime && std::find(out.begin(), out.end(), e.group) == out.end())
      out.push_back(e.group);
  return out;
}

}  // namespace corner
