#pragma once

#include <string>
#include <vector>

#include "corner/germ.hpp"

namespace corner {

enum class Regime { caustic_stable, weakly_caustic_stable };

std::string regime_name(Regime regime);

// One normal form with a fixed sign choice.  Entries come in label groups
// ("B_{2,3}^{*,*}" collects the four sign variants).
struct NormalFormEntry {
  std::string label;
  std::string group;
  int r = 2;
  int k = 0;
  int n = 0;
  Germ representative;
  GeneratingFamily family;
  int codim_caustic = 0;
  int codim_weak = 0;
  int modulus_count = 0;
  Regime regime = Regime::caustic_stable;
  std::string figure;  // tag of the printed figure; empty when none exists
};

// The built-in normal-form catalog: 6 weak entries (two-parameter families)
// and 9 caustic-stable label groups expanded over their sign choices.
const std::vector<NormalFormEntry>& catalog();

const NormalFormEntry* find_entry(const std::string& label);

std::vector<std::string> catalog_groups(Regime regime);

}  // namespace corner
