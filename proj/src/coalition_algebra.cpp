// Copyright 2026 The groupcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groupcrit/coalition_algebra.hpp"

#include <algorithm>

namespace groupcrit {

void canonicalize(std::vector<Coalition>& sets) {
  std::sort(sets.begin(), sets.end(), BySizeThenMask{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<Coalition> minimize_family(std::vector<Coalition> sets) {
  canonicalize(sets);
  // In size order a set can only contain sets that were already kept.
  std::vector<Coalition> kept;
  for (Coalition c : sets) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](Coalition k) { return k.subset_of(c); });
    if (!dominated) kept.push_back(c);
  }
  return kept;
}

bool is_antichain(std::span<const Coalition> sets) {
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b)
      if (a != b && sets[a].subset_of(sets[b])) return false;
  return true;
}

CoalitionFamily minimal_winning(const Game& game) {
  return {game.minimal_winning(), FamilyKind::MinimalWinning};
}

CoalitionFamily minimal_blocking(const Game& game) {
  return {game.minimal_blocking(), FamilyKind::MinimalBlocking};
}

CoalitionFamily restrict_minus(const CoalitionFamily& family, Coalition s) {
  CoalitionFamily out{{}, FamilyKind::Restricted};
  out.sets.reserve(family.sets.size());
  for (Coalition c : family.sets) out.sets.push_back(c.minus(s));
  canonicalize(out.sets);
  return out;
}

CoalitionFamily member_filter(const CoalitionFamily& family, int i) {
  CoalitionFamily out{{}, family.kind};
  for (Coalition c : family.sets)
    if (c.contains(i)) out.sets.push_back(c);
  return out;
}

CoalitionFamily minimal_elements(const CoalitionFamily& family) {
  return {minimize_family(family.sets), family.kind};
}

}  // namespace groupcrit
