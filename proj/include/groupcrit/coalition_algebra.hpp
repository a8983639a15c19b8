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

#pragma once

#include <span>
#include <vector>

#include "groupcrit/coalition.hpp"
#include "groupcrit/game.hpp"

namespace groupcrit {

enum class FamilyKind { MinimalWinning, MinimalBlocking, Restricted };

/// A list of coalitions in canonical (cardinality, mask) order, without duplicates.
struct CoalitionFamily {
  std::vector<Coalition> sets;
  FamilyKind kind = FamilyKind::Restricted;

  bool empty() const { return sets.empty(); }
  std::size_t size() const { return sets.size(); }
  friend bool operator==(const CoalitionFamily&, const CoalitionFamily&) = default;
};

CoalitionFamily minimal_winning(const Game& game);

/// Minimal transversals of the minimal winning family: every B has v(N \ B) = 0
/// and loses that property when any member is dropped.
CoalitionFamily minimal_blocking(const Game& game);

/// {C \ S : C in family}. An empty result set (C inside S) is kept.
CoalitionFamily restrict_minus(const CoalitionFamily& family, Coalition s);

/// Members that contain player i.
CoalitionFamily member_filter(const CoalitionFamily& family, int i);

/// Inclusion-minimal members of the family.
CoalitionFamily minimal_elements(const CoalitionFamily& family);

bool is_antichain(std::span<const Coalition> sets);

/// Sorts, deduplicates and drops every set that strictly contains another.
std::vector<Coalition> minimize_family(std::vector<Coalition> sets);

/// Sorts into canonical order and removes duplicates.
void canonicalize(std::vector<Coalition>& sets);

}  // namespace groupcrit
