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

#include <optional>
#include <vector>

#include "groupcrit/criticality.hpp"
#include "groupcrit/indices.hpp"

// Brute-force reference implementations. Every function enumerates coalitions
// literally from the definitions, using only Game::evaluate. They exist to
// cross-check the fast paths and are exponential by design.
namespace groupcrit {

inline constexpr int kMaxOraclePlayers = 16;

/// Every G with S u G winning, S \ G losing, and each member essential.
std::vector<Coalition> oracle_essentials(const Game& game, Coalition s);

/// Smallest critical G containing i.
Rank oracle_d_rank(const Game& game, int i, Coalition s);
/// Smallest essential G containing i.
Rank oracle_g_rank(const Game& game, int i, Coalition s);
/// Smallest essential size, if i sits in an essential coalition of that size.
Rank oracle_m_rank(const Game& game, int i, Coalition s);
std::optional<int> oracle_kappa_m(const Game& game, Coalition s);
/// Sizes of critical G containing i with i essential.
std::vector<int> oracle_e_ranks(const Game& game, int i, Coalition s);

/// Direct summation of p(S) over all 2^n coalitions with definitional ranks.
IndexTable oracle_index(const Game& game, const ProbabilityModel& model, Notion notion);

/// Shapley-Shubik index by enumerating all n! orderings (n <= 10).
std::vector<Rational> oracle_shapley_permutations(const Game& game);

}  // namespace groupcrit
