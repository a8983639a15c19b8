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
#include <span>
#include <string>
#include <vector>

#include "groupcrit/coalition.hpp"
#include "groupcrit/game.hpp"

namespace groupcrit {

/// Criticality notions: differential, group essential, essential minimal.
enum class Notion { d, g, m };

std::string to_string(Notion notion);
/// Accepts "d", "g", "m".
Notion parse_notion(const std::string& text);

/// A positive criticality rank, or NotCritical.
class Rank {
 public:
  static constexpr Rank not_critical() { return Rank(); }
  static Rank of(int value);

  constexpr bool critical() const { return value_.has_value(); }
  /// Throws std::bad_optional_access when NotCritical.
  int value() const { return value_.value(); }
  constexpr std::optional<int> maybe() const { return value_; }

  friend constexpr bool operator==(const Rank&, const Rank&) = default;

 private:
  constexpr Rank() = default;
  std::optional<int> value_;
};

/// "3", or "✗" when not critical.
std::string to_string(Rank rank);

/// Which side of S a g-critical player acts from.
enum class Side { Inside, Outside, None };
std::string to_string(Side side);

struct CriticalityProfile {
  int player = 0;
  Coalition coalition;
  Rank d_rank = Rank::not_critical();
  Rank g_rank = Rank::not_critical();
  Rank m_rank = Rank::not_critical();
  std::vector<int> e_ranks;  // increasing
  Side side = Side::None;
  /// Smallest-mask essential coalition of size g_rank containing the player.
  std::optional<Coalition> witness;
};

struct EssentialFamilies {
  Coalition coalition;
  std::vector<Coalition> essentials;          // canonical order
  std::vector<Coalition> minimal_essentials;  // those of cardinality kappa_m
  std::optional<int> kappa_m;                 // empty iff there are no essentials
};

/// G is critical wrt S: S u G wins and S \ G loses.
bool is_critical(const Game& game, Coalition g, Coalition s);

/// Player i is essential for the critical coalition G wrt S. Throws Error
/// when i is not in G or G is not critical.
bool is_essential_member(const Game& game, int i, Coalition g, Coalition s);

/// G is critical wrt S and every member of G is essential.
bool is_essential_coalition(const Game& game, Coalition g, Coalition s);

/// All essential coalitions wrt S. These are the inclusion-minimal members of
/// W_min \ S when S loses and of B_min \ S^c when S wins.
EssentialFamilies essential_families(const Game& game, Coalition s);

/// Smallest essential coalition size wrt S. Every valid game has one.
int kappa_m(const Game& game, Coalition s);

Rank g_rank(const Game& game, int i, Coalition s);
Rank d_rank(const Game& game, int i, Coalition s);
Rank m_rank(const Game& game, int i, Coalition s);

/// Every k for which some critical G of size k contains i as an essential member.
std::vector<int> e_ranks(const Game& game, int i, Coalition s);

std::optional<Coalition> g_witness(const Game& game, int i, Coalition s);

Side criticality_side(const Game& game, int i, Coalition s);

CriticalityProfile criticality_profile(const Game& game, int i, Coalition s);

/// Players whose g-rank is missing or worse than their d-rank.
std::vector<int> free_riders(const Game& game, Coalition s);

/// Player i is critical under `notion` (d or g, any rank) wrt both S u {i} and S \ {i}.
bool opportunity_test_single(const Game& game, int i, Coalition s, Notion notion);

/// Player i is g-critical wrt both (S u G) \ {i} and S u G u {i}, or wrt both
/// (S \ G) \ {i} and (S \ G) u {i}. Throws Error when i is in G.
bool opportunity_test_group(const Game& game, int i, Coalition s, Coalition g);

/// Per-player g-ranks, m-membership and kappa_m for one coalition, in one pass
/// over the minimal winning (S losing) or minimal blocking (S winning) family.
struct CoalitionRanks {
  Coalition coalition;
  bool winning = false;
  int kappa_m = 0;
  std::vector<Rank> g, d, m;
};
CoalitionRanks rank_coalition(const Game& game, Coalition s);

namespace detail {

inline constexpr int kNoRank = -1;

/// Allocation-free core of rank_coalition. `g` receives g-ranks (kNoRank when
/// not g-critical), `m_member` 1 for m-critical players. Returns kappa_m.
int rank_kernel(const Game& game, Coalition s, std::span<int> g, std::span<std::uint8_t> m_member);

}  // namespace detail

}  // namespace groupcrit
