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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "groupcrit/indices.hpp"

namespace groupcrit {

/// First-order stochastic dominance of w's rank vector over v's.
enum class Fsd { Dominates, DominatedBy, Equal, Incomparable };
enum class LexOrder { Greater, Equal, Less };

std::string to_string(Fsd fsd);
std::string to_string(LexOrder lex);

/// w weakly dominates v: Dominates or Equal.
inline bool weakly_dominates(Fsd fsd) { return fsd == Fsd::Dominates || fsd == Fsd::Equal; }

/// Compares two cumulative vectors entry by entry.
struct FsdResult {
  Fsd outcome = Fsd::Equal;
  std::optional<int> w_shortfall;  // first rank with pi_w < pi_v
  std::optional<int> v_shortfall;  // first rank with pi_v < pi_w
};
FsdResult compare_cumulative(const std::vector<Rational>& pi_v, const std::vector<Rational>& pi_w);
LexOrder compare_lex(const std::vector<Rational>& beta_v, const std::vector<Rational>& beta_w);

struct NotionComparison {
  Notion notion = Notion::g;
  std::vector<Rational> beta_v, beta_w;
  std::vector<Rational> pi_v, pi_w;
  FsdResult fsd;
  LexOrder lex = LexOrder::Equal;
};

/// Where w fails to dominate v: pi_w(rank) < pi_v(rank).
struct ViolationWitness {
  Notion notion = Notion::g;
  int rank = 0;
  Rational pi_v, pi_w;
};

struct ComparisonReport {
  int player = 0;
  bool derivative_dominates = false;  // w'_i(S) >= v'_i(S) for all S
  std::vector<Coalition> strict_coalitions;
  std::array<NotionComparison, 3> notions;  // d, g, m
  std::vector<ViolationWitness> violations;

  const NotionComparison& of(Notion notion) const { return notions[static_cast<std::size_t>(notion)]; }
};

/// Throws Error when the games do not share the same player set.
ComparisonReport compare(const Game& v, const Game& w, int player, const ProbabilityModel& model,
                         const ComputeOptions& opts = {});

struct RankChangeRow {
  Coalition coalition;
  std::array<Rank, 3> v{Rank::not_critical(), Rank::not_critical(), Rank::not_critical()};  // d, g, m
  std::array<Rank, 3> w{Rank::not_critical(), Rank::not_critical(), Rank::not_critical()};

  Rank rank_v(Notion x) const { return v[static_cast<std::size_t>(x)]; }
  Rank rank_w(Notion x) const { return w[static_cast<std::size_t>(x)]; }
};

/// Player's d, g and m ranks in both games for every coalition, rows ordered by
/// size and then by member list.
std::vector<RankChangeRow> rank_change_table(const Game& v, const Game& w, int player);

/// Aligned text rendering with the chosen notion columns and ✗ for NotCritical.
std::string format_rank_change_table(const std::vector<RankChangeRow>& rows, const std::vector<Notion>& notions,
                                     const PlayerSet& players);

}  // namespace groupcrit
