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
#include "groupcrit/game.hpp"
#include "groupcrit/parallel.hpp"
#include "groupcrit/probability.hpp"
#include "groupcrit/rational.hpp"

namespace groupcrit {

/// Per-rank power measures of one criticality notion under one probability model.
struct IndexTable {
  Notion notion = Notion::g;
  ProbabilityModel model = ProbabilityModel::uniform();
  int players = 0;
  /// beta[i][k-1]: probability that player i is critical of rank k.
  std::vector<std::vector<Rational>> beta;
  /// pi_cumulative[i][k-1]: probability of rank at most k.
  std::vector<std::vector<Rational>> pi_cumulative;
  /// Probability of being critical at any rank.
  std::vector<Rational> pi_total;
  /// Expected d-rank per player; present for notion d only.
  std::optional<std::vector<Rational>> avg_d_rank;
  /// Expected smallest essential coalition size, sum of kappa_m(S) p(S).
  Rational mu;

  /// Largest rank with a non-zero entry in any row (0 when all rows are zero).
  int max_rank() const;
};

struct IndexTables {
  IndexTable d, g, m;
  const IndexTable& of(Notion notion) const;
};

/// All three notions from one sweep over the 2^n coalitions. For notion d the
/// expected rank is computed directly and also as 1 + mu - pi^m; the two must
/// agree exactly (std::logic_error otherwise).
IndexTables index_tables(const Game& game, const ProbabilityModel& model, const ComputeOptions& opts = {});

IndexTable index_table(const Game& game, const ProbabilityModel& model, Notion notion,
                       const ComputeOptions& opts = {});

/// g-notion table under the Shapley-order model. Its rank-1 column is checked
/// against classical_shapley.
IndexTable g_shapley(const Game& game, const ComputeOptions& opts = {});

/// g-notion table under the uniform model. Its rank-1 column is checked
/// against classical_banzhaf.
IndexTable g_banzhaf(const Game& game, const ComputeOptions& opts = {});

/// Shapley-Shubik index from pivot counts weighted by s!(n-s-1)!/n!.
std::vector<Rational> classical_shapley(const Game& game);

/// Non-normalized Banzhaf value: pivotal coalitions without i over 2^(n-1).
std::vector<Rational> classical_banzhaf(const Game& game);

}  // namespace groupcrit
