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

#include "groupcrit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "groupcrit/error.hpp"

namespace groupcrit {

namespace {

void check_size(const Game& game, int limit = kMaxOraclePlayers) {
  if (game.size() > limit)
    throw Error("oracle limited to " + std::to_string(limit) + " players, game has " + std::to_string(game.size()));
}

bool critical(const Game& game, Mask g, Mask s) {
  return game.evaluate(Coalition(s | g)) && !game.evaluate(Coalition(s & ~g));
}

bool essential_in(const Game& game, int i, Mask g, Mask s) { return !critical(game, g & ~(Mask{1} << i), s); }

bool essential_coalition(const Game& game, Mask g, Mask s) {
  if (!critical(game, g, s)) return false;
  for (int j = 0; j < game.size(); ++j)
    if (((g >> j) & 1U) && !essential_in(game, j, g, s)) return false;
  return true;
}

Rank smallest(std::optional<int> k) { return k ? Rank::of(*k) : Rank::not_critical(); }

}  // namespace

std::vector<Coalition> oracle_essentials(const Game& game, Coalition s) {
  check_size(game);
  std::vector<Coalition> out;
  for (Mask g = 0; g < (Mask{1} << game.size()); ++g)
    if (essential_coalition(game, g, s.bits())) out.emplace_back(g);
  std::sort(out.begin(), out.end(), BySizeThenMask{});
  return out;
}

Rank oracle_d_rank(const Game& game, int i, Coalition s) {
  check_size(game);
  std::optional<int> best;
  for (Mask g = 0; g < (Mask{1} << game.size()); ++g) {
    if (!((g >> i) & 1U) || !critical(game, g, s.bits())) continue;
    const int k = std::popcount(g);
    if (!best || k < *best) best = k;
  }
  return smallest(best);
}

Rank oracle_g_rank(const Game& game, int i, Coalition s) {
  std::optional<int> best;
  for (Coalition g : oracle_essentials(game, s))
    if (g.contains(i) && (!best || g.size() < *best)) best = g.size();
  return smallest(best);
}

std::optional<int> oracle_kappa_m(const Game& game, Coalition s) {
  std::optional<int> best;
  for (Coalition g : oracle_essentials(game, s))
    if (!best || g.size() < *best) best = g.size();
  return best;
}

Rank oracle_m_rank(const Game& game, int i, Coalition s) {
  const auto essentials = oracle_essentials(game, s);
  std::optional<int> kappa;
  for (Coalition g : essentials)
    if (!kappa || g.size() < *kappa) kappa = g.size();
  for (Coalition g : essentials)
    if (g.contains(i) && g.size() == *kappa) return Rank::of(*kappa);
  return Rank::not_critical();
}

std::vector<int> oracle_e_ranks(const Game& game, int i, Coalition s) {
  check_size(game);
  std::set<int> out;
  for (Mask g = 0; g < (Mask{1} << game.size()); ++g)
    if (((g >> i) & 1U) && critical(game, g, s.bits()) && essential_in(game, i, g, s.bits()))
      out.insert(std::popcount(g));
  return {out.begin(), out.end()};
}

IndexTable oracle_index(const Game& game, const ProbabilityModel& model, Notion notion) {
  check_size(game);
  const int n = game.size();
  const auto un = static_cast<std::size_t>(n);
  IndexTable t;
  t.notion = notion;
  t.model = model;
  t.players = n;
  t.beta.assign(un, std::vector<Rational>(un));
  std::vector<Rational> d_beta_rank_weighted(un);
  std::vector<Rational> pi_m(un);
  t.mu = 0;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    const Coalition s(mask);
    const Rational p = model.probability(s, n);
    if (p == 0) continue;
    t.mu += p * oracle_kappa_m(game, s).value();
    for (int i = 0; i < n; ++i) {
      const Rank r = notion == Notion::d   ? oracle_d_rank(game, i, s)
                     : notion == Notion::g ? oracle_g_rank(game, i, s)
                                           : oracle_m_rank(game, i, s);
      if (r.critical()) t.beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(r.value() - 1)] += p;
    }
  }
  t.pi_cumulative.assign(un, std::vector<Rational>(un));
  t.pi_total.assign(un, Rational(0));
  for (std::size_t i = 0; i < un; ++i) {
    Rational run = 0;
    for (std::size_t k = 0; k < un; ++k) t.pi_cumulative[i][k] = (run += t.beta[i][k]);
    t.pi_total[i] = run;
  }
  if (notion == Notion::d) {
    std::vector<Rational> avg(un);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t k = 0; k < un; ++k) avg[i] += t.beta[i][k] * static_cast<int>(k + 1);
    t.avg_d_rank = std::move(avg);
  }
  return t;
}

std::vector<Rational> oracle_shapley_permutations(const Game& game) {
  check_size(game, 10);
  const int n = game.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<BigInt> pivots(static_cast<std::size_t>(n));
  BigInt perms = 0;
  do {
    ++perms;
    Coalition prefix;
    for (int p : order) {
      if (!game.evaluate(prefix) && game.evaluate(prefix.with(p))) {
        ++pivots[static_cast<std::size_t>(p)];
        break;
      }
      prefix = prefix.with(p);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<Rational> out;
  for (const auto& c : pivots) out.emplace_back(c, perms);
  return out;
}

}  // namespace groupcrit
