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

#include "groupcrit/indices.hpp"

#include <array>
#include <stdexcept>

#include "groupcrit/error.hpp"

namespace groupcrit {

int IndexTable::max_rank() const {
  int best = 0;
  for (const auto& row : beta)
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) best = std::max(best, static_cast<int>(k) + 1);
  return best;
}

const IndexTable& IndexTables::of(Notion notion) const {
  switch (notion) {
    case Notion::d: return d;
    case Notion::g: return g;
    case Notion::m: return m;
  }
  throw std::logic_error("bad notion");
}

namespace {

constexpr std::array<Notion, 3> kNotions{Notion::d, Notion::g, Notion::m};

std::size_t notion_slot(Notion x) { return static_cast<std::size_t>(x); }

// Integer hit counts keyed by (notion, player, rank, |S|), plus kappa_m counts
// keyed by (kappa, |S|). Valid for size-symmetric models only.
struct CountState {
  std::size_t n = 0;
  std::vector<std::uint64_t> hits;
  std::vector<std::uint64_t> kappa;

  explicit CountState(std::size_t players)
      : n(players), hits(3 * players * players * (players + 1), 0), kappa((players + 1) * (players + 1), 0) {}

  std::uint64_t& hit(Notion x, std::size_t i, int rank, int size) {
    return hits[((notion_slot(x) * n + i) * n + static_cast<std::size_t>(rank - 1)) * (n + 1) +
                static_cast<std::size_t>(size)];
  }
  std::uint64_t& kappa_at(int k, int size) {
    return kappa[static_cast<std::size_t>(k) * (n + 1) + static_cast<std::size_t>(size)];
  }
};

// Rational sums keyed by (notion, player, rank) plus the mu accumulator.
struct SumState {
  std::size_t n = 0;
  std::vector<Rational> beta;
  Rational mu = 0;

  explicit SumState(std::size_t players) : n(players), beta(3 * players * players) {}

  Rational& at(Notion x, std::size_t i, int rank) {
    return beta[(notion_slot(x) * n + i) * n + static_cast<std::size_t>(rank - 1)];
  }
};

IndexTable make_table(Notion notion, const ProbabilityModel& model, std::size_t n) {
  IndexTable t;
  t.notion = notion;
  t.model = model;
  t.players = static_cast<int>(n);
  t.beta.assign(n, std::vector<Rational>(n));
  return t;
}

void finish_table(IndexTable& t) {
  const std::size_t n = static_cast<std::size_t>(t.players);
  t.pi_cumulative.assign(n, std::vector<Rational>(n));
  t.pi_total.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational run = 0;
    for (std::size_t k = 0; k < n; ++k) {
      run += t.beta[i][k];
      t.pi_cumulative[i][k] = run;
    }
    t.pi_total[i] = run;
  }
}

}  // namespace

IndexTables index_tables(const Game& game, const ProbabilityModel& model, const ComputeOptions& opts) {
  const int n = game.size();
  const auto un = static_cast<std::size_t>(n);
  model.check_players(n);

  IndexTables out{make_table(Notion::d, model, un), make_table(Notion::g, model, un),
                  make_table(Notion::m, model, un)};
  Rational mu = 0;

  auto record = [&](auto&& add_hit, auto&& add_kappa, Coalition s, std::span<int> g,
                    std::span<std::uint8_t> m) {
    const int kappa = detail::rank_kernel(game, s, g, m);
    add_kappa(kappa, s);
    for (std::size_t i = 0; i < un; ++i) {
      if (g[i] != detail::kNoRank) add_hit(Notion::g, i, g[i], s);
      if (m[i]) add_hit(Notion::m, i, kappa, s);
      add_hit(Notion::d, i, m[i] ? kappa : kappa + 1, s);
    }
  };

  if (model.size_symmetric()) {
    const std::size_t total = std::size_t{1} << n;
    auto states = parallel_chunks(
        total, resolve_threads(opts.threads), [&] { return CountState(un); },
        [&](CountState& st, std::size_t begin, std::size_t end) {
          std::vector<int> g(un);
          std::vector<std::uint8_t> m(un);
          auto add_hit = [&](Notion x, std::size_t i, int rank, Coalition s) { ++st.hit(x, i, rank, s.size()); };
          auto add_kappa = [&](int k, Coalition s) { ++st.kappa_at(k, s.size()); };
          for (std::size_t mask = begin; mask < end; ++mask)
            record(add_hit, add_kappa, Coalition(static_cast<Mask>(mask)), g, m);
        });
    CountState merged(un);
    for (const auto& st : states) {
      for (std::size_t k = 0; k < merged.hits.size(); ++k) merged.hits[k] += st.hits[k];
      for (std::size_t k = 0; k < merged.kappa.size(); ++k) merged.kappa[k] += st.kappa[k];
    }
    std::vector<Rational> p_size;
    for (int s = 0; s <= n; ++s) p_size.push_back(model.size_probability(s, n));
    for (Notion x : kNotions) {
      IndexTable& t = (x == Notion::d) ? out.d : (x == Notion::g) ? out.g : out.m;
      for (std::size_t i = 0; i < un; ++i)
        for (int rank = 1; rank <= n; ++rank) {
          Rational sum = 0;
          for (int s = 0; s <= n; ++s)
            if (auto c = merged.hit(x, i, rank, s)) sum += p_size[static_cast<std::size_t>(s)] * c;
          t.beta[i][static_cast<std::size_t>(rank - 1)] = sum;
        }
    }
    for (int k = 1; k <= n; ++k)
      for (int s = 0; s <= n; ++s)
        if (auto c = merged.kappa_at(k, s)) mu += p_size[static_cast<std::size_t>(s)] * k * c;
  } else {
    // Only coalitions with positive probability contribute.
    const auto& entries = std::get<ExplicitModel>(model.variant()).entries;
    SumState st(un);
    std::vector<int> g(un);
    std::vector<std::uint8_t> m(un);
    Rational p;
    auto add_hit = [&](Notion x, std::size_t i, int rank, Coalition) { st.at(x, i, rank) += p; };
    auto add_kappa = [&](int k, Coalition) { st.mu += p * k; };
    for (const auto& [mask, prob] : entries) {
      if (prob == 0) continue;
      p = prob;
      record(add_hit, add_kappa, Coalition(mask), g, m);
    }
    for (Notion x : kNotions) {
      IndexTable& t = (x == Notion::d) ? out.d : (x == Notion::g) ? out.g : out.m;
      for (std::size_t i = 0; i < un; ++i)
        for (int rank = 1; rank <= n; ++rank) t.beta[i][static_cast<std::size_t>(rank - 1)] = st.at(x, i, rank);
    }
    mu = st.mu;
  }

  for (IndexTable* t : {&out.d, &out.g, &out.m}) {
    t->mu = mu;
    finish_table(*t);
  }

  std::vector<Rational> avg(un);
  for (std::size_t i = 0; i < un; ++i) {
    for (int rank = 1; rank <= n; ++rank) avg[i] += out.d.beta[i][static_cast<std::size_t>(rank - 1)] * rank;
    if (avg[i] != 1 + mu - out.m.pi_total[i])
      throw std::logic_error("expected d-rank of player " + std::to_string(i + 1) + " is " + to_fraction(avg[i]) +
                             " but 1 + mu - pi^m gives " + to_fraction(1 + mu - out.m.pi_total[i]));
  }
  out.d.avg_d_rank = std::move(avg);
  return out;
}

IndexTable index_table(const Game& game, const ProbabilityModel& model, Notion notion, const ComputeOptions& opts) {
  IndexTables all = index_tables(game, model, opts);
  switch (notion) {
    case Notion::d: return std::move(all.d);
    case Notion::g: return std::move(all.g);
    case Notion::m: return std::move(all.m);
  }
  throw std::logic_error("bad notion");
}

namespace {

void check_rank_one(const IndexTable& table, const std::vector<Rational>& classical, const char* what) {
  for (std::size_t i = 0; i < classical.size(); ++i)
    if (table.beta[i][0] != classical[i])
      throw std::logic_error(std::string(what) + " rank-1 value of player " + std::to_string(i + 1) + " is " +
                             to_fraction(table.beta[i][0]) + ", classical index is " + to_fraction(classical[i]));
}

// Pivot counts by coalition size: piv[i][s] = #{S without i, |S| = s, i pivotal}.
std::vector<std::vector<std::uint64_t>> pivot_counts(const Game& game) {
  const int n = game.size();
  std::vector<std::vector<std::uint64_t>> piv(static_cast<std::size_t>(n),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    const Coalition s(mask);
    if (game.evaluate(s)) continue;
    for (int i = 0; i < n; ++i)
      if (!s.contains(i) && game.evaluate(s.with(i))) ++piv[static_cast<std::size_t>(i)][static_cast<std::size_t>(s.size())];
  }
  return piv;
}

}  // namespace

IndexTable g_shapley(const Game& game, const ComputeOptions& opts) {
  IndexTable t = index_table(game, ProbabilityModel::shapley_order(), Notion::g, opts);
  check_rank_one(t, classical_shapley(game), "g-Shapley");
  return t;
}

IndexTable g_banzhaf(const Game& game, const ComputeOptions& opts) {
  IndexTable t = index_table(game, ProbabilityModel::uniform(), Notion::g, opts);
  check_rank_one(t, classical_banzhaf(game), "g-Banzhaf");
  return t;
}

std::vector<Rational> classical_shapley(const Game& game) {
  const int n = game.size();
  const auto piv = pivot_counts(game);
  const BigInt n_fact = factorial(n);
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s)
      if (auto c = piv[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)])
        out[static_cast<std::size_t>(i)] += Rational(factorial(s) * factorial(n - s - 1) * c, n_fact);
  return out;
}

std::vector<Rational> classical_banzhaf(const Game& game) {
  const int n = game.size();
  const auto piv = pivot_counts(game);
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    BigInt total = 0;
    for (auto c : piv[static_cast<std::size_t>(i)]) total += c;
    out[static_cast<std::size_t>(i)] = Rational(total, BigInt(1) << (n - 1));
  }
  return out;
}

}  // namespace groupcrit
