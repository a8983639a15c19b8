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

// Acceptance gate: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the listed numbers. Exit status is non-zero
// when any selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "groupcrit/cli.hpp"
#include "groupcrit/coalition_algebra.hpp"
#include "groupcrit/criticality.hpp"
#include "groupcrit/dominance.hpp"
#include "groupcrit/elections.hpp"
#include "groupcrit/indices.hpp"
#include "groupcrit/oracle.hpp"
#include "random_games.hpp"

namespace gc = groupcrit;
using gc::Coalition;
using gc::Game;
using gc::Mask;
using gc::Notion;
using gc::Rank;
using gc::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 40) notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

Coalition c1(std::initializer_list<int> one_based) {
  Coalition c;
  for (int p : one_based) c = c.with(p - 1);
  return c;
}

Game explicit_game(int n, std::initializer_list<Coalition> sets) {
  return Game(gc::PlayerSet::numbered(n), gc::ExplicitMinimalWinning{std::vector<Coalition>(sets)});
}

std::string rank_str(Rank r) { return gc::to_string(r); }

std::string data(const std::string& name) { return std::string(GROUPCRIT_SOURCE_DIR) + "/" + name; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Reference rank values below: 0 stands for the ✗ mark.
Rank printed(int k) { return k == 0 ? Rank::not_critical() : Rank::of(k); }

// ---------------------------------------------------------------------------

Outcome criterion_1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Game g = explicit_game(8, {c1({1, 2, 3}), c1({3, 4, 5}), c1({4, 5, 6, 7})});
  const Coalition s = c1({1});
  const std::map<int, Rank> g_expected{{2, Rank::of(2)}, {3, Rank::of(2)}, {4, Rank::of(3)}, {5, Rank::of(3)},
                                       {6, Rank::of(4)}, {7, Rank::of(4)}, {8, Rank::not_critical()}};
  for (const auto& [p, r] : g_expected) {
    const Rank got = gc::g_rank(g, p - 1, s);
    o.require(got == r, "S={1} g-rank of " + std::to_string(p) + ": expected " + rank_str(r) + ", got " + rank_str(got));
  }
  for (int p = 1; p <= 8; ++p) {
    const Rank want = Rank::of(p == 2 || p == 3 ? 2 : 3);
    const Rank got = gc::d_rank(g, p - 1, s);
    o.require(got == want, "S={1} d-rank of " + std::to_string(p) + ": expected " + rank_str(want) + ", got " + rank_str(got));
  }
  std::vector<int> riders;
  for (int i : gc::free_riders(g, s)) riders.push_back(i + 1);
  std::string shown;
  for (int r : riders) shown += (shown.empty() ? "" : ",") + std::to_string(r);
  o.require(riders == std::vector<int>{6, 7, 8}, "S={1} free riders: expected {6,7,8}, got {" + shown + "}");
  const Coalition w = c1({3, 4, 5, 6, 7});
  const std::map<int, int> w_expected{{4, 1}, {5, 1}, {3, 2}, {6, 2}, {7, 2}};
  for (const auto& [p, k] : w_expected) {
    const Rank got = gc::g_rank(g, p - 1, w);
    o.require(got == Rank::of(k),
              "S={3,4,5,6,7} g-rank of " + std::to_string(p) + ": expected " + std::to_string(k) + ", got " + rank_str(got));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s exceeds 1 s");
  return o;
}

// ---------------------------------------------------------------------------

struct PrintedRow {
  Coalition s;
  int a_v, a_w, b_v, b_w;  // two notion columns, v then w; 0 = ✗
};

void check_table(Outcome& o, const std::string& name, const Game& v, const Game& w, Notion a, Notion b,
                 const std::vector<PrintedRow>& rows) {
  const auto table = gc::rank_change_table(v, w, 0);
  std::map<Mask, gc::RankChangeRow> by_coalition;
  for (const auto& r : table) by_coalition.emplace(r.coalition.bits(), r);
  auto oracle = [](const Game& game, Notion x, Coalition s) {
    return x == Notion::d ? gc::oracle_d_rank(game, 0, s)
           : x == Notion::g ? gc::oracle_g_rank(game, 0, s)
                            : gc::oracle_m_rank(game, 0, s);
  };
  int cells = 0, mismatches = 0;
  for (const auto& p : rows) {
    const auto it = by_coalition.find(p.s.bits());
    if (it == by_coalition.end()) {
      o.require(false, name + ": no row for " + gc::to_string(p.s));
      continue;
    }
    const std::vector<std::tuple<Notion, char, int>> cols{
        {a, 'v', p.a_v}, {a, 'w', p.a_w}, {b, 'v', p.b_v}, {b, 'w', p.b_w}};
    for (const auto& [x, game, value] : cols) {
      ++cells;
      const Rank got = game == 'v' ? it->second.rank_v(x) : it->second.rank_w(x);
      const Rank ref = oracle(game == 'v' ? v : w, x, p.s);
      if (got != ref) o.require(false, name + ": fast path disagrees with the oracle at " + gc::to_string(p.s));
      if (got != printed(value)) {
        ++mismatches;
        o.require(false, name + " " + gc::to_string(x) + "/" + game + " at S=" + gc::to_string(p.s) + ": expected " +
                             rank_str(printed(value)) + ", computed " + rank_str(got));
      }
    }
  }
  o.note(name + ": " + std::to_string(cells - mismatches) + " of " + std::to_string(cells) + " reference cells reproduced");
}

Outcome criterion_2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Game v1 = explicit_game(4, {c1({1, 2, 3}), c1({4})});
  const Game w1 = explicit_game(4, {c1({1, 2, 3}), c1({1, 2, 4})});
  check_table(o, "rank grid A", v1, w1, Notion::d, Notion::g,
              {{c1({}), 2, 3, 3, 3},          {c1({1}), 2, 3, 0, 0},       {c1({2}), 2, 2, 2, 2},
               {c1({3}), 2, 2, 2, 2},         {c1({4}), 2, 2, 0, 2},       {c1({1, 2}), 2, 2, 0, 0},
               {c1({1, 3}), 2, 2, 0, 0},      {c1({1, 4}), 2, 2, 0, 0},    {c1({2, 3}), 1, 1, 1, 1},
               {c1({2, 4}), 2, 1, 0, 1},      {c1({3, 4}), 2, 2, 0, 2},    {c1({1, 2, 3}), 1, 1, 1, 1},
               {c1({1, 2, 4}), 2, 1, 0, 1},   {c1({1, 3, 4}), 2, 2, 0, 0}, {c1({2, 3, 4}), 2, 1, 0, 1},
               {c1({1, 2, 3, 4}), 2, 1, 0, 1}});
  const Game v2 = explicit_game(5, {c1({1, 2, 3, 4}), c1({2, 3, 4, 5})});
  const Game w2 = explicit_game(5, {c1({1, 2, 3}), c1({3, 5}), c1({2, 4, 5})});
  check_table(o, "rank grid B", v2, w2, Notion::g, Notion::m,
              {{c1({}), 4, 3, 4, 0},        {c1({2}), 3, 2, 3, 0},       {c1({3}), 3, 2, 3, 2},
               {c1({4}), 3, 3, 3, 0},       {c1({5}), 0, 3, 0, 0},       {c1({2, 3}), 2, 1, 2, 1},
               {c1({2, 4}), 2, 2, 2, 2},    {c1({2, 5}), 3, 2, 3, 0},    {c1({3, 4}), 2, 2, 2, 0},
               {c1({4, 5}), 3, 3, 3, 0},    {c1({1, 2, 3}), 0, 1, 0, 0}, {c1({2, 3, 4}), 1, 1, 1, 1},
               {c1({1, 2, 3, 4}), 1, 1, 1, 1}});
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s exceeds 1 s");
  return o;
}

// ---------------------------------------------------------------------------

// Expected d-rank straight from the beta column, independent of the library's
// own average.
Rational direct_average(const gc::IndexTable& d, std::size_t i) {
  Rational avg = 0;
  for (std::size_t k = 0; k < d.beta[i].size(); ++k) avg += d.beta[i][k] * static_cast<int>(k + 1);
  return avg;
}

Outcome criterion_3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Game g = explicit_game(4, {c1({1, 2}), c1({3})});
  const auto tabs = gc::index_tables(g, gc::ProbabilityModel::uniform());
  const std::vector<Rational> avg{Rational(28, 16), Rational(28, 16), Rational(20, 16), Rational(34, 16)};
  const std::vector<Rational> pim{Rational(6, 16), Rational(6, 16), Rational(14, 16), Rational(0)};
  for (std::size_t i = 0; i < 4; ++i) {
    o.require(direct_average(tabs.d, i) == avg[i], "example avg d-rank of player " + std::to_string(i + 1) + " is " +
                                                        gc::to_fraction(direct_average(tabs.d, i)));
    o.require(tabs.m.pi_total[i] == pim[i], "example pi^m of player " + std::to_string(i + 1) + " is " +
                                                gc::to_fraction(tabs.m.pi_total[i]));
  }
  o.require(tabs.d.mu == Rational(18, 16), "example mu is " + gc::to_fraction(tabs.d.mu));
  const auto oracle_d = gc::oracle_index(g, gc::ProbabilityModel::uniform(), Notion::d);
  o.require(oracle_d.beta == tabs.d.beta && oracle_d.mu == tabs.d.mu, "example table differs from the oracle");

  gc::testing::Rng rng(3003);
  int checked = 0, oracle_checked = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 10;
    const Game game = gc::testing::random_weighted(rng, n);
    std::vector<gc::ProbabilityModel> models{gc::ProbabilityModel::uniform(), gc::ProbabilityModel::shapley_order()};
    for (int k = 0; k < 20; ++k) models.push_back(gc::testing::random_explicit_model(rng, n));
    for (const auto& model : models) {
      const auto tt = gc::index_tables(game, model, gc::ComputeOptions{1});
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const Rational lhs = direct_average(tt.d, i);
        const Rational rhs = 1 + tt.d.mu - tt.m.pi_total[i];
        o.require(lhs == rhs, "identity fails on game " + std::to_string(t) + " (" + model.name() + "), player " +
                                  std::to_string(i + 1) + ": " + gc::to_fraction(lhs) + " vs " + gc::to_fraction(rhs));
        ++checked;
      }
      if (n <= 5 && t % 4 == 0) {
        const auto od = gc::oracle_index(game, model, Notion::d);
        const auto om = gc::oracle_index(game, model, Notion::m);
        o.require(od.beta == tt.d.beta && od.mu == tt.d.mu && om.pi_total == tt.m.pi_total,
                  "tables differ from the oracle on game " + std::to_string(t) + " (" + model.name() + ")");
        ++oracle_checked;
      }
    }
  }
  o.note(std::to_string(checked) + " player/model identities checked, " + std::to_string(oracle_checked) +
         " tables cross-checked against the oracle");
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  return o;
}

// ---------------------------------------------------------------------------

// Raw Banzhaf by direct swing count.
std::vector<Rational> swing_banzhaf(const Game& g) {
  const int n = g.size();
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    long long swings = 0;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (!((m >> i) & 1U) && g.evaluate(Coalition(m).with(i)) && !g.evaluate(Coalition(m))) ++swings;
    out.emplace_back(swings, 1LL << (n - 1));
  }
  return out;
}

Outcome criterion_4() {
  Outcome o;
  gc::testing::Rng rng(4004);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 8;
    const Game g = gc::testing::random_weighted(rng, n);
    const auto shapley = gc::g_shapley(g, gc::ComputeOptions{1});
    const auto banzhaf = gc::g_banzhaf(g, gc::ComputeOptions{1});
    const auto perm = gc::oracle_shapley_permutations(g);
    const auto swings = swing_banzhaf(g);
    const auto cs = gc::classical_shapley(g);
    const auto cb = gc::classical_banzhaf(g);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      o.require(shapley.beta[i][0] == perm[i] && cs[i] == perm[i],
                "game " + std::to_string(t) + " player " + std::to_string(i + 1) + ": g-Shapley rank 1 " +
                    gc::to_fraction(shapley.beta[i][0]) + ", permutation Shapley " + gc::to_fraction(perm[i]));
      o.require(banzhaf.beta[i][0] == swings[i] && cb[i] == swings[i],
                "game " + std::to_string(t) + " player " + std::to_string(i + 1) + ": g-Banzhaf rank 1 " +
                    gc::to_fraction(banzhaf.beta[i][0]) + ", swing count " + gc::to_fraction(swings[i]));
    }
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion_5() {
  Outcome o;
  gc::testing::Rng rng(5005);
  int games = 0;
  for (int t = 0; t < 120; ++t) {
    const int n = 1 + t % 10;
    const Game g = gc::testing::random_game(rng, n);
    Coalition in_some_min;
    for (Coalition w : g.minimal_winning()) in_some_min = in_some_min | w;
    for (const auto& model : {gc::ProbabilityModel::uniform(), gc::ProbabilityModel::shapley_order()}) {
      const auto tabs = gc::index_tables(g, model, gc::ComputeOptions{1});
      for (int i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const std::string who = "game " + std::to_string(t) + " (" + model.name() + ") player " + std::to_string(i + 1);
        o.require(tabs.d.pi_total[idx] == 1, who + ": pi^d = " + gc::to_fraction(tabs.d.pi_total[idx]));
        o.require(tabs.m.pi_total[idx] <= tabs.g.pi_total[idx], who + ": pi^m > pi^g");
        o.require((tabs.g.pi_total[idx] == 0) == !in_some_min.contains(i),
                  who + ": pi^g = " + gc::to_fraction(tabs.g.pi_total[idx]) +
                      (in_some_min.contains(i) ? " but the player is in a minimal winning coalition"
                                               : " but the player is in no minimal winning coalition"));
      }
    }
    ++games;
  }
  o.note(std::to_string(games) + " games, n = 1..10, uniform and Shapley-order models");
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion_6() {
  Outcome o;
  gc::testing::Rng rng(6006);
  int d_fail = 0, m_fail = 0, both = 0;
  for (int t = 0; t < 5000; ++t) {
    const auto pair = gc::testing::random_dominating_pair(rng, 3 + t % 6);
    std::vector<gc::ProbabilityModel> models{gc::ProbabilityModel::uniform(), gc::ProbabilityModel::shapley_order(),
                                             gc::testing::random_explicit_model(rng, pair.v.size())};
    bool pair_d = false, pair_m = false;
    for (const auto& model : models) {
      const auto r = gc::compare(pair.v, pair.w, pair.player, model, gc::ComputeOptions{1});
      o.require(r.derivative_dominates, "pair " + std::to_string(t) + " is not derivative-dominating");
      o.require(gc::weakly_dominates(r.of(Notion::g).fsd.outcome),
                "pair " + std::to_string(t) + " (" + model.name() + "): g-notion 1sd fails");
      for (const auto& c : r.notions)
        if (gc::weakly_dominates(c.fsd.outcome))
          o.require(c.lex != gc::LexOrder::Less, "pair " + std::to_string(t) + ": 1sd without lex");
      pair_d = pair_d || !gc::weakly_dominates(r.of(Notion::d).fsd.outcome);
      pair_m = pair_m || !gc::weakly_dominates(r.of(Notion::m).fsd.outcome);
    }
    d_fail += pair_d;
    m_fail += pair_m;
    both += pair_d && pair_m;
  }
  o.require(d_fail > 0, "no generated pair shows a d-notion 1sd failure");
  o.require(m_fail > 0, "no generated pair shows an m-notion 1sd failure");
  o.require(both > 0, "no single generated pair shows both failures");
  o.note("random pairs: " + std::to_string(d_fail) + " with d failure, " + std::to_string(m_fail) +
         " with m failure, " + std::to_string(both) + " with both");

  const Game v1 = explicit_game(4, {c1({1, 2, 3}), c1({4})});
  const Game w1 = explicit_game(4, {c1({1, 2, 3}), c1({1, 2, 4})});
  const Game v2 = explicit_game(5, {c1({1, 2, 3, 4}), c1({2, 3, 4, 5})});
  const Game w2 = explicit_game(5, {c1({1, 2, 3}), c1({3, 5}), c1({2, 4, 5})});
  for (const auto& model : {gc::ProbabilityModel::uniform(), gc::ProbabilityModel::shapley_order()}) {
    const auto r1 = gc::compare(v1, w1, 0, model);
    o.require(r1.derivative_dominates && gc::weakly_dominates(r1.of(Notion::g).fsd.outcome),
              "first fixed example: g-notion should dominate (" + model.name() + ")");
    o.require(!gc::weakly_dominates(r1.of(Notion::d).fsd.outcome),
              "first fixed example: d-notion should fail (" + model.name() + ")");
    const auto r2 = gc::compare(v2, w2, 0, model);
    o.require(r2.derivative_dominates && gc::weakly_dominates(r2.of(Notion::g).fsd.outcome),
              "second fixed example: g-notion should dominate (" + model.name() + ")");
    o.require(!gc::weakly_dominates(r2.of(Notion::m).fsd.outcome),
              "second fixed example: m-notion should fail (" + model.name() + ")");
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion_7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  gc::testing::Rng rng(7007);
  long cells = 0;
  for (int t = 0; t < 100; ++t) {
    const Game g = gc::testing::random_game(rng, 8);
    for (Mask m = 0; m < 256; ++m) {
      const Coalition s(m);
      const auto fast = gc::rank_coalition(g, s);
      const auto essentials = gc::oracle_essentials(g, s);
      int kappa = 99;
      for (Coalition e : essentials) kappa = std::min(kappa, e.size());
      for (int i = 0; i < 8; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        std::optional<int> g_min;
        bool in_min = false;
        for (Coalition e : essentials)
          if (e.contains(i)) {
            if (!g_min || e.size() < *g_min) g_min = e.size();
            in_min = in_min || e.size() == kappa;
          }
        const Rank og = g_min ? Rank::of(*g_min) : Rank::not_critical();
        const Rank om = in_min ? Rank::of(kappa) : Rank::not_critical();
        const Rank od = gc::oracle_d_rank(g, i, s);
        const std::string at = "game " + std::to_string(t) + " S=" + gc::to_string(s) + " i=" + std::to_string(i + 1);
        o.require(fast.g[idx] == og, at + ": g " + rank_str(fast.g[idx]) + " vs oracle " + rank_str(og));
        o.require(fast.m[idx] == om, at + ": m " + rank_str(fast.m[idx]) + " vs oracle " + rank_str(om));
        o.require(fast.d[idx] == od, at + ": d " + rank_str(fast.d[idx]) + " vs oracle " + rank_str(od));
        o.require(gc::g_rank(g, i, s) == og, at + ": single-query g differs");
        ++cells;
      }
    }
  }
  o.note(std::to_string(cells) + " (i,S) cells compared");
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "runtime " + std::to_string(secs) + " s exceeds 120 s");
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion_8() {
  Outcome o;
  for (auto kind : {gc::IndexKind::GShapley, gc::IndexKind::GBanzhaf}) {
    const std::string name = gc::to_string(kind);
    const auto seats18 = gc::load_seats_file(data("fixtures/it2018.csv"));
    const auto r18 = gc::election_report(seats18, kind, gc::ComputeOptions{1});
    std::vector<std::string> powered;
    for (std::size_t i = 0; i < r18.seats.rows.size(); ++i)
      if (r18.table.pi_total[i] > 0) powered.push_back(r18.seats.rows[i].acronym);
    std::string shown;
    for (const auto& p : powered) shown += (shown.empty() ? "" : ",") + p;
    o.require(powered.size() == 4 && r18.zero_power.size() == 10,
              "2018 " + name + ": " + std::to_string(powered.size()) + " powered parties {" + shown + "}, " +
                  std::to_string(r18.zero_power.size()) + " without power");
    const auto m5s = static_cast<std::size_t>(*gc::build_game(seats18).players().index_of("M5S"));
    for (std::size_t i = 0; i < r18.seats.rows.size(); ++i)
      if (i != m5s)
        o.require(r18.table.beta[m5s][0] > r18.table.beta[i][0],
                  "2018 " + name + ": M5S rank-1 value not strictly above " + r18.seats.rows[i].acronym);

    const auto r13 = gc::election_report(gc::load_seats_file(data("fixtures/it2013.csv")), kind, gc::ComputeOptions{1});
    for (std::size_t i = 0; i < r13.seats.rows.size(); ++i)
      o.require(r13.table.pi_total[i] > 0, "2013 " + name + ": " + r13.seats.rows[i].acronym + " has zero total power");
    o.require(r13.seats.rows.size() == 15, "2013 fixture should list 15 parties");

    for (const char* year : {"2013", "2018", "2022"}) {
      const auto r = gc::election_report(gc::load_seats_file(data(std::string("fixtures/it") + year + ".csv")), kind,
                                         gc::ComputeOptions{1});
      for (const auto& pair : r.seat_dominance)
        o.require(pair.holds(), std::string(year) + " " + name + ": " + r.seats.rows[static_cast<std::size_t>(pair.stronger)].acronym +
                                    " holds at least the seats of " + r.seats.rows[static_cast<std::size_t>(pair.weaker)].acronym +
                                    " but its rank vector does not dominate (" + gc::to_string(pair.fsd.outcome) + ")");
      o.note(std::string(year) + " " + name + ": " + std::to_string(r.seat_dominance.size()) +
             " seat-dominance pairs checked, quotas " + std::to_string(r.quotas[0]) + "/" + std::to_string(r.quotas[1]));
    }
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion_9() {
  Outcome o;
  auto run = [&](const std::string& index, const std::string& threads, double& secs) {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = gc::run_cli({"groupcrit", "elections", "--seats", data("fixtures/it2013.csv"), "--index", index,
                                  "--format", "json", "--threads", threads},
                                 out, err);
    secs = seconds_since(t0);
    o.require(code == 0, "elections " + index + " exited with " + std::to_string(code) + ": " + err.str());
    return out.str();
  };
  for (const std::string index : {"g-banzhaf", "g-shapley"}) {
    double single = 0, eight = 0;
    const std::string a = run(index, "1", single);
    const std::string b = run(index, "8", eight);
    o.require(single < 60.0, index + " single-threaded took " + std::to_string(single) + " s");
    o.require(eight < 15.0, index + " with 8 threads took " + std::to_string(eight) + " s");
    o.require(a == b, index + ": output differs between 1 and 8 threads");
    o.note(index + ": " + std::to_string(single) + " s with 1 thread, " + std::to_string(eight) + " s with 8");
  }
  return o;
}

// ---------------------------------------------------------------------------

// g-rank of every player wrt every coalition, straight from the definitions.
std::vector<std::vector<Rank>> oracle_g_table(const Game& g) {
  const int n = g.size();
  std::vector<std::vector<Rank>> out(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    for (int i = 0; i < n; ++i) out[m].push_back(gc::oracle_g_rank(g, i, Coalition(m)));
  return out;
}

Outcome criterion_10() {
  Outcome o;
  gc::testing::Rng rng(10010);
  long single = 0, prop = 0, group = 0, group_lib = 0;
  for (int t = 0; t < 24; ++t) {
    const int n = 1 + t % 8;
    const Game g = gc::testing::random_game(rng, n);
    const Mask full = (Mask{1} << n) - 1;
    const auto gt = oracle_g_table(g);
    auto gcrit = [&](Coalition s, int i) { return gt[s.bits()][static_cast<std::size_t>(i)].critical(); };
    for (Mask m = 0; m <= full; ++m) {
      const Coalition s(m);
      for (int i = 0; i < n; ++i) {
        const std::string at = "game " + std::to_string(t) + " S=" + gc::to_string(s) + " i=" + std::to_string(i + 1);

        // d passes the single-player test at every rank.
        o.require(gc::opportunity_test_single(g, i, s, Notion::d), at + ": d fails the opportunity test");
        ++single;

        // Inessentiality at d-rank >= 2 on at least one side: on that side every
        // smallest critical coalition containing i leaves i inessential.
        const Rank d = gc::oracle_d_rank(g, i, s);
        if (d.value() >= 2) {
          bool some_side = false;
          for (Coalition side : {s.without(i), s.with(i)}) {
            bool all_inessential = true;
            for (Mask gm = 0; gm <= full; ++gm) {
              const Coalition gg(gm);
              if (!gg.contains(i) || gg.size() != gc::oracle_d_rank(g, i, side).value()) continue;
              if (!gc::is_critical(g, gg, side)) continue;
              if (gc::is_essential_member(g, i, gg, side)) all_inessential = false;
            }
            some_side = some_side || all_inessential;
          }
          o.require(some_side, at + ": essential at d-rank " + std::to_string(d.value()) + " on both sides");
          ++prop;
        }

        // Group test: the smallest passing group has size g-rank - 1. The test
        // only sees S \ {i}, so the rank is read in the scenario where i can
        // act: outside a losing S or inside a winning S.
        const bool admissible = g.evaluate(s) == s.contains(i);
        if (!admissible) continue;
        std::optional<int> smallest;
        const Coalition others = Coalition(full).without(i);
        gc::for_each_subset(others, [&](Coalition gg) {
          const Coalition joined = s | gg, left = s.minus(gg);
          const bool pass = (gcrit(joined.without(i), i) && gcrit(joined.with(i), i)) ||
                            (gcrit(left.without(i), i) && gcrit(left.with(i), i));
          if (n <= 6) {
            o.require(pass == gc::opportunity_test_group(g, i, s, gg), at + ": library group test disagrees");
            ++group_lib;
          }
          if (pass && (!smallest || gg.size() < *smallest)) smallest = gg.size();
        });
        const Rank want = gt[m][static_cast<std::size_t>(i)];
        const Rank got = smallest ? Rank::of(*smallest + 1) : Rank::not_critical();
        o.require(got == want, at + ": smallest passing group gives " + rank_str(got) + ", g-rank is " + rank_str(want));
        ++group;
      }
    }
  }
  o.note(std::to_string(single) + " single tests, " + std::to_string(prop) + " rank >= 2 cases, " +
         std::to_string(group) + " group characterizations, " + std::to_string(group_lib) +
         " library group tests compared");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"eight-player example ranks and free riders", criterion_1},
    {"rank-change tables reproduce the reference cells", criterion_2},
    {"average d-rank identity", criterion_3},
    {"rank-1 coincidence with classical Shapley-Shubik and Banzhaf", criterion_4},
    {"probability chain and null players", criterion_5},
    {"strong monotonicity of g on dominating pairs", criterion_6},
    {"fast path equals the brute-force oracle (n = 8)", criterion_7},
    {"election fixtures", criterion_8},
    {"15-party bicameral tables: time and thread determinism", criterion_9},
    {"opportunity tests", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int a = 1; a < argc; ++a) selected.insert(std::stoi(argv[a]));
  int failures = 0;
  for (std::size_t k = 0; k < kCriteria.size(); ++k) {
    const int number = static_cast<int>(k + 1);
    if (!selected.empty() && !selected.count(number)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = kCriteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << kCriteria[k].first << " ("
              << timing << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
