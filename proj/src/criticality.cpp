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

#include "groupcrit/criticality.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "groupcrit/coalition_algebra.hpp"
#include "groupcrit/error.hpp"

namespace groupcrit {

std::string to_string(Notion notion) {
  switch (notion) {
    case Notion::d: return "d";
    case Notion::g: return "g";
    case Notion::m: return "m";
  }
  return "?";
}

Notion parse_notion(const std::string& text) {
  if (text == "d") return Notion::d;
  if (text == "g") return Notion::g;
  if (text == "m") return Notion::m;
  throw Error("unknown notion '" + text + "' (expected d, g or m)");
}

Rank Rank::of(int value) {
  if (value < 1) throw Error("a criticality rank must be ≥ 1");
  Rank r;
  r.value_ = value;
  return r;
}

std::string to_string(Rank rank) { return rank.critical() ? std::to_string(rank.value()) : "✗"; }

std::string to_string(Side side) {
  switch (side) {
    case Side::Inside: return "inside";
    case Side::Outside: return "outside";
    case Side::None: return "none";
  }
  return "?";
}

bool is_critical(const Game& game, Coalition g, Coalition s) {
  return game.evaluate(s | g) && !game.evaluate(s.minus(g));
}

bool is_essential_member(const Game& game, int i, Coalition g, Coalition s) {
  if (!g.contains(i)) throw Error("player " + std::to_string(i + 1) + " is not in " + to_string(g));
  if (!is_critical(game, g, s)) throw Error(to_string(g) + " is not critical wrt " + to_string(s));
  return !is_critical(game, g.without(i), s);
}

bool is_essential_coalition(const Game& game, Coalition g, Coalition s) {
  if (!is_critical(game, g, s)) return false;
  for (int i : g.members())
    if (is_critical(game, g.without(i), s)) return false;
  return true;
}

namespace {

// The players who can act on S, and the family whose traces on that side are
// the candidate essential coalitions.
struct ActingSide {
  bool winning;
  Coalition side;
  const std::vector<Coalition>* family;
};

ActingSide acting_side(const Game& game, Coalition s) {
  const bool win = game.evaluate(s);
  if (win) return {true, s, &game.minimal_blocking()};
  return {false, s.complement(game.size()), &game.minimal_winning()};
}

// Player i is still pivotal after removing the rest of T from S (S winning)
// or after adding the rest of T to S (S losing).
bool pivotal_in_trace(const Game& game, bool winning, Coalition s, Coalition trace, int i) {
  const Coalition rest = trace.without(i);
  return winning ? game.evaluate(s.minus(rest)) : !game.evaluate(s | rest);
}

}  // namespace

namespace detail {

int rank_kernel(const Game& game, Coalition s, std::span<int> g, std::span<std::uint8_t> m_member) {
  std::fill(g.begin(), g.end(), kNoRank);
  std::fill(m_member.begin(), m_member.end(), std::uint8_t{0});
  const ActingSide act = acting_side(game, s);

  int kappa = INT_MAX;
  for (Coalition c : *act.family) kappa = std::min(kappa, (c & act.side).size());

  // A trace T containing i gives i an essential coalition of size |T| exactly
  // when i is still pivotal once the rest of T has acted; the smallest such T
  // is then essential as a whole.
  for (Coalition c : *act.family) {
    const Coalition trace = c & act.side;
    const int k = trace.size();
    for (Mask b = trace.bits(); b != 0; b &= b - 1) {
      const int i = std::countr_zero(b);
      if (g[static_cast<std::size_t>(i)] != kNoRank && g[static_cast<std::size_t>(i)] <= k) continue;
      if (pivotal_in_trace(game, act.winning, s, trace, i)) g[static_cast<std::size_t>(i)] = k;
    }
    if (k == kappa)
      for (Mask b = trace.bits(); b != 0; b &= b - 1) m_member[static_cast<std::size_t>(std::countr_zero(b))] = 1;
  }
  // v(0) = 0 and v(N) = 1 guarantee a non-empty trace on the acting side.
  if (kappa == INT_MAX || kappa < 1) throw std::logic_error("no essential coalition: game is not proper");
  return kappa;
}

}  // namespace detail

CoalitionRanks rank_coalition(const Game& game, Coalition s) {
  const auto n = static_cast<std::size_t>(game.size());
  std::vector<int> g(n);
  std::vector<std::uint8_t> m(n);
  CoalitionRanks out;
  out.coalition = s;
  out.winning = game.evaluate(s);
  out.kappa_m = detail::rank_kernel(game, s, g, m);
  for (std::size_t i = 0; i < n; ++i) {
    out.g.push_back(g[i] == detail::kNoRank ? Rank::not_critical() : Rank::of(g[i]));
    out.m.push_back(m[i] ? Rank::of(out.kappa_m) : Rank::not_critical());
    out.d.push_back(Rank::of(m[i] ? out.kappa_m : out.kappa_m + 1));
  }
  return out;
}

EssentialFamilies essential_families(const Game& game, Coalition s) {
  const ActingSide act = acting_side(game, s);
  EssentialFamilies out;
  out.coalition = s;
  const CoalitionFamily traces = restrict_minus(CoalitionFamily{*act.family, FamilyKind::Restricted},
                                                act.side.complement(game.size()));
  out.essentials = minimal_elements(traces).sets;
  if (!out.essentials.empty()) {
    out.kappa_m = out.essentials.front().size();
    for (Coalition c : out.essentials)
      if (c.size() == *out.kappa_m) out.minimal_essentials.push_back(c);
  }
  return out;
}

int kappa_m(const Game& game, Coalition s) {
  const ActingSide act = acting_side(game, s);
  int kappa = INT_MAX;
  for (Coalition c : *act.family) kappa = std::min(kappa, (c & act.side).size());
  return kappa;
}

Rank g_rank(const Game& game, int i, Coalition s) { return rank_coalition(game, s).g.at(static_cast<std::size_t>(i)); }
Rank d_rank(const Game& game, int i, Coalition s) { return rank_coalition(game, s).d.at(static_cast<std::size_t>(i)); }
Rank m_rank(const Game& game, int i, Coalition s) { return rank_coalition(game, s).m.at(static_cast<std::size_t>(i)); }

std::optional<Coalition> g_witness(const Game& game, int i, Coalition s) {
  const Rank rank = g_rank(game, i, s);
  if (!rank.critical()) return std::nullopt;
  const ActingSide act = acting_side(game, s);
  std::optional<Coalition> best;
  for (Coalition c : *act.family) {
    const Coalition trace = c & act.side;
    if (trace.size() != rank.value() || !trace.contains(i)) continue;
    if (!pivotal_in_trace(game, act.winning, s, trace, i)) continue;
    if (!best || trace.bits() < best->bits()) best = trace;
  }
  return best;
}

Side criticality_side(const Game& game, int i, Coalition s) {
  if (!g_rank(game, i, s).critical()) return Side::None;
  return s.contains(i) ? Side::Inside : Side::Outside;
}

std::vector<int> e_ranks(const Game& game, int i, Coalition s) {
  // i can only be essential when acting from outside a losing S or from inside
  // a winning S. G = {i} u K u J where K (same side as i) must leave i pivotal
  // and J, drawn from the other side, is irrelevant to criticality.
  const int n = game.size();
  const bool win = game.evaluate(s);
  if (win != s.contains(i)) return {};
  const Coalition own_side = (win ? s : s.complement(n)).without(i);
  const int other_side = win ? n - s.size() : s.size();
  std::set<int> ranks;
  for_each_subset(own_side, [&](Coalition k) {
    const bool pivotal = win ? (game.evaluate(s.minus(k)) && !game.evaluate(s.minus(k).without(i)))
                             : (!game.evaluate(s | k) && game.evaluate((s | k).with(i)));
    if (!pivotal) return;
    for (int extra = 0; extra <= other_side; ++extra) ranks.insert(1 + k.size() + extra);
  });
  return {ranks.begin(), ranks.end()};
}

CriticalityProfile criticality_profile(const Game& game, int i, Coalition s) {
  const CoalitionRanks ranks = rank_coalition(game, s);
  const auto idx = static_cast<std::size_t>(i);
  CriticalityProfile p;
  p.player = i;
  p.coalition = s;
  p.d_rank = ranks.d.at(idx);
  p.g_rank = ranks.g.at(idx);
  p.m_rank = ranks.m.at(idx);
  p.e_ranks = e_ranks(game, i, s);
  p.side = p.g_rank.critical() ? (s.contains(i) ? Side::Inside : Side::Outside) : Side::None;
  p.witness = g_witness(game, i, s);
  return p;
}

std::vector<int> free_riders(const Game& game, Coalition s) {
  const CoalitionRanks ranks = rank_coalition(game, s);
  std::vector<int> out;
  for (int i = 0; i < game.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (!ranks.g[idx].critical() || ranks.g[idx].value() > ranks.d[idx].value()) out.push_back(i);
  }
  return out;
}

bool opportunity_test_single(const Game& game, int i, Coalition s, Notion notion) {
  switch (notion) {
    case Notion::d:
      return d_rank(game, i, s.with(i)).critical() && d_rank(game, i, s.without(i)).critical();
    case Notion::g:
      return g_rank(game, i, s.with(i)).critical() && g_rank(game, i, s.without(i)).critical();
    case Notion::m:
      break;
  }
  throw Error("the opportunity test is defined for notions d and g");
}

bool opportunity_test_group(const Game& game, int i, Coalition s, Coalition g) {
  if (g.contains(i)) throw Error("player " + std::to_string(i + 1) + " must not belong to the acting group");
  const Coalition joined = s | g;
  const Coalition left = s.minus(g);
  const bool via_join = g_rank(game, i, joined.without(i)).critical() && g_rank(game, i, joined.with(i)).critical();
  const bool via_leave = g_rank(game, i, left.without(i)).critical() && g_rank(game, i, left.with(i)).critical();
  return via_join || via_leave;
}

}  // namespace groupcrit
