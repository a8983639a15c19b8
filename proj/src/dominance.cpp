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

#include "groupcrit/dominance.hpp"

#include <sstream>

#include "groupcrit/error.hpp"

namespace groupcrit {

std::string to_string(Fsd fsd) {
  switch (fsd) {
    case Fsd::Dominates: return "dominates";
    case Fsd::DominatedBy: return "dominated_by";
    case Fsd::Equal: return "equal";
    case Fsd::Incomparable: return "incomparable";
  }
  return "?";
}

std::string to_string(LexOrder lex) {
  switch (lex) {
    case LexOrder::Greater: return "greater";
    case LexOrder::Equal: return "equal";
    case LexOrder::Less: return "less";
  }
  return "?";
}

FsdResult compare_cumulative(const std::vector<Rational>& pi_v, const std::vector<Rational>& pi_w) {
  if (pi_v.size() != pi_w.size()) throw std::logic_error("cumulative vectors differ in length");
  FsdResult r;
  for (std::size_t k = 0; k < pi_v.size(); ++k) {
    const int rank = static_cast<int>(k) + 1;
    if (pi_w[k] < pi_v[k] && !r.w_shortfall) r.w_shortfall = rank;
    if (pi_v[k] < pi_w[k] && !r.v_shortfall) r.v_shortfall = rank;
  }
  if (!r.w_shortfall && !r.v_shortfall) r.outcome = Fsd::Equal;
  else if (!r.w_shortfall) r.outcome = Fsd::Dominates;
  else if (!r.v_shortfall) r.outcome = Fsd::DominatedBy;
  else r.outcome = Fsd::Incomparable;
  return r;
}

LexOrder compare_lex(const std::vector<Rational>& beta_v, const std::vector<Rational>& beta_w) {
  for (std::size_t k = 0; k < std::min(beta_v.size(), beta_w.size()); ++k) {
    if (beta_w[k] > beta_v[k]) return LexOrder::Greater;
    if (beta_w[k] < beta_v[k]) return LexOrder::Less;
  }
  return LexOrder::Equal;
}

namespace {

void require_same_players(const Game& v, const Game& w) {
  if (v.players() != w.players()) throw Error("the two games must share the same player set");
}

}  // namespace

ComparisonReport compare(const Game& v, const Game& w, int player, const ProbabilityModel& model,
                         const ComputeOptions& opts) {
  require_same_players(v, w);
  if (player < 0 || player >= v.size()) throw Error("player index out of range");
  ComparisonReport report;
  report.player = player;
  report.derivative_dominates = true;
  for (Mask mask = 0; mask < (Mask{1} << v.size()); ++mask) {
    const Coalition s(mask);
    const int dv = v.derivative(player, s);
    const int dw = w.derivative(player, s);
    if (dw < dv) report.derivative_dominates = false;
    if (dw > dv) report.strict_coalitions.push_back(s);
  }
  std::sort(report.strict_coalitions.begin(), report.strict_coalitions.end(), BySizeThenMembers{});

  const IndexTables tv = index_tables(v, model, opts);
  const IndexTables tw = index_tables(w, model, opts);
  const auto i = static_cast<std::size_t>(player);
  for (Notion x : {Notion::d, Notion::g, Notion::m}) {
    NotionComparison& c = report.notions[static_cast<std::size_t>(x)];
    c.notion = x;
    c.beta_v = tv.of(x).beta[i];
    c.beta_w = tw.of(x).beta[i];
    c.pi_v = tv.of(x).pi_cumulative[i];
    c.pi_w = tw.of(x).pi_cumulative[i];
    c.fsd = compare_cumulative(c.pi_v, c.pi_w);
    c.lex = compare_lex(c.beta_v, c.beta_w);
    if (c.fsd.w_shortfall) {
      const auto k = static_cast<std::size_t>(*c.fsd.w_shortfall - 1);
      report.violations.push_back({x, *c.fsd.w_shortfall, c.pi_v[k], c.pi_w[k]});
    }
  }
  return report;
}

std::vector<RankChangeRow> rank_change_table(const Game& v, const Game& w, int player) {
  require_same_players(v, w);
  const auto i = static_cast<std::size_t>(player);
  std::vector<RankChangeRow> rows;
  for (Coalition s : all_coalitions_by_size(v.size())) {
    const CoalitionRanks rv = rank_coalition(v, s);
    const CoalitionRanks rw = rank_coalition(w, s);
    RankChangeRow row;
    row.coalition = s;
    row.v = {rv.d[i], rv.g[i], rv.m[i]};
    row.w = {rw.d[i], rw.g[i], rw.m[i]};
    rows.push_back(row);
  }
  return rows;
}

std::string format_rank_change_table(const std::vector<RankChangeRow>& rows, const std::vector<Notion>& notions,
                                     const PlayerSet& players) {
  std::size_t width = 1;
  for (const auto& r : rows) width = std::max(width, to_label_string(r.coalition, players).size());
  width = std::max<std::size_t>(width, 9);
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    // ✗ is three bytes but one column wide.
    const std::size_t shown = s == "✗" ? 1 : s.size();
    return s + std::string(w > shown ? w - shown : 0, ' ');
  };
  out << pad("coalition", width);
  for (Notion x : notions) out << "  " << pad(to_string(x) + "/v", 5) << pad(to_string(x) + "/w", 5);
  out << '\n';
  for (const auto& r : rows) {
    out << pad(to_label_string(r.coalition, players), width);
    for (Notion x : notions) out << "  " << pad(to_string(r.rank_v(x)), 5) << pad(to_string(r.rank_w(x)), 5);
    out << '\n';
  }
  return out.str();
}

}  // namespace groupcrit
