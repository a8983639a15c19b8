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

#include "groupcrit/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "groupcrit/coalition_algebra.hpp"
#include "groupcrit/criticality.hpp"
#include "groupcrit/dominance.hpp"
#include "groupcrit/elections.hpp"
#include "groupcrit/error.hpp"
#include "groupcrit/indices.hpp"
#include "groupcrit/oracle.hpp"

#ifndef GROUPCRIT_VERSION
#define GROUPCRIT_VERSION "0.0.0"
#endif

namespace groupcrit {

std::string tool_version() { return GROUPCRIT_VERSION; }

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Formatting helpers

json rational_json(const Rational& r) { return json{{"value", to_fraction(r)}, {"decimal", to_decimal(r)}}; }

json rank_json(Rank r) { return r.critical() ? json(r.value()) : json(nullptr); }

json coalition_json(Coalition c) {
  json out = json::array();
  for (int i : c.members()) out.push_back(i + 1);
  return out;
}

json family_json(const std::vector<Coalition>& sets, const PlayerSet& players) {
  json out = json::array();
  for (Coalition c : sets) {
    json labels = json::array();
    for (int i : c.members()) labels.push_back(players.label(i));
    out.push_back({{"members", coalition_json(c)}, {"labels", labels}});
  }
  return out;
}

std::string rational_text(const Rational& r) { return to_fraction(r) + " (" + to_decimal(r) + ")"; }

// Renders rows of cells as left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      // ✗ is three bytes wide in UTF-8 but takes one column.
      const std::size_t shown = r[c] == "✗" ? 1 : r[c].size();
      widths[c] = std::max(widths[c], shown);
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const std::size_t shown = r[c] == "✗" ? 1 : r[c].size();
      line += r[c];
      if (c + 1 < r.size()) line += std::string(widths[c] - shown + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Shared state of one invocation

struct Invocation {
  std::string command_echo;
  std::string format = "text";
  unsigned threads = 0;
  int max_players = kDefaultMaxPlayers;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  ComputeOptions compute() const { return ComputeOptions{threads}; }
  GameLimits limits() const { return GameLimits{max_players}; }

  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed)
      if (format == f) return;
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
    throw UsageError("--format must be one of: " + list);
  }

  void emit_json(const json& digests, const json& payload) const {
    json env;
    env["command"] = command_echo;
    env["tool_version"] = tool_version();
    env["game_digest"] = digests;
    env["payload"] = payload;
    *out << env.dump(2) << '\n';
  }

  void emit_text_header(const std::string& digest) const {
    *out << "# groupcrit " << tool_version() << ": " << command_echo << '\n';
    *out << "# game " << digest << '\n';
  }

  void warn_large(const Game& game) const {
    if (game.size() > kIndexWarnPlayers)
      *err << "warning: " << game.size() << " players; per-rank indices enumerate 2^" << game.size()
           << " coalitions and may take a long time\n";
  }
};

int parse_player(const std::string& text, const PlayerSet& players) {
  if (auto idx = players.index_of(text)) return *idx;
  try {
    std::size_t used = 0;
    const int k = std::stoi(text, &used);
    if (used == text.size() && k >= 1 && k <= players.size()) return k - 1;
  } catch (const std::exception&) {
  }
  throw Error("unknown player '" + text + "'");
}

// ---------------------------------------------------------------------------
// validate

void cmd_validate(const Invocation& inv, const std::string& game_path, bool winning_family) {
  inv.require_format({"text", "json"});
  const Game game = load_game_file(game_path, winning_family, inv.limits());
  const std::string digest = game_digest(game);
  const std::string type = std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Weighted>) return "weighted";
        else if constexpr (std::is_same_v<T, Bicameral>) return "bicameral";
        else return "minimal_winning";
      },
      game.representation());
  std::vector<int> nulls;
  for (int i = 0; i < game.size(); ++i)
    if (game.is_null_player(i)) nulls.push_back(i + 1);
  if (inv.format == "json") {
    inv.emit_json(digest, {{"valid", true},
                           {"players", game.size()},
                           {"representation", type},
                           {"minimal_winning_count", game.minimal_winning().size()},
                           {"null_players", nulls},
                           {"game", serialize_game(game)}});
    return;
  }
  inv.emit_text_header(digest);
  *inv.out << "ok: " << game.size() << " players, " << type << " representation, "
           << game.minimal_winning().size() << " minimal winning coalitions";
  if (!nulls.empty()) {
    *inv.out << ", null players";
    for (int p : nulls) *inv.out << ' ' << game.players().label(p - 1);
  }
  *inv.out << '\n';
}

// ---------------------------------------------------------------------------
// minimal

void cmd_minimal(const Invocation& inv, const std::string& game_path, bool winning_family, bool blocking) {
  inv.require_format({"text", "json"});
  const Game game = load_game_file(game_path, winning_family, inv.limits());
  const std::string digest = game_digest(game);
  const CoalitionFamily fam = blocking ? minimal_blocking(game) : minimal_winning(game);
  const std::string kind = blocking ? "minimal_blocking" : "minimal_winning";
  if (inv.format == "json") {
    inv.emit_json(digest, {{"kind", kind}, {"count", fam.size()}, {"coalitions", family_json(fam.sets, game.players())}});
    return;
  }
  inv.emit_text_header(digest);
  *inv.out << "# " << kind << ": " << fam.size() << " coalitions\n";
  std::vector<std::vector<std::string>> rows{{"size", "indices", "labels"}};
  for (Coalition c : fam.sets)
    rows.push_back({std::to_string(c.size()), to_string(c), to_label_string(c, game.players())});
  *inv.out << aligned(rows);
}

// ---------------------------------------------------------------------------
// ranks

CriticalityProfile oracle_profile(const Game& game, int i, Coalition s) {
  CriticalityProfile p;
  p.player = i;
  p.coalition = s;
  p.d_rank = oracle_d_rank(game, i, s);
  p.g_rank = oracle_g_rank(game, i, s);
  p.m_rank = oracle_m_rank(game, i, s);
  p.e_ranks = oracle_e_ranks(game, i, s);
  p.side = p.g_rank.critical() ? (s.contains(i) ? Side::Inside : Side::Outside) : Side::None;
  if (p.g_rank.critical())
    for (Coalition g : oracle_essentials(game, s))
      if (g.contains(i) && g.size() == p.g_rank.value() && (!p.witness || g.bits() < p.witness->bits()))
        p.witness = g;
  return p;
}

void cmd_ranks(const Invocation& inv, const std::string& game_path, bool winning_family, const std::string& coalition,
               const std::string& player, const std::string& notion, bool witness, bool use_oracle) {
  inv.require_format({"text", "json"});
  if (!notion.empty() && notion != "d" && notion != "g" && notion != "m" && notion != "e")
    throw UsageError("--notion must be d, g, m or e");
  const Game game = load_game_file(game_path, winning_family, inv.limits());
  const std::string digest = game_digest(game);
  const Coalition s = parse_coalition(coalition, game.players());
  std::vector<int> who;
  if (!player.empty()) who.push_back(parse_player(player, game.players()));
  else
    for (int i = 0; i < game.size(); ++i) who.push_back(i);

  std::vector<CriticalityProfile> profiles;
  for (int i : who) profiles.push_back(use_oracle ? oracle_profile(game, i, s) : criticality_profile(game, i, s));
  const EssentialFamilies fam = essential_families(game, s);
  const std::vector<int> riders = free_riders(game, s);

  if (inv.format == "json") {
    json rows = json::array();
    for (const auto& p : profiles) {
      json row{{"player", p.player + 1},
               {"label", game.players().label(p.player)},
               {"coalition", coalition_json(p.coalition)},
               {"d_rank", rank_json(p.d_rank)},
               {"g_rank", rank_json(p.g_rank)},
               {"m_rank", rank_json(p.m_rank)},
               {"e_ranks", p.e_ranks},
               {"side", to_string(p.side)},
               {"free_rider", std::find(riders.begin(), riders.end(), p.player) != riders.end()}};
      row["witness"] = p.witness ? coalition_json(*p.witness) : json(nullptr);
      rows.push_back(row);
    }
    json riders_json = json::array();
    for (int r : riders) riders_json.push_back(r + 1);
    inv.emit_json(digest, {{"coalition", coalition_json(s)},
                           {"winning", game.evaluate(s)},
                           {"kappa_m", fam.kappa_m ? json(*fam.kappa_m) : json(nullptr)},
                           {"minimal_essentials", family_json(fam.minimal_essentials, game.players())},
                           {"free_riders", riders_json},
                           {"source", use_oracle ? "oracle" : "fast"},
                           {"profiles", rows}});
    return;
  }
  inv.emit_text_header(digest);
  *inv.out << "# S = " << to_label_string(s, game.players()) << (game.evaluate(s) ? " (winning)" : " (losing)")
           << ", kappa_m = " << (fam.kappa_m ? std::to_string(*fam.kappa_m) : "undefined")
           << (use_oracle ? ", ranks from the brute-force oracle" : "") << '\n';
  std::vector<std::string> header{"player"};
  const bool all = notion.empty();
  if (all || notion == "d") header.push_back("d");
  if (all || notion == "g") header.push_back("g");
  if (all || notion == "m") header.push_back("m");
  if (all || notion == "e") header.push_back("e");
  header.push_back("side");
  header.push_back("free_rider");
  if (witness) header.push_back("witness");
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& p : profiles) {
    std::vector<std::string> row{game.players().label(p.player)};
    if (all || notion == "d") row.push_back(to_string(p.d_rank));
    if (all || notion == "g") row.push_back(to_string(p.g_rank));
    if (all || notion == "m") row.push_back(to_string(p.m_rank));
    if (all || notion == "e") {
      std::string e = "{";
      for (std::size_t k = 0; k < p.e_ranks.size(); ++k) e += (k ? "," : "") + std::to_string(p.e_ranks[k]);
      row.push_back(e + "}");
    }
    row.push_back(to_string(p.side));
    row.push_back(std::find(riders.begin(), riders.end(), p.player) != riders.end() ? "yes" : "no");
    if (witness) row.push_back(p.witness ? to_label_string(*p.witness, game.players()) : "-");
    rows.push_back(row);
  }
  *inv.out << aligned(rows);
}

// ---------------------------------------------------------------------------
// indices

json index_table_json(const IndexTable& t, const PlayerSet& players) {
  json rows = json::array();
  for (int i = 0; i < t.players; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    json beta = json::array(), pi = json::array();
    for (std::size_t k = 0; k < t.beta[idx].size(); ++k) {
      beta.push_back(rational_json(t.beta[idx][k]));
      pi.push_back(rational_json(t.pi_cumulative[idx][k]));
    }
    json row{{"player", i + 1}, {"label", players.label(i)}, {"beta", beta}, {"pi_cumulative", pi},
             {"pi_total", rational_json(t.pi_total[idx])}};
    if (t.avg_d_rank) row["avg_d_rank"] = rational_json((*t.avg_d_rank)[idx]);
    rows.push_back(row);
  }
  return json{{"notion", to_string(t.notion)}, {"model", model_to_json(t.model)}, {"mu", rational_json(t.mu)},
              {"max_rank", t.max_rank()}, {"rows", rows}};
}

void write_index_csv(std::ostream& out, const IndexTable& t, const PlayerSet& players, const std::string& first_column) {
  out << first_column << ",rank,value_numerator,value_denominator,value_decimal\n";
  for (int i = 0; i < t.players; ++i)
    for (std::size_t k = 0; k < t.beta[static_cast<std::size_t>(i)].size(); ++k) {
      const Rational& v = t.beta[static_cast<std::size_t>(i)][k];
      out << players.label(i) << ',' << k + 1 << ',' << boost::multiprecision::numerator(v) << ','
          << boost::multiprecision::denominator(v) << ',' << to_decimal(v) << '\n';
    }
}

void write_index_plot(std::ostream& out, const IndexTable& t, const PlayerSet& players) {
  out << "player,rank,value\n";
  for (int i = 0; i < t.players; ++i)
    for (std::size_t k = 0; k < t.beta[static_cast<std::size_t>(i)].size(); ++k)
      out << players.label(i) << ',' << k + 1 << ',' << to_decimal(t.beta[static_cast<std::size_t>(i)][k]) << '\n';
}

std::string index_table_text(const IndexTable& t, const PlayerSet& players) {
  const int shown = std::max(1, t.max_rank());
  std::vector<std::string> header{"player"};
  for (int k = 1; k <= shown; ++k) header.push_back("rank " + std::to_string(k));
  header.push_back("total");
  if (t.avg_d_rank) header.push_back("avg d-rank");
  std::vector<std::vector<std::string>> rows{header};
  for (int i = 0; i < t.players; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    std::vector<std::string> row{players.label(i)};
    for (int k = 0; k < shown; ++k) row.push_back(to_fraction(t.beta[idx][static_cast<std::size_t>(k)]));
    row.push_back(rational_text(t.pi_total[idx]));
    if (t.avg_d_rank) row.push_back(rational_text((*t.avg_d_rank)[idx]));
    rows.push_back(row);
  }
  return aligned(rows);
}

void cmd_indices(const Invocation& inv, const std::string& game_path, bool winning_family, const std::string& notion,
                 const std::string& model_arg, bool use_oracle) {
  inv.require_format({"text", "csv", "json", "plot"});
  const Game game = load_game_file(game_path, winning_family, inv.limits());
  const std::string digest = game_digest(game);
  const ProbabilityModel model = model_from_argument(model_arg, game.players());
  const Notion x = parse_notion(notion);
  inv.warn_large(game);
  const IndexTable t = use_oracle ? oracle_index(game, model, x) : index_table(game, model, x, inv.compute());
  if (inv.format == "json") {
    json payload = index_table_json(t, game.players());
    payload["source"] = use_oracle ? "oracle" : "fast";
    inv.emit_json(digest, payload);
  } else if (inv.format == "csv") {
    write_index_csv(*inv.out, t, game.players(), "player");
  } else if (inv.format == "plot") {
    write_index_plot(*inv.out, t, game.players());
  } else {
    inv.emit_text_header(digest);
    *inv.out << "# notion " << to_string(t.notion) << ", model " << t.model.name() << ", mu = " << rational_text(t.mu)
             << (use_oracle ? ", computed by the brute-force oracle" : "") << '\n';
    *inv.out << index_table_text(t, game.players());
  }
}

// ---------------------------------------------------------------------------
// compare

json notion_comparison_json(const NotionComparison& c) {
  json bv = json::array(), bw = json::array(), pv = json::array(), pw = json::array();
  for (std::size_t k = 0; k < c.beta_v.size(); ++k) {
    bv.push_back(rational_json(c.beta_v[k]));
    bw.push_back(rational_json(c.beta_w[k]));
    pv.push_back(rational_json(c.pi_v[k]));
    pw.push_back(rational_json(c.pi_w[k]));
  }
  return json{{"notion", to_string(c.notion)},
              {"fsd", to_string(c.fsd.outcome)},
              {"first_w_shortfall", c.fsd.w_shortfall ? json(*c.fsd.w_shortfall) : json(nullptr)},
              {"first_v_shortfall", c.fsd.v_shortfall ? json(*c.fsd.v_shortfall) : json(nullptr)},
              {"lex", to_string(c.lex)},
              {"beta_v", bv},
              {"beta_w", bw},
              {"pi_v", pv},
              {"pi_w", pw}};
}

void cmd_compare(const Invocation& inv, const std::string& path_v, const std::string& path_w, bool winning_family,
                 const std::string& player, const std::string& model_arg, bool table) {
  inv.require_format({"text", "json"});
  const Game v = load_game_file(path_v, winning_family, inv.limits());
  const Game w = load_game_file(path_w, winning_family, inv.limits());
  const int i = parse_player(player, v.players());
  const ProbabilityModel model = model_from_argument(model_arg, v.players());
  const ComparisonReport report = compare(v, w, i, model, inv.compute());
  const std::vector<Notion> notions{Notion::d, Notion::g, Notion::m};
  std::vector<RankChangeRow> rows;
  if (table) rows = rank_change_table(v, w, i);

  if (inv.format == "json") {
    json strict = json::array();
    for (Coalition c : report.strict_coalitions) strict.push_back(coalition_json(c));
    json per = json::array();
    for (const auto& c : report.notions) per.push_back(notion_comparison_json(c));
    json violations = json::array();
    for (const auto& vw : report.violations)
      violations.push_back({{"notion", to_string(vw.notion)},
                            {"rank", vw.rank},
                            {"pi_v", rational_json(vw.pi_v)},
                            {"pi_w", rational_json(vw.pi_w)}});
    json payload{{"player", i + 1},
                 {"model", model_to_json(model)},
                 {"derivative_dominates", report.derivative_dominates},
                 {"strict_coalitions", strict},
                 {"notions", per},
                 {"violations", violations}};
    if (table) {
      json trows = json::array();
      for (const auto& r : rows) {
        json row{{"coalition", coalition_json(r.coalition)}};
        for (Notion x : notions) {
          row[to_string(x) + "_v"] = rank_json(r.rank_v(x));
          row[to_string(x) + "_w"] = rank_json(r.rank_w(x));
        }
        trows.push_back(row);
      }
      payload["rank_change_table"] = trows;
    }
    inv.emit_json(json{{"v", game_digest(v)}, {"w", game_digest(w)}}, payload);
    return;
  }
  *inv.out << "# groupcrit " << tool_version() << ": " << inv.command_echo << '\n';
  *inv.out << "# game v " << game_digest(v) << "\n# game w " << game_digest(w) << '\n';
  *inv.out << "player " << v.players().label(i) << ", model " << model.name() << '\n';
  *inv.out << "derivative domination (w over v): " << (report.derivative_dominates ? "yes" : "no") << '\n';
  *inv.out << "strict coalitions:";
  for (Coalition c : report.strict_coalitions) *inv.out << ' ' << to_label_string(c, v.players());
  *inv.out << '\n';
  std::vector<std::vector<std::string>> trows{{"notion", "1sd (w vs v)", "lex", "first w shortfall"}};
  for (const auto& c : report.notions)
    trows.push_back({to_string(c.notion), to_string(c.fsd.outcome), to_string(c.lex),
                     c.fsd.w_shortfall ? std::to_string(*c.fsd.w_shortfall) : "-"});
  *inv.out << aligned(trows);
  for (const auto& vw : report.violations)
    *inv.out << "violation: notion " << to_string(vw.notion) << ", rank " << vw.rank << ": pi_v = " << rational_text(vw.pi_v)
             << " > pi_w = " << rational_text(vw.pi_w) << '\n';
  if (table) *inv.out << '\n' << format_rank_change_table(rows, notions, v.players());
}

// ---------------------------------------------------------------------------
// elections

std::vector<std::uint64_t> parse_quota_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long q = std::stoll(item, &used);
      if (used != item.size() || q < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint64_t>(q));
    } catch (const std::exception&) {
      throw UsageError("--quota expects comma-separated positive integers, got '" + text + "'");
    }
  }
  return out;
}

void cmd_elections(const Invocation& inv, const std::string& seats_path, const std::string& index,
                   const std::string& quotas) {
  inv.require_format({"text", "csv", "json", "plot"});
  SeatTable seats = load_seats_file(seats_path);
  if (!quotas.empty()) seats.quotas = parse_quota_list(quotas);
  const IndexKind kind = parse_index_kind(index);
  const Game game = build_game(seats, inv.limits());
  inv.warn_large(game);
  const std::string digest = game_digest(game);
  const ElectionReport report = election_report(seats, kind, inv.compute());
  const PlayerSet& players = game.players();

  if (inv.format == "csv") {
    write_index_csv(*inv.out, report.table, players, "acronym");
    return;
  }
  if (inv.format == "plot") {
    write_index_plot(*inv.out, report.table, players);
    return;
  }
  if (inv.format == "json") {
    json zero = json::array();
    for (int p : report.zero_power) zero.push_back(players.label(p));
    json dom = json::array();
    for (const auto& d : report.seat_dominance)
      dom.push_back({{"stronger", players.label(d.stronger)},
                     {"weaker", players.label(d.weaker)},
                     {"fsd", to_string(d.fsd.outcome)},
                     {"holds", d.holds()},
                     {"first_violation", d.fsd.w_shortfall ? json(*d.fsd.w_shortfall) : json(nullptr)}});
    inv.emit_json(digest, {{"index", to_string(kind)},
                           {"chambers", seats.chamber_names},
                           {"quotas", report.quotas},
                           {"table", index_table_json(report.table, players)},
                           {"zero_power", zero},
                           {"seat_dominance", dom},
                           {"seat_dominance_holds", report.seat_dominance_holds()}});
    return;
  }
  inv.emit_text_header(digest);
  *inv.out << "# index " << to_string(kind) << ", quotas";
  for (std::size_t c = 0; c < report.quotas.size(); ++c)
    *inv.out << ' ' << seats.chamber_names[c] << '=' << report.quotas[c];
  *inv.out << '\n' << index_table_text(report.table, players);
  *inv.out << "zero-power parties (" << report.zero_power.size() << "):";
  for (int p : report.zero_power) *inv.out << ' ' << players.label(p);
  *inv.out << "\nseat-dominance pairs: " << report.seat_dominance.size() << ", 1sd "
           << (report.seat_dominance_holds() ? "holds for all" : "FAILS for some") << '\n';
  for (const auto& d : report.seat_dominance)
    if (!d.holds())
      *inv.out << "  " << players.label(d.stronger) << " over " << players.label(d.weaker) << ": "
               << to_string(d.fsd.outcome) << '\n';
}

std::string echo_of(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t k = 1; k < args.size(); ++k) {
    if (args[k] == "--threads") {
      ++k;
      continue;
    }
    if (args[k].rfind("--threads=", 0) == 0) continue;
    out += (out.empty() ? "" : " ") + args[k];
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-essential, differential and minimal criticality ranks for simple games", "groupcrit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  Invocation inv;
  inv.command_echo = echo_of(args);
  inv.out = &out;
  inv.err = &err;

  std::string game_path, game_v, game_w, coalition, player, notion, model = "uniform", seats, index, quotas;
  bool winning_family = false, blocking = false, witness = false, use_oracle = false, table = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", inv.format, "Output format");
    sub->add_option("--threads", inv.threads, "Worker threads (default: all cores)");
    sub->add_option("--max-players", inv.max_players, "Player limit")->check(CLI::Range(1, kHardMaxPlayers));
  };
  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--game", game_path, "Game JSON file")->required();
    sub->add_flag("--winning-family", winning_family, "Minimize a full winning family on load");
  };

  auto* validate = app.add_subcommand("validate", "Check a game file");
  add_game(validate);
  add_common(validate);

  auto* minimal = app.add_subcommand("minimal", "Print the minimal winning (or blocking) family");
  add_game(minimal);
  minimal->add_flag("--blocking", blocking, "Minimal blocking coalitions instead");
  add_common(minimal);

  auto* ranks = app.add_subcommand("ranks", "Criticality profile of the players wrt a coalition");
  add_game(ranks);
  ranks->add_option("--coalition", coalition, "Comma-separated 1-based indices or labels; empty for {}")->required();
  ranks->add_option("--player", player, "Restrict to one player (index or label)");
  ranks->add_option("--notion", notion, "Show one notion: d, g, m or e");
  ranks->add_flag("--witness", witness, "Show the essential coalition realising the g-rank");
  ranks->add_flag("--oracle", use_oracle, "Use the brute-force reference implementation");
  add_common(ranks);

  auto* indices = app.add_subcommand("indices", "Per-rank power indices");
  add_game(indices);
  indices->add_option("--notion", notion, "d, g or m")->required();
  indices->add_option("--model", model, "uniform, shapley or a JSON model file");
  indices->add_flag("--oracle", use_oracle, "Use the brute-force reference implementation");
  add_common(indices);

  auto* cmp = app.add_subcommand("compare", "Compare a player across two games");
  cmp->add_option("--game-v", game_v, "First game")->required();
  cmp->add_option("--game-w", game_w, "Second game")->required();
  cmp->add_flag("--winning-family", winning_family, "Minimize full winning families on load");
  cmp->add_option("--player", player, "Player (index or label)")->required();
  cmp->add_option("--model", model, "uniform, shapley or a JSON model file");
  cmp->add_flag("--table", table, "Append the per-coalition rank table");
  add_common(cmp);

  auto* elections = app.add_subcommand("elections", "Per-rank g-indices of a parliament");
  elections->add_option("--seats", seats, "Seat table CSV")->required();
  elections->add_option("--index", index, "g-shapley or g-banzhaf")->required();
  elections->add_option("--quota", quotas, "Per-chamber quotas, comma-separated");
  add_common(elections);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (*validate) cmd_validate(inv, game_path, winning_family);
    else if (*minimal) cmd_minimal(inv, game_path, winning_family, blocking);
    else if (*ranks) cmd_ranks(inv, game_path, winning_family, coalition, player, notion, witness, use_oracle);
    else if (*indices) cmd_indices(inv, game_path, winning_family, notion, model, use_oracle);
    else if (*cmp) cmd_compare(inv, game_v, game_w, winning_family, player, model, table);
    else if (*elections) cmd_elections(inv, seats, index, quotas);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace groupcrit
