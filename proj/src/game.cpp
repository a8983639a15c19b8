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

#include "groupcrit/game.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "groupcrit/coalition_algebra.hpp"
#include "groupcrit/error.hpp"

namespace groupcrit {

struct Game::Tables {
  std::vector<std::uint8_t> winning;  // indexed by mask
  int n = 0;
  mutable std::once_flag wmin_once;
  mutable std::vector<Coalition> wmin;
  mutable std::once_flag bmin_once;
  mutable std::vector<Coalition> bmin;
};

namespace {

void validate_weighted(const Weighted& w, int n, const std::string& where) {
  if (static_cast<int>(w.weights.size()) != n)
    throw Error(where + "expected " + std::to_string(n) + " weights, got " + std::to_string(w.weights.size()));
  if (w.quota < 1) throw Error(where + "quota must be ≥ 1");
  std::uint64_t total = 0;
  for (auto x : w.weights) {
    if (total > UINT64_MAX - x) throw Error(where + "total weight overflows");
    total += x;
  }
  if (w.quota > total)
    throw Error(where + "quota " + std::to_string(w.quota) + " exceeds total weight " + std::to_string(total));
}

// Marks, for every mask, whether the weighted rule is met. Sums are split into
// a low and a high half so each mask costs two table lookups.
void apply_weighted(const Weighted& w, int n, std::vector<std::uint8_t>& table) {
  const int lo_bits = n / 2;
  const int hi_bits = n - lo_bits;
  std::vector<std::uint64_t> lo(std::size_t{1} << lo_bits, 0), hi(std::size_t{1} << hi_bits, 0);
  for (Mask m = 1; m < lo.size(); ++m)
    lo[m] = lo[m & (m - 1)] + w.weights[static_cast<std::size_t>(std::countr_zero(m))];
  for (Mask m = 1; m < hi.size(); ++m)
    hi[m] = hi[m & (m - 1)] + w.weights[static_cast<std::size_t>(std::countr_zero(m) + lo_bits)];
  const Mask lo_mask = (Mask{1} << lo_bits) - 1;
  for (std::size_t m = 0; m < table.size(); ++m) {
    const Mask mm = static_cast<Mask>(m);
    if (lo[mm & lo_mask] + hi[mm >> lo_bits] < w.quota) table[m] = 0;
  }
}

}  // namespace

Game::Game(PlayerSet players, GameRepresentation repr, GameLimits limits)
    : players_(std::move(players)), repr_(std::move(repr)) {
  const int n = players_.size();
  if (n < 1) throw Error("a game needs at least one player");
  const int cap = std::min(limits.max_players, kHardMaxPlayers);
  if (n > cap) throw Error("too many players: " + std::to_string(n) + " > " + std::to_string(cap));

  auto tables = std::make_shared<Tables>();
  tables->n = n;
  tables->winning.assign(std::size_t{1} << n, 1);

  if (auto* w = std::get_if<Weighted>(&repr_)) {
    validate_weighted(*w, n, "");
    apply_weighted(*w, n, tables->winning);
  } else if (auto* b = std::get_if<Bicameral>(&repr_)) {
    if (b->chambers.empty()) throw Error("a bicameral game needs at least one chamber");
    for (std::size_t c = 0; c < b->chambers.size(); ++c) {
      validate_weighted(b->chambers[c], n, "chamber " + std::to_string(c + 1) + ": ");
      apply_weighted(b->chambers[c], n, tables->winning);
    }
  } else {
    auto& e = std::get<ExplicitMinimalWinning>(repr_);
    if (e.coalitions.empty()) throw Error("the minimal winning family must be non-empty");
    const Coalition all = players_.all();
    for (Coalition c : e.coalitions) {
      if (c.empty()) throw Error("the minimal winning family must not contain the empty coalition");
      if (!c.subset_of(all)) throw Error("coalition " + to_string(c) + " names a player outside 1.." + std::to_string(n));
    }
    for (std::size_t a = 0; a < e.coalitions.size(); ++a)
      for (std::size_t b2 = 0; b2 < e.coalitions.size(); ++b2)
        if (a != b2 && e.coalitions[a].subset_of(e.coalitions[b2]))
          throw Error("minimal winning family is not an antichain: " + to_string(e.coalitions[a]) + " ⊆ " +
                      to_string(e.coalitions[b2]));
    // Upward closure of the listed sets (superset-sum transform).
    std::fill(tables->winning.begin(), tables->winning.end(), 0);
    for (Coalition c : e.coalitions) tables->winning[c.bits()] = 1;
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      for (std::size_t m = 0; m < tables->winning.size(); ++m)
        if (m & bit) tables->winning[m] |= tables->winning[m ^ bit];
    }
  }
  table_ = std::move(tables);
  winning_ = table_->winning.data();
}

Game Game::from_winning_family(PlayerSet players, std::vector<Coalition> winning, GameLimits limits) {
  if (winning.empty()) throw Error("the winning family must be non-empty");
  return Game(std::move(players), ExplicitMinimalWinning{minimize_family(std::move(winning))}, limits);
}

bool Game::is_null_player(int i) const {
  const Coalition rest = grand().without(i);
  bool pivotal = false;
  for_each_subset(rest, [&](Coalition s) { pivotal = pivotal || derivative(i, s) == 1; });
  return !pivotal;
}

const std::vector<Coalition>& Game::minimal_winning() const {
  const Tables& t = *table_;
  std::call_once(t.wmin_once, [&] {
    for (std::size_t idx = 0; idx < t.winning.size(); ++idx) {
      const Mask m = static_cast<Mask>(idx);
      if (!t.winning[m]) continue;
      bool minimal = true;
      for (Mask b = m; b != 0 && minimal; b &= b - 1) minimal = !t.winning[m & ~(b & -b)];
      if (minimal) t.wmin.emplace_back(m);
    }
    std::sort(t.wmin.begin(), t.wmin.end(), BySizeThenMask{});
  });
  return t.wmin;
}

const std::vector<Coalition>& Game::minimal_blocking() const {
  const Tables& t = *table_;
  std::call_once(t.bmin_once, [&] {
    const Mask all = grand().bits();
    for (std::size_t m = 0; m < t.winning.size(); ++m) {
      const Mask b = static_cast<Mask>(m);
      const Mask rest = all & ~b;
      if (t.winning[rest]) continue;
      bool minimal = true;
      for (Mask x = b; x != 0 && minimal; x &= x - 1) minimal = t.winning[rest | (x & -x)] != 0;
      if (minimal) t.bmin.emplace_back(b);
    }
    std::sort(t.bmin.begin(), t.bmin.end(), BySizeThenMask{});
  });
  return t.bmin;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

std::uint64_t as_count(const json& v, const std::string& what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw Error(what + " must be non-negative");
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  if (v.is_number_float()) throw Error(what + " must be an integer (pre-scale fractional values)");
  throw Error(what + " must be a number");
}

Weighted parse_weighted(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw Error(where + "expected an object with weights and quota");
  if (!doc.contains("weights") || !doc["weights"].is_array()) throw Error(where + "missing weights array");
  if (!doc.contains("quota")) throw Error(where + "missing quota");
  Weighted w;
  for (const auto& x : doc["weights"]) w.weights.push_back(as_count(x, where + "weight"));
  if (doc["quota"].is_number_integer() && doc["quota"].get<std::int64_t>() < 1)
    throw Error(where + "quota must be ≥ 1");
  w.quota = as_count(doc["quota"], where + "quota");
  return w;
}

json weighted_json(const Weighted& w) { return json{{"weights", w.weights}, {"quota", w.quota}}; }

}  // namespace

Game parse_game(const json& doc, bool winning_family, GameLimits limits) {
  if (!doc.is_object()) throw Error("game document must be a JSON object");
  if (!doc.contains("players") || !doc["players"].is_array()) throw Error("missing players array");
  std::vector<std::string> labels;
  for (const auto& p : doc["players"]) {
    if (p.is_string()) labels.push_back(p.get<std::string>());
    else if (p.is_number_integer()) labels.push_back(std::to_string(p.get<std::int64_t>()));
    else throw Error("player labels must be strings");
  }
  PlayerSet players(std::move(labels));
  if (!doc.contains("representation") || !doc["representation"].is_object())
    throw Error("missing representation object");
  const json& rep = doc["representation"];
  if (!rep.contains("type") || !rep["type"].is_string()) throw Error("representation.type must be a string");
  const std::string type = rep["type"].get<std::string>();
  if (type == "weighted") return Game(std::move(players), parse_weighted(rep, ""), limits);
  if (type == "bicameral") {
    if (!rep.contains("chambers") || !rep["chambers"].is_array()) throw Error("missing chambers array");
    Bicameral b;
    for (std::size_t c = 0; c < rep["chambers"].size(); ++c)
      b.chambers.push_back(parse_weighted(rep["chambers"][c], "chamber " + std::to_string(c + 1) + ": "));
    return Game(std::move(players), std::move(b), limits);
  }
  if (type == "minimal_winning") {
    if (!rep.contains("coalitions") || !rep["coalitions"].is_array()) throw Error("missing coalitions array");
    std::vector<Coalition> family;
    for (const auto& c : rep["coalitions"]) {
      if (!c.is_array()) throw Error("each coalition must be an array of 1-based player indices");
      Coalition s;
      for (const auto& p : c) {
        if (!p.is_number_integer()) throw Error("coalition members must be 1-based integer indices");
        const auto idx = p.get<std::int64_t>();
        if (idx < 1 || idx > players.size())
          throw Error("player index " + std::to_string(idx) + " out of range 1.." + std::to_string(players.size()));
        s = s.with(static_cast<int>(idx - 1));
      }
      family.push_back(s);
    }
    if (winning_family) return Game::from_winning_family(std::move(players), std::move(family), limits);
    return Game(std::move(players), ExplicitMinimalWinning{std::move(family)}, limits);
  }
  throw Error("unknown representation type '" + type + "'");
}

Game parse_game_text(const std::string& text, bool winning_family, GameLimits limits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  return parse_game(doc, winning_family, limits);
}

Game load_game_file(const std::string& path, bool winning_family, GameLimits limits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game_text(buf.str(), winning_family, limits);
}

json serialize_game(const Game& game) {
  json rep;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Weighted>) {
          rep = weighted_json(r);
          rep["type"] = "weighted";
        } else if constexpr (std::is_same_v<T, Bicameral>) {
          rep["type"] = "bicameral";
          rep["chambers"] = json::array();
          for (const auto& c : r.chambers) rep["chambers"].push_back(weighted_json(c));
        } else {
          rep["type"] = "minimal_winning";
          rep["coalitions"] = json::array();
          for (Coalition c : r.coalitions) {
            json members = json::array();
            for (int i : c.members()) members.push_back(i + 1);
            rep["coalitions"].push_back(members);
          }
        }
      },
      game.representation());
  return json{{"players", game.players().labels()}, {"representation", rep}};
}

std::string game_digest(const Game& game) {
  const std::string canonical = serialize_game(game).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace groupcrit
