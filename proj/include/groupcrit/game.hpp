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

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "groupcrit/coalition.hpp"

namespace groupcrit {

/// Weighted majority rule: S wins iff the weights of S add up to at least the quota.
struct Weighted {
  std::vector<std::uint64_t> weights;
  std::uint64_t quota = 1;
  friend bool operator==(const Weighted&, const Weighted&) = default;
};

/// S wins iff it wins in every chamber.
struct Bicameral {
  std::vector<Weighted> chambers;
  friend bool operator==(const Bicameral&, const Bicameral&) = default;
};

/// S wins iff it contains one of the listed coalitions (an antichain).
struct ExplicitMinimalWinning {
  std::vector<Coalition> coalitions;
  friend bool operator==(const ExplicitMinimalWinning&, const ExplicitMinimalWinning&) = default;
};

using GameRepresentation = std::variant<Weighted, Bicameral, ExplicitMinimalWinning>;

struct GameLimits {
  int max_players = kDefaultMaxPlayers;
};

/// A simple monotone game over a fixed player set.
///
/// Construction validates the representation and tabulates v over all 2^n
/// coalitions; the minimal winning and minimal blocking families are derived
/// on first use. Copies share the same immutable tables, so a Game can be
/// passed by value and read from several threads.
class Game {
 public:
  Game(PlayerSet players, GameRepresentation repr, GameLimits limits = {});

  /// Builds an explicit game from any family of winning coalitions by
  /// keeping only its inclusion-minimal members.
  static Game from_winning_family(PlayerSet players, std::vector<Coalition> winning, GameLimits limits = {});

  const PlayerSet& players() const { return players_; }
  int size() const { return players_.size(); }
  Coalition grand() const { return players_.all(); }
  const GameRepresentation& representation() const { return repr_; }

  /// v(S).
  bool evaluate(Coalition s) const { return winning_[s.bits()] != 0; }

  /// v'_i(S): v(S) - v(S \ {i}) when i is in S, v(S u {i}) - v(S) otherwise.
  int derivative(int i, Coalition s) const {
    return evaluate(s.with(i)) && !evaluate(s.without(i)) ? 1 : 0;
  }

  bool is_null_player(int i) const;

  /// Canonical minimal winning family, sorted by (cardinality, mask).
  const std::vector<Coalition>& minimal_winning() const;
  /// Minimal blocking family (minimal B with v(N \ B) = 0), same order.
  const std::vector<Coalition>& minimal_blocking() const;

 private:
  struct Tables;

  PlayerSet players_;
  GameRepresentation repr_;
  std::shared_ptr<const Tables> table_;
  const std::uint8_t* winning_ = nullptr;  // points into table_
};

/// Parses the JSON game document. With `winning_family` set, a
/// "minimal_winning" list may be any winning family; it is minimized.
Game parse_game(const nlohmann::json& doc, bool winning_family = false, GameLimits limits = {});
Game parse_game_text(const std::string& text, bool winning_family = false, GameLimits limits = {});
Game load_game_file(const std::string& path, bool winning_family = false, GameLimits limits = {});

/// Emits the same schema parse_game accepts; keys come out sorted, so the
/// dump is canonical.
nlohmann::json serialize_game(const Game& game);

/// Stable 64-bit FNV-1a digest of the canonical serialization, as 16 hex digits.
std::string game_digest(const Game& game);

}  // namespace groupcrit
