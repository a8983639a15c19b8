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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "groupcrit/dominance.hpp"
#include "groupcrit/game.hpp"
#include "groupcrit/indices.hpp"

namespace groupcrit {

struct SeatRow {
  std::string party;
  std::string acronym;
  std::vector<std::uint64_t> seats;  // one entry per chamber
};

struct SeatTable {
  std::vector<std::string> chamber_names;
  std::vector<SeatRow> rows;
  /// Per-chamber quotas; strict majority of the listed seats when absent.
  std::optional<std::vector<std::uint64_t>> quotas;
};

/// CSV with header `party,acronym,<chamber1>,<chamber2>,...`. Lines starting
/// with '#' and blank lines are skipped; fields may be double-quoted.
SeatTable load_seats(std::istream& in);
SeatTable load_seats_text(const std::string& text);
SeatTable load_seats_file(const std::string& path);

/// Explicit quotas if set, otherwise floor(total / 2) + 1 per chamber.
std::vector<std::uint64_t> chamber_quotas(const SeatTable& seats);

/// Players are the acronyms. One chamber gives a weighted game, several give a
/// bicameral one (win in every chamber).
Game build_game(const SeatTable& seats, GameLimits limits = {});

enum class IndexKind { GShapley, GBanzhaf };
std::string to_string(IndexKind kind);
IndexKind parse_index_kind(const std::string& text);

/// A pair where `stronger` holds at least as many seats as `weaker` in every chamber.
struct SeatDominancePair {
  int stronger = 0;
  int weaker = 0;
  FsdResult fsd;  // rank vector of `stronger` (as w) against `weaker` (as v)
  bool holds() const { return weakly_dominates(fsd.outcome); }
};

struct ElectionReport {
  IndexKind kind = IndexKind::GShapley;
  SeatTable seats;
  std::vector<std::uint64_t> quotas;
  IndexTable table;
  std::vector<int> zero_power;  // parties with pi^g = 0
  std::vector<SeatDominancePair> seat_dominance;

  bool seat_dominance_holds() const;
};

ElectionReport election_report(const SeatTable& seats, IndexKind kind, const ComputeOptions& opts = {});

}  // namespace groupcrit
