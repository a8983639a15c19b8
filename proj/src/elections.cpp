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

#include "groupcrit/elections.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "groupcrit/error.hpp"

namespace groupcrit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line, int line_no) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        field += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw Error("line " + std::to_string(line_no) + ": unterminated quote");
  out.push_back(trim(field));
  return out;
}

std::uint64_t parse_seats(const std::string& text, int line_no) {
  if (!text.empty() && text.front() == '-') throw Error("line " + std::to_string(line_no) + ": negative seats");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error("line " + std::to_string(line_no) + ": seats must be a non-negative integer, got '" + text + "'");
  return value;
}

}  // namespace

SeatTable load_seats(std::istream& in) {
  SeatTable table;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::set<std::string> acronyms;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split_csv(t, line_no);
    if (!have_header) {
      if (fields.size() < 3 || fields[0] != "party" || fields[1] != "acronym")
        throw Error("line " + std::to_string(line_no) + ": header must be party,acronym,<chamber>,...");
      table.chamber_names.assign(fields.begin() + 2, fields.end());
      for (const auto& name : table.chamber_names)
        if (name.empty()) throw Error("line " + std::to_string(line_no) + ": empty chamber name");
      have_header = true;
      continue;
    }
    if (fields.size() != table.chamber_names.size() + 2)
      throw Error("line " + std::to_string(line_no) + ": expected " + std::to_string(table.chamber_names.size() + 2) +
                  " fields, got " + std::to_string(fields.size()));
    SeatRow row{fields[0], fields[1], {}};
    if (row.acronym.empty()) throw Error("line " + std::to_string(line_no) + ": empty acronym");
    if (!acronyms.insert(row.acronym).second)
      throw Error("line " + std::to_string(line_no) + ": duplicate acronym '" + row.acronym + "'");
    for (std::size_t c = 2; c < fields.size(); ++c) row.seats.push_back(parse_seats(fields[c], line_no));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error("seat table is empty");
  if (table.rows.empty()) throw Error("seat table has no parties");
  for (std::size_t c = 0; c < table.chamber_names.size(); ++c) {
    std::uint64_t total = 0;
    for (const auto& r : table.rows) total += r.seats[c];
    if (total == 0) throw Error("chamber '" + table.chamber_names[c] + "' has no seats");
  }
  return table;
}

SeatTable load_seats_text(const std::string& text) {
  std::istringstream in(text);
  return load_seats(in);
}

SeatTable load_seats_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_seats(in);
}

std::vector<std::uint64_t> chamber_quotas(const SeatTable& seats) {
  const std::size_t chambers = seats.chamber_names.size();
  if (seats.quotas) {
    if (seats.quotas->size() != chambers)
      throw Error("expected " + std::to_string(chambers) + " quotas, got " + std::to_string(seats.quotas->size()));
    return *seats.quotas;
  }
  std::vector<std::uint64_t> out;
  for (std::size_t c = 0; c < chambers; ++c) {
    std::uint64_t total = 0;
    for (const auto& r : seats.rows) total += r.seats[c];
    out.push_back(total / 2 + 1);
  }
  return out;
}

Game build_game(const SeatTable& seats, GameLimits limits) {
  std::vector<std::string> labels;
  for (const auto& r : seats.rows) labels.push_back(r.acronym);
  const auto quotas = chamber_quotas(seats);
  std::vector<Weighted> chambers;
  for (std::size_t c = 0; c < seats.chamber_names.size(); ++c) {
    Weighted w;
    for (const auto& r : seats.rows) w.weights.push_back(r.seats[c]);
    w.quota = quotas[c];
    chambers.push_back(std::move(w));
  }
  try {
    if (chambers.size() == 1) return Game(PlayerSet(std::move(labels)), chambers.front(), limits);
    return Game(PlayerSet(std::move(labels)), Bicameral{std::move(chambers)}, limits);
  } catch (const Error& e) {
    throw Error(std::string("cannot build the parliament game: ") + e.what());
  }
}

std::string to_string(IndexKind kind) { return kind == IndexKind::GShapley ? "g-shapley" : "g-banzhaf"; }

IndexKind parse_index_kind(const std::string& text) {
  if (text == "g-shapley") return IndexKind::GShapley;
  if (text == "g-banzhaf") return IndexKind::GBanzhaf;
  throw Error("unknown index '" + text + "' (expected g-shapley or g-banzhaf)");
}

bool ElectionReport::seat_dominance_holds() const {
  return std::all_of(seat_dominance.begin(), seat_dominance.end(), [](const auto& p) { return p.holds(); });
}

ElectionReport election_report(const SeatTable& seats, IndexKind kind, const ComputeOptions& opts) {
  const Game game = build_game(seats);
  ElectionReport report;
  report.kind = kind;
  report.seats = seats;
  report.quotas = chamber_quotas(seats);
  report.table = kind == IndexKind::GShapley ? g_shapley(game, opts) : g_banzhaf(game, opts);
  const int n = game.size();
  for (int i = 0; i < n; ++i)
    if (report.table.pi_total[static_cast<std::size_t>(i)] == 0) report.zero_power.push_back(i);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& sa = seats.rows[static_cast<std::size_t>(a)].seats;
      const auto& sb = seats.rows[static_cast<std::size_t>(b)].seats;
      bool at_least = true;
      for (std::size_t c = 0; c < sa.size(); ++c) at_least = at_least && sa[c] >= sb[c];
      if (!at_least) continue;
      SeatDominancePair pair;
      pair.stronger = a;
      pair.weaker = b;
      pair.fsd = compare_cumulative(report.table.pi_cumulative[static_cast<std::size_t>(b)],
                                    report.table.pi_cumulative[static_cast<std::size_t>(a)]);
      report.seat_dominance.push_back(pair);
    }
  return report;
}

}  // namespace groupcrit
