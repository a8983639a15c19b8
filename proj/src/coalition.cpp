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

#include "groupcrit/coalition.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "groupcrit/error.hpp"

namespace groupcrit {

Coalition Coalition::of(std::initializer_list<int> players) {
  Mask bits = 0;
  for (int p : players) bits |= Mask{1} << p;
  return Coalition(bits);
}

Coalition Coalition::of(const std::vector<int>& players) {
  Mask bits = 0;
  for (int p : players) bits |= Mask{1} << p;
  return Coalition(bits);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool BySizeThenMembers::operator()(Coalition a, Coalition b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<Coalition> all_coalitions_by_size(int n) {
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), BySizeThenMembers{});
  return out;
}

PlayerSet::PlayerSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("a game needs at least one player");
  if (labels_.size() > static_cast<std::size_t>(kHardMaxPlayers))
    throw Error("too many players: " + std::to_string(labels_.size()) + " > " +
                std::to_string(kHardMaxPlayers));
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error("player labels must be non-empty");
    if (!seen.insert(l).second) throw Error("duplicate player label '" + l + "'");
  }
}

PlayerSet PlayerSet::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return PlayerSet(std::move(labels));
}

std::optional<int> PlayerSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::string to_string(Coalition c) {
  std::string out = "{";
  bool first = true;
  for (int i : c.members()) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string to_label_string(Coalition c, const PlayerSet& players) {
  std::string out = "{";
  bool first = true;
  for (int i : c.members()) {
    if (!first) out += ',';
    out += players.label(i);
    first = false;
  }
  return out + "}";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Coalition parse_coalition(std::string_view text, const PlayerSet& players) {
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = trim(text.substr(1, text.size() - 2));
  Coalition out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    if (token.empty()) throw Error("empty player in coalition list");
    // Labels win over numbers so that numbered games and labelled games agree.
    if (auto idx = players.index_of(token)) {
      out = out.with(*idx);
    } else {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error("unknown player '" + std::string(token) + "'");
      if (value < 1 || value > players.size())
        throw Error("player index " + std::string(token) + " out of range 1.." + std::to_string(players.size()));
      out = out.with(value - 1);
    }
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace groupcrit
