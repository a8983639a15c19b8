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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace groupcrit {

using Mask = std::uint32_t;

// Coalitions are bit masks, so the player count is bounded by the mask width.
inline constexpr int kHardMaxPlayers = 30;
inline constexpr int kDefaultMaxPlayers = 24;
// Above this many players the per-rank index sweeps get slow; the CLI warns.
inline constexpr int kIndexWarnPlayers = 20;

/// A set of players, stored as a bit mask over 0-based player indices.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<int>& players);
  static constexpr Coalition singleton(int i) { return Coalition(Mask{1} << i); }
  static constexpr Coalition full(int n) {
    return Coalition(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr Coalition with(int i) const { return Coalition(bits_ | (Mask{1} << i)); }
  constexpr Coalition without(int i) const { return Coalition(bits_ & ~(Mask{1} << i)); }
  constexpr Coalition minus(Coalition o) const { return Coalition(bits_ & ~o.bits_); }
  constexpr Coalition complement(int n) const { return full(n).minus(*this); }
  constexpr bool subset_of(Coalition o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Coalition o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }

  /// 0-based member indices in increasing order.
  std::vector<int> members() const;

  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  Mask bits_ = 0;
};

/// Orders by cardinality, then by mask value; the canonical order for families.
struct BySizeThenMask {
  bool operator()(Coalition a, Coalition b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

/// Orders by cardinality, then lexicographically by the sorted member list,
/// e.g. {1,2} < {1,3} < {1,4} < {2,3}.
struct BySizeThenMembers {
  bool operator()(Coalition a, Coalition b) const;
};

/// All 2^n coalitions in BySizeThenMembers order.
std::vector<Coalition> all_coalitions_by_size(int n);

/// Calls f(sub) for every subset of `set`, the empty set included.
template <typename F>
void for_each_subset(Coalition set, F&& f) {
  const Mask full = set.bits();
  Mask sub = 0;
  do {
    f(Coalition(sub));
    sub = (sub - full) & full;
  } while (sub != 0);
}

/// Display labels of the players of a game; indices are 0..n-1.
class PlayerSet {
 public:
  PlayerSet() = default;
  explicit PlayerSet(std::vector<std::string> labels);
  /// Players labelled "1".."n".
  static PlayerSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;
  Coalition all() const { return Coalition::full(size()); }

  friend bool operator==(const PlayerSet&, const PlayerSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// "{1,3}" with 1-based indices.
std::string to_string(Coalition c);
/// "{PD,M5S}" using the player labels.
std::string to_label_string(Coalition c, const PlayerSet& players);

/// Parses "1,3", "PD,M5S", "" or "{}" (empty) into a coalition. Tokens that
/// parse as integers in 1..n are indices; anything else must be a label.
Coalition parse_coalition(std::string_view text, const PlayerSet& players);

}  // namespace groupcrit
