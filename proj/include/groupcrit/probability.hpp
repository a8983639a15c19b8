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

#include <map>
#include <string>
#include <variant>

#include "json.hpp"

#include "groupcrit/coalition.hpp"
#include "groupcrit/rational.hpp"

namespace groupcrit {

/// p(S) = 1 / 2^n.
struct UniformModel {};
/// p(S) = (n - s)! s! / (n + 1)!, s = |S|.
struct ShapleyOrderModel {};
/// Listed coalitions carry the given probability; the rest have 0.
struct ExplicitModel {
  std::map<Mask, Rational> entries;
};

/// A probability distribution over the 2^n coalitions of a game.
class ProbabilityModel {
 public:
  using Variant = std::variant<UniformModel, ShapleyOrderModel, ExplicitModel>;

  static ProbabilityModel uniform() { return ProbabilityModel(UniformModel{}); }
  static ProbabilityModel shapley_order() { return ProbabilityModel(ShapleyOrderModel{}); }
  /// Throws Error on negative entries or when the entries do not sum to exactly 1.
  static ProbabilityModel explicit_model(std::map<Mask, Rational> entries);

  const Variant& variant() const { return model_; }
  std::string name() const;

  /// True when p(S) depends on |S| only.
  bool size_symmetric() const { return !std::holds_alternative<ExplicitModel>(model_); }
  /// p of one coalition of cardinality s; only for size-symmetric models.
  Rational size_probability(int s, int n) const;
  Rational probability(Coalition s, int n) const;

  /// Throws Error when an explicit entry names a player outside 0..n-1.
  void check_players(int n) const;

 private:
  explicit ProbabilityModel(Variant m) : model_(std::move(m)) {}
  Variant model_;
};

/// Reads `uniform`, `shapley` or a JSON document
/// {"type":"explicit","entries":[{"coalition":[1,2],"p":"1/4"},...]}.
ProbabilityModel parse_model(const nlohmann::json& doc, const PlayerSet& players);
ProbabilityModel model_from_argument(const std::string& arg, const PlayerSet& players);

nlohmann::json model_to_json(const ProbabilityModel& model);

}  // namespace groupcrit
