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

#include "groupcrit/probability.hpp"

#include <fstream>
#include <sstream>

#include "groupcrit/error.hpp"

namespace groupcrit {

ProbabilityModel ProbabilityModel::explicit_model(std::map<Mask, Rational> entries) {
  Rational total = 0;
  for (const auto& [mask, p] : entries) {
    if (p < 0) throw Error("probability of " + to_string(Coalition(mask)) + " is negative");
    total += p;
  }
  if (total != 1) throw Error("explicit probabilities sum to " + to_fraction(total) + ", not 1");
  return ProbabilityModel(ExplicitModel{std::move(entries)});
}

std::string ProbabilityModel::name() const {
  switch (model_.index()) {
    case 0: return "uniform";
    case 1: return "shapley";
    default: return "explicit";
  }
}

Rational ProbabilityModel::size_probability(int s, int n) const {
  if (std::holds_alternative<UniformModel>(model_)) return Rational(BigInt(1), BigInt(1) << n);
  if (std::holds_alternative<ShapleyOrderModel>(model_))
    return Rational(factorial(n - s) * factorial(s), factorial(n + 1));
  throw std::logic_error("size_probability on an explicit model");
}

Rational ProbabilityModel::probability(Coalition s, int n) const {
  if (const auto* e = std::get_if<ExplicitModel>(&model_)) {
    const auto it = e->entries.find(s.bits());
    return it == e->entries.end() ? Rational(0) : it->second;
  }
  return size_probability(s.size(), n);
}

void ProbabilityModel::check_players(int n) const {
  if (const auto* e = std::get_if<ExplicitModel>(&model_))
    for (const auto& [mask, p] : e->entries)
      if (!Coalition(mask).subset_of(Coalition::full(n)))
        throw Error("model coalition " + to_string(Coalition(mask)) + " names a player outside 1.." +
                    std::to_string(n));
}

ProbabilityModel parse_model(const nlohmann::json& doc, const PlayerSet& players) {
  if (doc.is_string()) return model_from_argument(doc.get<std::string>(), players);
  if (!doc.is_object() || !doc.contains("type")) throw Error("model document must be an object with a type");
  const std::string type = doc["type"].get<std::string>();
  if (type == "uniform") return ProbabilityModel::uniform();
  if (type == "shapley") return ProbabilityModel::shapley_order();
  if (type != "explicit") throw Error("unknown model type '" + type + "'");
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw Error("explicit model needs an entries array");
  std::map<Mask, Rational> entries;
  for (const auto& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("coalition") || !e.contains("p"))
      throw Error("each model entry needs coalition and p");
    Coalition c;
    for (const auto& m : e["coalition"]) {
      if (!m.is_number_integer()) throw Error("model coalitions use 1-based integer indices");
      const auto idx = m.get<std::int64_t>();
      if (idx < 1 || idx > players.size())
        throw Error("player index " + std::to_string(idx) + " out of range 1.." + std::to_string(players.size()));
      c = c.with(static_cast<int>(idx - 1));
    }
    const auto& p = e["p"];
    Rational value = p.is_string() ? parse_rational(p.get<std::string>())
                     : p.is_number_integer() ? Rational(p.get<std::int64_t>())
                                             : throw Error("probabilities must be integers or \"num/den\" strings");
    if (entries.contains(c.bits())) throw Error("coalition " + to_string(c) + " listed twice in model");
    entries.emplace(c.bits(), value);
  }
  return ProbabilityModel::explicit_model(std::move(entries));
}

ProbabilityModel model_from_argument(const std::string& arg, const PlayerSet& players) {
  if (arg == "uniform") return ProbabilityModel::uniform();
  if (arg == "shapley") return ProbabilityModel::shapley_order();
  std::ifstream in(arg);
  if (!in) throw Error("model must be uniform, shapley or a readable JSON file; cannot open '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed model JSON: ") + e.what());
  }
  return parse_model(doc, players);
}

nlohmann::json model_to_json(const ProbabilityModel& model) {
  nlohmann::json out{{"type", model.name()}};
  if (const auto* e = std::get_if<ExplicitModel>(&model.variant())) {
    out["entries"] = nlohmann::json::array();
    for (const auto& [mask, p] : e->entries) {
      nlohmann::json members = nlohmann::json::array();
      for (int i : Coalition(mask).members()) members.push_back(i + 1);
      out["entries"].push_back({{"coalition", members}, {"p", to_fraction(p)}});
    }
  }
  return out;
}

}  // namespace groupcrit
