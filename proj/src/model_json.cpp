/* Copyright 2026 The Contingency Workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <json.hpp>

#include "cwb/errors.hpp"
#include "cwb/formula.hpp"
#include "cwb/model.hpp"

namespace cwb {

namespace {

using nlohmann::json;

nlohmann::ordered_json state_list(StateSet set) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int s = 0; s < kMaxStates; ++s)
    if ((set >> s) & 1u) out.push_back(s);
  return out;
}

StateSet read_state_list(const json& j, int state_count, const std::string& where) {
  if (!j.is_array()) throw ModelError(where + ": expected a list of state indices");
  StateSet set = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ModelError(where + ": state indices must be integers");
    const auto s = v.get<long long>();
    if (s < 0 || s >= state_count) throw ModelError(where + ": state " + std::to_string(s) + " out of range");
    set |= StateSet{1} << s;
  }
  return set;
}

}  // namespace

// Canonical form: subsets as ascending index lists, each family ordered by
// the subsets' bitmask value, valuation keys sorted.
std::string to_json(const NeighborhoodModel& m) {
  using ojson = nlohmann::ordered_json;
  ojson neighborhoods = ojson::array();
  for (const auto& family : m.neighborhoods()) {
    ojson subsets = ojson::array();
    for (StateSet x : family.members()) subsets.push_back(state_list(x));
    neighborhoods.push_back(std::move(subsets));
  }
  ojson valuation = ojson::object();
  for (const auto& [name, set] : m.valuation()) valuation[name] = state_list(set);
  ojson out = ojson::object();
  out["states"] = m.state_count();
  out["neighborhoods"] = std::move(neighborhoods);
  out["valuation"] = std::move(valuation);
  return out.dump();
}

NeighborhoodModel model_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("model JSON must be an object");
  if (!j.contains("states") || !j["states"].is_number_integer()) throw ModelError("model JSON needs integer 'states'");
  const auto k = j["states"].get<long long>();
  if (k < 1 || k > kMaxStates) throw ModelError("'states' must be in 1.." + std::to_string(kMaxStates));
  const int state_count = static_cast<int>(k);

  if (!j.contains("neighborhoods") || !j["neighborhoods"].is_array())
    throw ModelError("model JSON needs a 'neighborhoods' list");
  const auto& ns = j["neighborhoods"];
  if (static_cast<long long>(ns.size()) != k) throw ModelError("'neighborhoods' needs one entry per state");
  std::vector<SubsetFamily> neighborhoods;
  for (std::size_t s = 0; s < ns.size(); ++s) {
    if (!ns[s].is_array()) throw ModelError("neighborhood of state " + std::to_string(s) + " must be a list");
    SubsetFamily family(state_count);
    for (const auto& subset : ns[s])
      family.insert(read_state_list(subset, state_count, "neighborhood of state " + std::to_string(s)));
    neighborhoods.push_back(std::move(family));
  }

  Valuation valuation;
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object()) throw ModelError("'valuation' must be an object");
    for (const auto& [name, set] : j["valuation"].items()) {
      if (name == kTopAtom) throw ModelError("atom '_t' is reserved");
      valuation[name] = read_state_list(set, state_count, "valuation of '" + name + "'");
    }
  }
  return NeighborhoodModel(state_count, std::move(neighborhoods), std::move(valuation));
}

}  // namespace cwb
