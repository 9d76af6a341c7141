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

#include "cwb/lambda.hpp"

#include "cwb/errors.hpp"

namespace cwb {

bool derives(const Formula& phi, const Formula& psi) { return is_tautology(implies(phi, psi)); }

Universe::Universe(std::vector<Formula> base, std::vector<Formula> members, int depth)
    : base_(std::move(base)), members_(std::move(members)), depth_(depth) {
  const std::size_t n = members_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(members_[i], i);
  implication_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) implication_[i * n + j] = cwb::derives(members_[i], members_[j]);
}

Universe Universe::close(std::vector<Formula> base, int depth) {
  if (base.empty()) throw Error("universe base must be nonempty");
  if (depth < 0 || depth > 2) throw Error("universe depth must be 0, 1 or 2");
  std::vector<Formula> members;
  std::unordered_set<Formula, FormulaHash> seen;
  for (const auto& f : base)
    if (seen.insert(f).second) members.push_back(f);
  for (int level = 0; level < depth; ++level) {
    const std::vector<Formula> previous = members;
    for (const auto& a : previous)
      for (const auto& b : previous) {
        Formula d = disj(a, b);
        if (seen.insert(d).second) members.push_back(d);
      }
  }
  return Universe(std::move(base), std::move(members), depth);
}

Universe Universe::from_members(std::vector<Formula> members) {
  if (members.empty()) throw Error("universe must be nonempty");
  std::vector<Formula> unique;
  std::unordered_set<Formula, FormulaHash> seen;
  for (const auto& f : members)
    if (seen.insert(f).second) unique.push_back(f);
  return Universe(unique, unique, 0);
}

std::optional<std::size_t> Universe::index_of(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TheorySet::TheorySet(const NeighborhoodModel& m, int state, const Universe& u)
    : evaluator_(std::make_unique<Evaluator>(m)), state_(state) {
  if (state < 0 || state >= m.state_count()) throw ModelError("state " + std::to_string(state) + " out of range");
  for (const auto& f : u.members()) {
    if (evaluator_->holds_at(state, f)) materialized_.insert(f);
    Formula d = delta(f);
    if (evaluator_->holds_at(state, d)) materialized_.insert(d);
  }
}

bool TheorySet::contains(const Formula& f) const {
  if (materialized_.count(f) != 0) return true;
  return evaluator_->holds_at(state_, f);
}

std::vector<Formula> lambda_kuhn(const TheorySet& x, const Universe& u) {
  std::vector<Formula> out;
  for (const auto& phi : u.members()) {
    bool all = true;
    for (const auto& psi : u.members()) {
      if (!x.contains(delta(disj(phi, psi)))) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(phi);
  }
  return out;
}

std::vector<Formula> lambda_humberstone(const TheorySet& x, const Universe& u, HumberstoneVariant variant) {
  std::vector<Formula> out;
  const auto& members = u.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (variant == HumberstoneVariant::Original && !x.contains(delta(members[i]))) continue;
    bool all = true;
    for (std::size_t j = 0; j < members.size() && all; ++j)
      if (u.derives(i, j) && !x.contains(delta(members[j]))) all = false;
    if (all) out.push_back(members[i]);
  }
  return out;
}

namespace {

bool contains_formula(const std::vector<Formula>& set, const Formula& f) {
  for (const auto& g : set)
    if (g == f) return true;
  return false;
}

std::optional<Formula> kuhn_witness(const TheorySet& x, const Universe& u, const Formula& phi) {
  for (const auto& psi : u.members())
    if (!x.contains(delta(disj(phi, psi)))) return psi;
  return std::nullopt;
}

std::optional<Formula> humberstone_witness(const TheorySet& x, const Universe& u, const Formula& phi) {
  const auto i = u.index_of(phi);
  if (!i) return std::nullopt;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u.derives(*i, j) && !x.contains(delta(u.members()[j]))) return u.members()[j];
  return std::nullopt;
}

void diff(const TheorySet& x, const Universe& u, const std::vector<Formula>& kuhn, const std::vector<Formula>& other,
          const std::string& other_name, std::vector<LambdaDifference>& out) {
  for (const auto& phi : kuhn)
    if (!contains_formula(other, phi))
      out.push_back({phi, humberstone_witness(x, u, phi), "in lambda_K but not in " + other_name});
  for (const auto& phi : other)
    if (!contains_formula(kuhn, phi))
      out.push_back({phi, kuhn_witness(x, u, phi), "in " + other_name + " but not in lambda_K"});
}

}  // namespace

std::vector<StateComparison> compare_lambdas(const NeighborhoodModel& m, const Universe& u) {
  std::vector<StateComparison> out;
  for (int s = 0; s < m.state_count(); ++s) {
    TheorySet x(m, s, u);
    StateComparison c{s,
                      u.size(),
                      lambda_kuhn(x, u),
                      lambda_humberstone(x, u, HumberstoneVariant::Original),
                      lambda_humberstone(x, u, HumberstoneVariant::Simplified),
                      true,
                      {}};
    diff(x, u, c.lambda_k, c.lambda_h, "lambda_H", c.differences);
    diff(x, u, c.lambda_k, c.lambda_h_simplified, "lambda_H(simplified)", c.differences);
    c.equal = c.differences.empty();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<StateComparison> compare_lambdas(const NeighborhoodModel& m, std::vector<Formula> base, int depth) {
  return compare_lambdas(m, Universe::close(std::move(base), depth));
}

std::vector<std::pair<Formula, Formula>> kuhn_monotonicity_failures(const TheorySet& x, const Universe& u) {
  std::vector<std::pair<Formula, Formula>> out;
  const auto selected = lambda_kuhn(x, u);
  const auto& m = x.model();
  for (const auto& phi : selected) {
    const StateSet phi_set = truth_set(m, phi);
    for (const auto& psi : u.members()) {
      if ((phi_set & ~truth_set(m, psi)) != 0) continue;
      if (!contains_formula(selected, psi)) out.emplace_back(phi, psi);
    }
  }
  return out;
}

}  // namespace cwb
