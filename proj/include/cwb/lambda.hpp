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

#ifndef CWB_LAMBDA_HPP
#define CWB_LAMBDA_HPP

#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cwb/formula.hpp"
#include "cwb/model.hpp"
#include "cwb/semantics.hpp"

namespace cwb {

// Bounded derivability: phi -> psi is a tautology instance. Under-approximates
// full provability; enough for the disjunction/rewrite facts the lambda
// equivalence rests on. Throws TooManyAtomsError.
bool derives(const Formula& phi, const Formula& psi);

// Finite quantifier domain for the lambda functions.
//
// Level 0 is the base; level k adds every ordered disjunction a | b of
// members of level k-1. Members are deduplicated by syntactic identity and
// kept in first-generation order.
class Universe {
 public:
  // depth must be 0, 1 or 2 (0 leaves the base unclosed).
  static Universe close(std::vector<Formula> base, int depth);
  // Exactly the given members, no closure.
  static Universe from_members(std::vector<Formula> members);

  const std::vector<Formula>& base() const { return base_; }
  const std::vector<Formula>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int depth() const { return depth_; }

  // derives(members[i], members[j]), precomputed.
  bool derives(std::size_t i, std::size_t j) const { return implication_[i * members_.size() + j]; }
  std::optional<std::size_t> index_of(const Formula& f) const;

 private:
  Universe(std::vector<Formula> base, std::vector<Formula> members, int depth);

  std::vector<Formula> base_;
  std::vector<Formula> members_;
  int depth_;
  std::vector<bool> implication_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

// Semantic theory of one model state: a formula belongs iff it holds there.
// Members of the universe and their D-formulas are materialized up front;
// anything else is decided on demand by evaluation.
class TheorySet {
 public:
  TheorySet(const NeighborhoodModel& m, int state, const Universe& u);

  int state() const { return state_; }
  const NeighborhoodModel& model() const { return evaluator_->model(); }
  bool contains(const Formula& f) const;
  // Formulas of U and D U that hold at the state.
  const std::unordered_set<Formula, FormulaHash>& materialized() const { return materialized_; }

 private:
  std::unique_ptr<Evaluator> evaluator_;
  int state_;
  std::unordered_set<Formula, FormulaHash> materialized_;
};

// {phi in U : for every psi in U, D (phi | psi) in x}
std::vector<Formula> lambda_kuhn(const TheorySet& x, const Universe& u);

enum class HumberstoneVariant { Original, Simplified };

// Original:   {phi in U : D phi in x, and D psi in x for every psi in U with derives(phi, psi)}
// Simplified: the same without the leading D phi conjunct.
std::vector<Formula> lambda_humberstone(const TheorySet& x, const Universe& u, HumberstoneVariant variant);

struct LambdaDifference {
  Formula phi;                 // member selected by exactly one side
  std::optional<Formula> psi;  // quantifier witness that excludes phi from the other side
  std::string description;
};

struct StateComparison {
  int state;
  std::size_t universe_size;
  std::vector<Formula> lambda_k;
  std::vector<Formula> lambda_h;             // original variant
  std::vector<Formula> lambda_h_simplified;
  bool equal;
  std::vector<LambdaDifference> differences;
};

std::vector<StateComparison> compare_lambdas(const NeighborhoodModel& m, const Universe& u);
std::vector<StateComparison> compare_lambdas(const NeighborhoodModel& m, std::vector<Formula> base, int depth);

// Pairs (phi, psi) of members with phi in lambda_K(x), phi^M a subset of
// psi^M, and psi not in lambda_K(x).
std::vector<std::pair<Formula, Formula>> kuhn_monotonicity_failures(const TheorySet& x, const Universe& u);

}  // namespace cwb

#endif  // CWB_LAMBDA_HPP
