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

#ifndef CWB_SEMANTICS_HPP
#define CWB_SEMANTICS_HPP

#include <unordered_map>

#include "cwb/formula.hpp"
#include "cwb/model.hpp"

namespace cwb {

// Truth set of f in m. Atoms read the valuation ("_t" reads as empty),
// negation complements, conjunction intersects, and
//   D f  holds at s  iff  f^M in N(s) or S \ f^M in N(s),
//   [] f holds at s  iff  f^M in N(s)          (extended mode only).
// Throws UnknownAtomError, or BoxNotAllowedError for [] in core mode.
StateSet truth_set(const NeighborhoodModel& m, const Formula& f, Mode mode = Mode::Core);
bool holds_at(const NeighborhoodModel& m, int state, const Formula& f, Mode mode = Mode::Core);
bool valid_in_model(const NeighborhoodModel& m, const Formula& f, Mode mode = Mode::Core);

// States of m at which the D clause is satisfied for a proposition with
// truth set x.
StateSet delta_states(const NeighborhoodModel& m, StateSet x);
StateSet box_states(const NeighborhoodModel& m, StateSet x);

// Caches truth sets per structurally distinct subformula. Worth it when the
// same model is queried with many overlapping formulas.
class Evaluator {
 public:
  explicit Evaluator(const NeighborhoodModel& m, Mode mode = Mode::Core) : model_(m), mode_(mode) {}

  const NeighborhoodModel& model() const { return model_; }
  StateSet truth_set(const Formula& f);
  bool holds_at(int state, const Formula& f) { return (truth_set(f) >> state) & 1u; }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  const NeighborhoodModel& model_;
  Mode mode_;
  std::unordered_map<Formula, StateSet, FormulaHash> memo_;
};

}  // namespace cwb

#endif  // CWB_SEMANTICS_HPP
