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

#include "cwb/semantics.hpp"

#include "cwb/errors.hpp"

namespace cwb {

StateSet delta_states(const NeighborhoodModel& m, StateSet x) {
  const StateSet complement = m.all_states() & ~x;
  StateSet out = 0;
  for (int s = 0; s < m.state_count(); ++s) {
    const auto& n = m.neighborhood(s);
    if (n.contains(x) || n.contains(complement)) out |= StateSet{1} << s;
  }
  return out;
}

StateSet box_states(const NeighborhoodModel& m, StateSet x) {
  StateSet out = 0;
  for (int s = 0; s < m.state_count(); ++s)
    if (m.neighborhood(s).contains(x)) out |= StateSet{1} << s;
  return out;
}

namespace {

StateSet atom_truth(const NeighborhoodModel& m, const Formula& f) {
  auto it = m.valuation().find(f.name());
  if (it != m.valuation().end()) return it->second;
  if (f.name() == kTopAtom) return 0;
  throw UnknownAtomError(f.name());
}

StateSet eval(const NeighborhoodModel& m, const Formula& f, Mode mode) {
  switch (f.kind()) {
    case NodeKind::Atom:
      return atom_truth(m, f);
    case NodeKind::Not:
      return m.all_states() & ~eval(m, f.child(), mode);
    case NodeKind::And:
      return eval(m, f.left(), mode) & eval(m, f.right(), mode);
    case NodeKind::Delta:
      return delta_states(m, eval(m, f.child(), mode));
    case NodeKind::Box:
      if (mode != Mode::Extended) throw BoxNotAllowedError();
      return box_states(m, eval(m, f.child(), mode));
  }
  return 0;
}

}  // namespace

StateSet truth_set(const NeighborhoodModel& m, const Formula& f, Mode mode) { return eval(m, f, mode); }

bool holds_at(const NeighborhoodModel& m, int state, const Formula& f, Mode mode) {
  if (state < 0 || state >= m.state_count()) throw ModelError("state " + std::to_string(state) + " out of range");
  return (truth_set(m, f, mode) >> state) & 1u;
}

bool valid_in_model(const NeighborhoodModel& m, const Formula& f, Mode mode) {
  return truth_set(m, f, mode) == m.all_states();
}

StateSet Evaluator::truth_set(const Formula& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  StateSet result = 0;
  switch (f.kind()) {
    case NodeKind::Atom:
      result = atom_truth(model_, f);
      break;
    case NodeKind::Not:
      result = model_.all_states() & ~truth_set(f.child());
      break;
    case NodeKind::And:
      result = truth_set(f.left()) & truth_set(f.right());
      break;
    case NodeKind::Delta:
      result = delta_states(model_, truth_set(f.child()));
      break;
    case NodeKind::Box:
      if (mode_ != Mode::Extended) throw BoxNotAllowedError();
      result = box_states(model_, truth_set(f.child()));
      break;
  }
  memo_.emplace(f, result);
  return result;
}

}  // namespace cwb
