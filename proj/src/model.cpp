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

#include "cwb/model.hpp"

#include <bit>
#include <limits>
#include <random>

#include "cwb/errors.hpp"
#include "cwb/formula.hpp"

namespace cwb {

SubsetFamily::SubsetFamily(int state_count) : state_count_(state_count) {
  if (state_count < 1 || state_count > kMaxStates)
    throw ModelError("state count " + std::to_string(state_count) + " outside 1.." + std::to_string(kMaxStates));
  bits_.assign(((std::size_t{1} << state_count) + 63) / 64, 0);
}

SubsetFamily::SubsetFamily(int state_count, const std::vector<StateSet>& members) : SubsetFamily(state_count) {
  for (StateSet x : members) {
    if ((x & ~universe()) != 0) throw ModelError("subset mentions a state outside the model");
    insert(x);
  }
}

std::size_t SubsetFamily::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<StateSet> SubsetFamily::members() const {
  std::vector<StateSet> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      int b = std::countr_zero(word);
      out.push_back(static_cast<StateSet>(w * 64 + b));
      word &= word - 1;
    }
  }
  return out;
}

bool SubsetFamily::subset_of(const SubsetFamily& other) const {
  if (state_count_ != other.state_count_) return false;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  return true;
}

char property_letter(FrameProperty p) {
  switch (p) {
    case FrameProperty::Unit:
      return 'n';
    case FrameProperty::Intersection:
      return 'i';
    case FrameProperty::Superset:
      return 's';
    case FrameProperty::Complement:
      return 'c';
  }
  return '?';
}

std::optional<FrameProperty> property_from_letter(char c) {
  switch (c) {
    case 'n':
      return FrameProperty::Unit;
    case 'i':
      return FrameProperty::Intersection;
    case 's':
      return FrameProperty::Superset;
    case 'c':
      return FrameProperty::Complement;
    default:
      return std::nullopt;
  }
}

FrameClass::FrameClass(std::initializer_list<FrameProperty> props) {
  for (auto p : props) mask_ |= static_cast<std::uint8_t>(p);
}

std::optional<FrameClass> FrameClass::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "quasi-filter") return quasi_filter();
  if (text == "filter") return filter();
  if (text.empty()) return std::nullopt;
  std::uint8_t mask = 0;
  bool expect_letter = true;
  for (char c : text) {
    if (expect_letter) {
      auto p = property_from_letter(c);
      if (!p) return std::nullopt;
      mask |= static_cast<std::uint8_t>(*p);
    } else if (c != ',') {
      return std::nullopt;
    }
    expect_letter = !expect_letter;
  }
  if (expect_letter) return std::nullopt;
  return FrameClass(mask);
}

std::string FrameClass::name() const {
  if (mask_ == 0) return "all";
  if (*this == quasi_filter()) return "quasi-filter";
  if (*this == filter()) return "filter";
  std::string out;
  for (auto p : {FrameProperty::Intersection, FrameProperty::Superset, FrameProperty::Complement, FrameProperty::Unit}) {
    if (!requires_property(p)) continue;
    if (!out.empty()) out += ',';
    out += property_letter(p);
  }
  return out;
}

NeighborhoodModel::NeighborhoodModel(int state_count, std::vector<SubsetFamily> neighborhoods, Valuation valuation)
    : state_count_(state_count), neighborhoods_(std::move(neighborhoods)), valuation_(std::move(valuation)) {
  if (state_count < 1 || state_count > kMaxStates)
    throw ModelError("state count " + std::to_string(state_count) + " outside 1.." + std::to_string(kMaxStates));
  if (static_cast<int>(neighborhoods_.size()) != state_count)
    throw ModelError("expected " + std::to_string(state_count) + " neighborhoods, got " +
                     std::to_string(neighborhoods_.size()));
  for (const auto& family : neighborhoods_)
    if (family.state_count() != state_count) throw ModelError("neighborhood built over a different state count");
  for (const auto& [name, set] : valuation_) {
    if (name == kTopAtom) throw ModelError("atom '_t' is reserved");
    if ((set & ~all_states()) != 0) throw ModelError("valuation of '" + name + "' mentions a state outside the model");
  }
}

namespace {

std::vector<StateSet> minimal_members(const SubsetFamily& family) {
  std::vector<StateSet> out;
  for (StateSet x : family.members()) {
    bool minimal = true;
    for (StateSet rest = x; rest != 0 && minimal; rest &= rest - 1)
      minimal = !family.contains(x & ~(rest & -rest));
    if (minimal) out.push_back(x);
  }
  return out;
}

}  // namespace

bool has_property(const SubsetFamily& family, FrameProperty p) {
  const StateSet all = family.universe();
  switch (p) {
    case FrameProperty::Unit:
      return family.contains(all);
    case FrameProperty::Intersection: {
      // an upward closed family only needs its minimal members checked
      auto members = has_property(family, FrameProperty::Superset) ? minimal_members(family) : family.members();
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          if (!family.contains(members[a] & members[b])) return false;
      return true;
    }
    case FrameProperty::Superset:
      // Closure under one-element extensions implies closure under supersets.
      for (StateSet x : family.members())
        for (int s = 0; s < family.state_count(); ++s)
          if (!family.contains(x | (StateSet{1} << s))) return false;
      return true;
    case FrameProperty::Complement:
      for (StateSet x : family.members())
        if (!family.contains(all & ~x)) return false;
      return true;
  }
  return false;
}

bool has_property(const NeighborhoodModel& m, FrameProperty p) {
  for (const auto& family : m.neighborhoods())
    if (!has_property(family, p)) return false;
  return true;
}

bool satisfies_class(const SubsetFamily& family, FrameClass spec) {
  for (auto p : {FrameProperty::Unit, FrameProperty::Intersection, FrameProperty::Superset, FrameProperty::Complement})
    if (spec.requires_property(p) && !has_property(family, p)) return false;
  return true;
}

bool satisfies_class(const NeighborhoodModel& m, FrameClass spec) {
  for (const auto& family : m.neighborhoods())
    if (!satisfies_class(family, spec)) return false;
  return true;
}

SubsetFamily superset_closure(const SubsetFamily& family) {
  SubsetFamily out = family;
  const StateSet limit = family.universe();
  for (int s = 0; s < family.state_count(); ++s) {
    const StateSet bit = StateSet{1} << s;
    for (StateSet x = 0; x <= limit; ++x)
      if ((x & bit) == 0 && out.contains(x)) out.insert(x | bit);
  }
  return out;
}

NeighborhoodModel supplementation(const NeighborhoodModel& m) {
  std::vector<SubsetFamily> closed;
  closed.reserve(m.neighborhoods().size());
  for (const auto& family : m.neighborhoods()) closed.push_back(superset_closure(family));
  return NeighborhoodModel(m.state_count(), std::move(closed), m.valuation());
}

namespace {

void close_intersections(SubsetFamily& family) {
  // upward closed: close the minimal members, then take supersets again
  const bool upward = has_property(family, FrameProperty::Superset);
  std::vector<StateSet> members = upward ? minimal_members(family) : family.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const StateSet x = members[a] & members[b];
      if (!family.contains(x)) {
        family.insert(x);
        members.push_back(x);
      }
    }
  }
  if (upward) family = superset_closure(family);
}

void close_complements(SubsetFamily& family) {
  const StateSet all = family.universe();
  for (StateSet x : family.members()) family.insert(all & ~x);
}

}  // namespace

SubsetFamily repair(SubsetFamily family, FrameClass spec) {
  for (;;) {
    const SubsetFamily before = family;
    if (spec.requires_property(FrameProperty::Intersection)) close_intersections(family);
    if (spec.requires_property(FrameProperty::Superset)) family = superset_closure(family);
    if (spec.requires_property(FrameProperty::Unit)) family.insert(family.universe());
    if (spec.requires_property(FrameProperty::Complement)) close_complements(family);
    if (family == before) return family;
  }
}

ModelEnumerator::ModelEnumerator(int state_count, std::vector<std::string> atoms, FrameClass spec)
    : state_count_(state_count), atoms_(std::move(atoms)) {
  if (state_count < 1 || state_count > kMaxExhaustiveStates)
    throw BoundExceededError("exhaustive enumeration supports 1.." + std::to_string(kMaxExhaustiveStates) +
                             " states, got " + std::to_string(state_count));
  const unsigned subsets = 1u << state_count;
  const std::uint64_t family_masks = 1ULL << subsets;
  for (std::uint64_t mask = 0; mask < family_masks; ++mask) {
    SubsetFamily family(state_count);
    for (unsigned x = 0; x < subsets; ++x)
      if ((mask >> x) & 1ULL) family.insert(x);
    if (satisfies_class(family, spec)) families_.push_back(std::move(family));
  }
  const std::uint64_t valuation_bits = static_cast<std::uint64_t>(state_count) * atoms_.size();
  if (valuation_bits > 40) throw BoundExceededError("too many atoms for exhaustive enumeration");
  valuations_ = 1ULL << valuation_bits;
  count_ = valuations_;
  for (int s = 0; s < state_count; ++s) count_ *= families_.size();
}

NeighborhoodModel ModelEnumerator::at(std::uint64_t index) const {
  std::uint64_t v = index % valuations_;
  std::uint64_t rest = index / valuations_;
  std::vector<SubsetFamily> neighborhoods;
  neighborhoods.reserve(state_count_);
  for (int s = 0; s < state_count_; ++s) {
    neighborhoods.push_back(families_[rest % families_.size()]);
    rest /= families_.size();
  }
  Valuation valuation;
  const StateSet all = full_set(state_count_);
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    valuation[atoms_[k]] = static_cast<StateSet>(v >> (k * state_count_)) & all;
  return NeighborhoodModel(state_count_, std::move(neighborhoods), std::move(valuation));
}

std::optional<NeighborhoodModel> ModelEnumerator::next() {
  if (cursor_ >= count_) return std::nullopt;
  return at(cursor_++);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

NeighborhoodModel random_model(int state_count, const std::vector<std::string>& atoms, FrameClass spec,
                               std::uint64_t seed) {
  if (state_count < 1 || state_count > kMaxStates)
    throw BoundExceededError("random models support 1.." + std::to_string(kMaxStates) + " states");
  std::mt19937_64 rng(seed);
  const StateSet all = full_set(state_count);
  std::vector<SubsetFamily> neighborhoods;
  neighborhoods.reserve(state_count);
  for (int s = 0; s < state_count; ++s) {
    SubsetFamily family(state_count);
    const auto generators = rng() % 5;
    for (std::uint64_t g = 0; g < generators; ++g) family.insert(static_cast<StateSet>(rng()) & all);
    neighborhoods.push_back(repair(std::move(family), spec));
  }
  Valuation valuation;
  for (const auto& name : atoms) valuation[name] = static_cast<StateSet>(rng()) & all;
  return NeighborhoodModel(state_count, std::move(neighborhoods), std::move(valuation));
}

}  // namespace cwb
