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

#ifndef CWB_MODEL_HPP
#define CWB_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cwb {

// Bit i set <=> state i is a member.
using StateSet = std::uint32_t;

inline constexpr int kMaxStates = 16;
inline constexpr int kMaxExhaustiveStates = 3;

inline StateSet full_set(int state_count) { return static_cast<StateSet>((1ULL << state_count) - 1); }

// A family of subsets of {0..state_count-1}, stored as a bitmap indexed by
// the subset's StateSet value. Membership, insertion and removal are O(1).
class SubsetFamily {
 public:
  explicit SubsetFamily(int state_count);
  SubsetFamily(int state_count, const std::vector<StateSet>& members);

  int state_count() const { return state_count_; }
  StateSet universe() const { return full_set(state_count_); }

  bool contains(StateSet x) const { return (bits_[x >> 6] >> (x & 63)) & 1ULL; }
  void insert(StateSet x) { bits_[x >> 6] |= 1ULL << (x & 63); }
  void erase(StateSet x) { bits_[x >> 6] &= ~(1ULL << (x & 63)); }

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // Members in ascending StateSet order.
  std::vector<StateSet> members() const;
  bool subset_of(const SubsetFamily& other) const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  int state_count_;
  std::vector<std::uint64_t> bits_;
};

enum class FrameProperty : std::uint8_t {
  Unit = 1,          // (n): S in N(s)
  Intersection = 2,  // (i)
  Superset = 4,      // (s)
  Complement = 8,    // (c)
};

char property_letter(FrameProperty p);
std::optional<FrameProperty> property_from_letter(char c);

// A set of required frame properties.
class FrameClass {
 public:
  constexpr FrameClass() = default;
  constexpr explicit FrameClass(std::uint8_t mask) : mask_(mask) {}
  FrameClass(std::initializer_list<FrameProperty> props);

  static FrameClass all() { return FrameClass(); }
  static FrameClass quasi_filter() { return {FrameProperty::Intersection, FrameProperty::Superset}; }
  static FrameClass filter() { return {FrameProperty::Intersection, FrameProperty::Superset, FrameProperty::Unit}; }

  // Accepts "all", "quasi-filter", "filter" and comma-separated letters
  // drawn from n, i, s, c (e.g. "i,c,n"). nullopt on anything else.
  static std::optional<FrameClass> parse(std::string_view text);

  bool requires_property(FrameProperty p) const { return mask_ & static_cast<std::uint8_t>(p); }
  bool includes(FrameClass other) const { return (mask_ & other.mask_) == other.mask_; }
  std::uint8_t mask() const { return mask_; }

  // "all", "quasi-filter", "filter", or letters in i,s,c,n order.
  std::string name() const;

  friend bool operator==(FrameClass, FrameClass) = default;

 private:
  std::uint8_t mask_ = 0;
};

using Valuation = std::map<std::string, StateSet>;

class NeighborhoodModel {
 public:
  // Throws ModelError if an invariant is violated.
  NeighborhoodModel(int state_count, std::vector<SubsetFamily> neighborhoods, Valuation valuation);

  int state_count() const { return state_count_; }
  StateSet all_states() const { return full_set(state_count_); }
  const SubsetFamily& neighborhood(int state) const { return neighborhoods_.at(state); }
  const std::vector<SubsetFamily>& neighborhoods() const { return neighborhoods_; }
  const Valuation& valuation() const { return valuation_; }

  friend bool operator==(const NeighborhoodModel&, const NeighborhoodModel&) = default;

 private:
  int state_count_;
  std::vector<SubsetFamily> neighborhoods_;
  Valuation valuation_;
};

bool has_property(const SubsetFamily& family, FrameProperty p);
bool has_property(const NeighborhoodModel& m, FrameProperty p);
bool satisfies_class(const SubsetFamily& family, FrameClass spec);
bool satisfies_class(const NeighborhoodModel& m, FrameClass spec);

SubsetFamily superset_closure(const SubsetFamily& family);
NeighborhoodModel supplementation(const NeighborhoodModel& m);

// Closes the family under exactly the properties `spec` demands, in the
// order (i), (s), (n), (c), repeated until nothing changes.
SubsetFamily repair(SubsetFamily family, FrameClass spec);

// Deterministic enumeration of all models over `state_count` states and the
// given atoms whose frame lies in `spec`. Models are indexed 0..count()-1;
// the valuation varies fastest, then N(0), N(1), ... .
class ModelEnumerator {
 public:
  // Throws BoundExceededError when state_count is outside 1..3.
  ModelEnumerator(int state_count, std::vector<std::string> atoms, FrameClass spec);

  std::uint64_t count() const { return count_; }
  std::optional<NeighborhoodModel> next();
  NeighborhoodModel at(std::uint64_t index) const;
  void reset() { cursor_ = 0; }

  // In-class neighborhood families for one state, ascending by bitmap.
  const std::vector<SubsetFamily>& admissible_families() const { return families_; }

 private:
  int state_count_;
  std::vector<std::string> atoms_;
  std::vector<SubsetFamily> families_;
  std::uint64_t valuations_ = 1;
  std::uint64_t count_ = 0;
  std::uint64_t cursor_ = 0;
};

// Samples up to four generator subsets per state plus a random valuation,
// then repairs each neighborhood into `spec`. Same arguments, same model.
// Throws BoundExceededError when state_count is outside 1..16.
NeighborhoodModel random_model(int state_count, const std::vector<std::string>& atoms, FrameClass spec,
                               std::uint64_t seed);

// Seed of the trial-th model in a seeded random run.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

std::string to_json(const NeighborhoodModel& m);
// Throws ModelError on malformed input.
NeighborhoodModel model_from_json(std::string_view text);

}  // namespace cwb

#endif  // CWB_MODEL_HPP
