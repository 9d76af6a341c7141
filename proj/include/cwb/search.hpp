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

#ifndef CWB_SEARCH_HPP
#define CWB_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cwb/formula.hpp"
#include "cwb/lambda.hpp"
#include "cwb/model.hpp"
#include "cwb/proofs.hpp"

namespace cwb {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// A search runs an exhaustive phase over 1..max_states states (skipped when
// max_states is 0), then a random phase of `trials` seeded models with
// exactly `random_states` states (skipped when trials is 0). Models are
// scanned in that order and the first countermodel wins.
struct SearchConfig {
  int min_states = 1;  // first size of the exhaustive phase
  int max_states = 2;
  std::uint64_t trials = 0;
  int random_states = 3;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> atoms{"p", "q"};
  Mode mode = Mode::Core;

  static SearchConfig exhaustive(int max_states) {
    SearchConfig c;
    c.max_states = max_states;
    return c;
  }
  static SearchConfig random(std::uint64_t trials, int states, std::uint64_t seed = kDefaultSeed) {
    SearchConfig c;
    c.max_states = 0;
    c.trials = trials;
    c.random_states = states;
    c.seed = seed;
    return c;
  }
};

struct Countermodel {
  NeighborhoodModel model;
  int state;
};

struct SearchVerdict {
  std::optional<Countermodel> witness;
  std::string scope;                // what was actually searched
  std::uint64_t models_checked = 0; // models scanned up to and including the witness

  bool valid() const { return !witness.has_value(); }
};

// Throws BoundExceededError when max_states > 3, and Error when f mentions
// atoms outside cfg.atoms.
SearchVerdict check_validity(const Formula& f, FrameClass spec, const SearchConfig& cfg);

// One pass over the models for many formulas; verdict i is what
// check_validity(fs[i], ...) would return.
std::vector<SearchVerdict> check_validity_all(const std::vector<Formula>& fs, FrameClass spec,
                                              const SearchConfig& cfg);

// First model (in search order) falsifying any of fs; instance index plus
// countermodel, or nullopt.
struct FirstCountermodel {
  std::size_t index;
  Countermodel countermodel;
  std::string scope;
};
std::optional<FirstCountermodel> find_first_countermodel(const std::vector<Formula>& fs, FrameClass spec,
                                                         const SearchConfig& cfg);

// Visits models in search order until `visit` returns false.
void for_each_model(FrameClass spec, const SearchConfig& cfg,
                    const std::function<bool(const NeighborhoodModel&)>& visit);

// p, q, !p, !q, p & q, p | q
std::vector<Formula> standard_pool();

struct SchemaInstance {
  Schema schema;
  Formula formula;
};

// Every tuple of pool members for the schema's metavariables, phi outermost.
std::vector<SchemaInstance> instances_over_pool(Schema schema, const std::vector<Formula>& pool);

struct InstanceVerdict {
  Schema schema;
  Formula instance;
  SearchVerdict verdict;
};

struct SoundnessReport {
  SystemId system;
  FrameClass frame_class;
  std::vector<Formula> pool;
  std::vector<InstanceVerdict> results;

  std::size_t countermodels() const;
};

SoundnessReport axiom_soundness_report(SystemId system, const std::vector<Formula>& pool, const SearchConfig& cfg);

// Instance validity of an arbitrary schema list on a class; used for the
// alternative-axiom runs.
SoundnessReport schema_validity_report(const std::vector<Schema>& schemas, FrameClass spec,
                                       const std::vector<Formula>& pool, const SearchConfig& cfg);

struct CubeArrow {
  SystemId from;
  SystemId to;
  Schema added;
};

// The 12 edges of the cube over {M, C, N}, each adding one axiom.
std::vector<CubeArrow> cube_arrows();

struct SeparationWitness {
  CubeArrow arrow;
  bool syntactic_inclusion;
  FrameClass frame_class;  // class of the weaker system
  Formula instance;
  Countermodel countermodel;
  std::string scope;
};

// Phases tried per arrow until a witness appears: exhaustive up to
// search.max_states, then fallback_trials random models for each size in
// fallback_random_states.
struct CubeConfig {
  SearchConfig search = SearchConfig::exhaustive(2);
  std::uint64_t fallback_trials = 20000;
  std::vector<int> fallback_random_states{3, 4};
  std::vector<Formula> pool = standard_pool();
};

// Throws WitnessNotFoundError naming the first arrow without a witness.
std::vector<SeparationWitness> cube_strictness(const CubeConfig& cfg);

// nabla chi -> ([] phi <-> D phi & D (chi -> phi))
Formula almost_definability(const Formula& chi, const Formula& phi);

struct SchemaExperimentReport {
  FrameClass frame_class;
  std::vector<InstanceVerdict> results;
};

// Instances over (chi, phi) pairs from the pool, checked in extended mode.
// Evidence only: the box reading is this library's choice.
SchemaExperimentReport schema_validity_experiment(FrameClass spec, const std::vector<Formula>& pool,
                                                  SearchConfig cfg);

// N'(s) = { phi^M : phi in U, some psi in U with D phi & D (psi -> phi) & Nb psi at s }
std::vector<StateSet> selected_neighborhoods(const NeighborhoodModel& m, int state, const Universe& u);

struct MonotonicityViolation {
  NeighborhoodModel model;
  int state;
  Formula phi;       // phi^M in N'(s)
  Formula psi;       // phi^M subset of psi^M, psi^M not in N'(s)
  Formula source;    // member with the same truth set as phi that entered N'(s)
  Formula selector;  // the psi of the N'(s) condition for `source`
  bool reverified;
};

struct MonotonicityReport {
  std::uint64_t models = 0;
  std::uint64_t states = 0;
  std::uint64_t violations = 0;
  std::vector<MonotonicityViolation> examples;  // first few, each re-verified
  bool all_reverified = true;

  bool found() const { return violations > 0; }
};

MonotonicityReport almost_monotonicity_experiment(const Universe& u, const SearchConfig& cfg,
                                                  std::size_t max_examples = 5);

// Independent check of one violation by direct evaluation.
bool reverify_violation(const MonotonicityViolation& v, const Universe& u);

struct LambdaSweep {
  std::uint64_t models = 0;
  std::uint64_t states = 0;
  std::uint64_t differences = 0;  // states where the lambdas disagree
  std::string scope;
  std::optional<NeighborhoodModel> first_model;
  std::optional<StateComparison> first_difference;
};

// compare_lambdas over every model of the search (frame class "all").
LambdaSweep lambda_equivalence_sweep(const Universe& u, const SearchConfig& cfg);

// Supplementation laws checked on every model of the search (class all):
// N+ is (s), N within N+, idempotent, and (i) and (n) are preserved.
struct SupplementationSweep {
  std::uint64_t models = 0;
  std::uint64_t violations = 0;
  std::string scope;
  std::optional<NeighborhoodModel> first_violation;
  std::string first_law;
};

SupplementationSweep supplementation_sweep(const SearchConfig& cfg);

}  // namespace cwb

#endif  // CWB_SEARCH_HPP
