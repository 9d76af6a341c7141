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

#ifndef CWB_REPORT_HPP
#define CWB_REPORT_HPP

#include <string>
#include <vector>

#include "cwb/lambda.hpp"
#include "cwb/model.hpp"
#include "cwb/proofs.hpp"
#include "cwb/search.hpp"

namespace cwb {

// Rendered outcome of one workbench command. `outcome` is 0 when the result
// is valid / accepted / equal / complete and 1 when a countermodel,
// rejection or difference was found.
struct Report {
  int outcome = 0;
  std::string text;
  std::string json;
};

// Multi-line human description: state count, N(s) per state, valuation.
std::string describe_model(const NeighborhoodModel& m);
std::string describe_set(StateSet set);

Report report_check(const NeighborhoodModel& m, const Formula& f, int state, Mode mode);
Report report_validity(const Formula& f, FrameClass spec, const SearchVerdict& v, Mode mode);
Report report_props(const NeighborhoodModel& m);
Report report_supplement(const NeighborhoodModel& m);
Report report_supplement_sweep(const SupplementationSweep& sweep);
Report report_derivation(SystemId system, const Derivation& d, const CheckResult& r);
Report report_soundness(const SoundnessReport& r);
Report report_cube(const std::vector<SeparationWitness>& witnesses);
Report report_lambda(const NeighborhoodModel& m, const Universe& u, const std::vector<StateComparison>& cmp);

Report report_lambda_sweep(const LambdaSweep& sweep, std::size_t universe_size, int depth);

Report report_schema_experiment(const SchemaExperimentReport& r);
Report report_monotone(const MonotonicityReport& r, const Universe& u, const SearchConfig& cfg);

struct EnumerationCount {
  int states;
  std::uint64_t models;
};
Report report_enumerate(FrameClass spec, const std::vector<std::string>& atoms,
                        const std::vector<EnumerationCount>& counts, const std::vector<NeighborhoodModel>& listed);

}  // namespace cwb

#endif  // CWB_REPORT_HPP
