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

#include "cwb/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "cwb/errors.hpp"
#include "cwb/semantics.hpp"

namespace cwb {

namespace {

std::string describe_scope(FrameClass spec, const SearchConfig& cfg) {
  std::string out;
  if (cfg.max_states >= cfg.min_states && cfg.max_states > 0) {
    std::uint64_t total = 0;
    for (int n = cfg.min_states; n <= cfg.max_states; ++n) total += ModelEnumerator(n, cfg.atoms, spec).count();
    out += "exhaustive ";
    out += cfg.min_states == 1 ? "|S|<=" + std::to_string(cfg.max_states)
                               : "|S| in " + std::to_string(cfg.min_states) + ".." + std::to_string(cfg.max_states);
    out += " (" + std::to_string(total) + " models)";
  }
  if (cfg.trials > 0) {
    if (!out.empty()) out += "; ";
    out += "random " + std::to_string(cfg.trials) + " models |S|=" + std::to_string(cfg.random_states) + " seed " +
           std::to_string(cfg.seed);
  }
  if (out.empty()) out = "nothing searched";
  return out;
}

}  // namespace

void for_each_model(FrameClass spec, const SearchConfig& cfg, const std::function<bool(const NeighborhoodModel&)>& visit) {
  if (cfg.max_states > kMaxExhaustiveStates)
    throw BoundExceededError("exhaustive search supports at most " + std::to_string(kMaxExhaustiveStates) +
                             " states; use random trials beyond that");
  for (int n = std::max(cfg.min_states, 1); n <= cfg.max_states; ++n) {
    ModelEnumerator models(n, cfg.atoms, spec);
    for (std::uint64_t i = 0; i < models.count(); ++i)
      if (!visit(models.at(i))) return;
  }
  for (std::uint64_t t = 0; t < cfg.trials; ++t)
    if (!visit(random_model(cfg.random_states, cfg.atoms, spec, trial_seed(cfg.seed, t)))) return;
}

namespace {

void require_atoms(const Formula& f, const SearchConfig& cfg) {
  for (const auto& a : atoms_of(f)) {
    if (a == kTopAtom) continue;
    if (std::find(cfg.atoms.begin(), cfg.atoms.end(), a) == cfg.atoms.end())
      throw Error("formula atom '" + a + "' is not among the search atoms");
  }
}

// Lowest falsifying state, confirmed through the memoizing evaluator.
std::optional<int> falsified_at(const NeighborhoodModel& m, const Formula& f, Mode mode) {
  const StateSet ts = truth_set(m, f, mode);
  const StateSet missing = m.all_states() & ~ts;
  if (missing == 0) return std::nullopt;
  const int state = std::countr_zero(missing);
  Evaluator check(m, mode);
  if (check.holds_at(state, f)) throw Error("countermodel failed re-verification for " + render(f));
  return state;
}

}  // namespace

std::vector<SearchVerdict> check_validity_all(const std::vector<Formula>& fs, FrameClass spec,
                                              const SearchConfig& cfg) {
  for (const auto& f : fs) require_atoms(f, cfg);
  const std::string scope = describe_scope(spec, cfg);
  std::vector<SearchVerdict> out(fs.size());
  std::size_t open = fs.size();
  std::uint64_t seen = 0;
  for_each_model(spec, cfg, [&](const NeighborhoodModel& m) {
    ++seen;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (out[i].witness) continue;
      if (auto state = falsified_at(m, fs[i], cfg.mode)) {
        out[i].witness = Countermodel{m, *state};
        out[i].models_checked = seen;
        --open;
      }
    }
    return open > 0;
  });
  for (auto& v : out) {
    v.scope = scope;
    if (!v.witness) v.models_checked = seen;
  }
  return out;
}

SearchVerdict check_validity(const Formula& f, FrameClass spec, const SearchConfig& cfg) {
  return check_validity_all({f}, spec, cfg).front();
}

std::optional<FirstCountermodel> find_first_countermodel(const std::vector<Formula>& fs, FrameClass spec,
                                                         const SearchConfig& cfg) {
  for (const auto& f : fs) require_atoms(f, cfg);
  std::optional<FirstCountermodel> found;
  for_each_model(spec, cfg, [&](const NeighborhoodModel& m) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (auto state = falsified_at(m, fs[i], cfg.mode)) {
        found = FirstCountermodel{i, Countermodel{m, *state}, describe_scope(spec, cfg)};
        return false;
      }
    }
    return true;
  });
  return found;
}

std::vector<Formula> standard_pool() {
  const Formula p = atom("p"), q = atom("q");
  return {p, q, negate(p), negate(q), conj(p, q), disj(p, q)};
}

std::vector<SchemaInstance> instances_over_pool(Schema schema, const std::vector<Formula>& pool) {
  std::vector<SchemaInstance> out;
  const int arity = metavariable_count(schema);
  if (arity == 0) {
    out.push_back({schema, instantiate(schema, {})});
    return out;
  }
  if (pool.empty()) throw Error("instance pool must be nonempty");
  const std::size_t n = pool.size();
  std::size_t total = 1;
  for (int k = 0; k < arity; ++k) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    // phi is the most significant digit.
    std::size_t digits[3] = {0, 0, 0};
    std::size_t rest = code;
    for (int k = arity - 1; k >= 0; --k) {
      digits[k] = rest % n;
      rest /= n;
    }
    Bindings b;
    b.phi = pool[digits[0]];
    if (arity >= 2) b.psi = pool[digits[1]];
    if (arity >= 3) b.chi = pool[digits[2]];
    out.push_back({schema, instantiate(schema, b)});
  }
  return out;
}

std::size_t SoundnessReport::countermodels() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const InstanceVerdict& r) { return !r.verdict.valid(); }));
}

SoundnessReport schema_validity_report(const std::vector<Schema>& schemas, FrameClass spec,
                                       const std::vector<Formula>& pool, const SearchConfig& cfg) {
  if (pool.empty()) throw Error("instance pool must be nonempty");
  std::vector<SchemaInstance> instances;
  for (Schema s : schemas) {
    auto more = instances_over_pool(s, pool);
    instances.insert(instances.end(), more.begin(), more.end());
  }
  std::vector<Formula> formulas;
  formulas.reserve(instances.size());
  for (const auto& i : instances) formulas.push_back(i.formula);
  auto verdicts = check_validity_all(formulas, spec, cfg);

  SoundnessReport report{SystemId::E, spec, pool, {}};
  for (std::size_t i = 0; i < instances.size(); ++i)
    report.results.push_back({instances[i].schema, instances[i].formula, std::move(verdicts[i])});
  return report;
}

SoundnessReport axiom_soundness_report(SystemId system, const std::vector<Formula>& pool, const SearchConfig& cfg) {
  const SystemSpec spec = system_spec(system);
  SoundnessReport report = schema_validity_report(spec.axioms, spec.frame_class, pool, cfg);
  report.system = system;
  return report;
}

std::vector<CubeArrow> cube_arrows() {
  // Systems indexed by the bits (M, C, N).
  static const SystemId by_bits[8] = {SystemId::E,  SystemId::EN,  SystemId::EC, SystemId::ECN,
                                      SystemId::M,  SystemId::EMN, SystemId::R,  SystemId::K};
  static const Schema by_bit[3] = {Schema::Unit, Schema::Conj, Schema::Mono};
  std::vector<CubeArrow> out;
  for (int from = 0; from < 8; ++from)
    for (int bit = 2; bit >= 0; --bit)
      if ((from & (1 << bit)) == 0) out.push_back({by_bits[from], by_bits[from | (1 << bit)], by_bit[bit]});
  return out;
}

std::vector<SeparationWitness> cube_strictness(const CubeConfig& cfg) {
  std::vector<SearchConfig> phases{cfg.search};
  if (cfg.fallback_trials > 0) {
    for (int n : cfg.fallback_random_states) {
      SearchConfig rnd = SearchConfig::random(cfg.fallback_trials, n, cfg.search.seed);
      rnd.atoms = cfg.search.atoms;
      phases.push_back(rnd);
    }
  }

  std::vector<SeparationWitness> out;
  for (const CubeArrow& arrow : cube_arrows()) {
    const FrameClass cls = system_spec(arrow.from).frame_class;
    std::vector<Formula> instances;
    for (auto& i : instances_over_pool(arrow.added, cfg.pool)) instances.push_back(i.formula);
    std::optional<FirstCountermodel> hit;
    for (const auto& phase : phases) {
      hit = find_first_countermodel(instances, cls, phase);
      if (hit) break;
    }
    if (!hit)
      throw WitnessNotFoundError("no separation witness for " + std::string(to_string(arrow.from)) + " -> " +
                                 std::string(to_string(arrow.to)) + " within the search bounds");
    out.push_back({arrow, system_includes(arrow.to, arrow.from), cls, instances[hit->index], hit->countermodel,
                   hit->scope});
  }
  return out;
}

Formula almost_definability(const Formula& chi, const Formula& phi) {
  return implies(nabla(chi), iff(box(phi), conj(delta(phi), delta(implies(chi, phi)))));
}

SchemaExperimentReport schema_validity_experiment(FrameClass spec, const std::vector<Formula>& pool,
                                                  SearchConfig cfg) {
  if (pool.empty()) throw Error("instance pool must be nonempty");
  cfg.mode = Mode::Extended;
  std::vector<Formula> instances;
  for (const auto& chi : pool)
    for (const auto& phi : pool) instances.push_back(almost_definability(chi, phi));
  auto verdicts = check_validity_all(instances, spec, cfg);
  SchemaExperimentReport report{spec, {}};
  for (std::size_t i = 0; i < instances.size(); ++i)
    report.results.push_back({Schema::Equ, instances[i], std::move(verdicts[i])});
  return report;
}

namespace {

struct Selection {
  StateSet set;
  std::size_t source;
  std::size_t selector;
};

// N'(s) with, for each member set, the first (source, selector) pair found.
std::vector<Selection> select(Evaluator& ev, int state, const Universe& u) {
  std::vector<Selection> out;
  std::set<StateSet> seen;
  const auto& members = u.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!ev.holds_at(state, delta(members[i]))) continue;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (ev.holds_at(state, delta(implies(members[j], members[i]))) && ev.holds_at(state, nabla(members[j]))) {
        const StateSet ts = ev.truth_set(members[i]);
        if (seen.insert(ts).second) out.push_back({ts, i, j});
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<StateSet> selected_neighborhoods(const NeighborhoodModel& m, int state, const Universe& u) {
  Evaluator ev(m);
  std::vector<StateSet> out;
  for (const auto& s : select(ev, state, u)) out.push_back(s.set);
  std::sort(out.begin(), out.end());
  return out;
}

bool reverify_violation(const MonotonicityViolation& v, const Universe& u) {
  const auto& m = v.model;
  const int s = v.state;
  const StateSet phi_set = truth_set(m, v.phi);
  const StateSet psi_set = truth_set(m, v.psi);
  // phi^M in N'(s), via the recorded source and selector.
  if (truth_set(m, v.source) != phi_set) return false;
  if (!holds_at(m, s, delta(v.source)) || !holds_at(m, s, delta(implies(v.selector, v.source))) ||
      !holds_at(m, s, nabla(v.selector)))
    return false;
  // phi^M is a subset of psi^M.
  if ((phi_set & ~psi_set) != 0) return false;
  // No member with psi's truth set is selected by any member.
  for (const auto& theta : u.members()) {
    if (truth_set(m, theta) != psi_set || !holds_at(m, s, delta(theta))) continue;
    for (const auto& chi : u.members())
      if (holds_at(m, s, delta(implies(chi, theta))) && holds_at(m, s, nabla(chi))) return false;
  }
  return true;
}

MonotonicityReport almost_monotonicity_experiment(const Universe& u, const SearchConfig& cfg,
                                                  std::size_t max_examples) {
  MonotonicityReport report;
  FrameClass any = FrameClass::all();
  for_each_model(any, cfg, [&](const NeighborhoodModel& m) {
    ++report.models;
    Evaluator ev(m);
    for (int s = 0; s < m.state_count(); ++s) {
      ++report.states;
      const auto selected = select(ev, s, u);
      auto in_selected = [&](StateSet x) {
        return std::any_of(selected.begin(), selected.end(), [x](const Selection& sel) { return sel.set == x; });
      };
      for (const auto& sel : selected) {
        for (const auto& psi : u.members()) {
          const StateSet psi_set = ev.truth_set(psi);
          if ((sel.set & ~psi_set) != 0 || in_selected(psi_set)) continue;
          ++report.violations;
          MonotonicityViolation v{m, s, u.members()[sel.source], psi, u.members()[sel.source],
                                  u.members()[sel.selector], false};
          v.reverified = reverify_violation(v, u);
          report.all_reverified = report.all_reverified && v.reverified;
          if (report.examples.size() < max_examples) report.examples.push_back(std::move(v));
        }
      }
    }
    return true;
  });
  return report;
}

LambdaSweep lambda_equivalence_sweep(const Universe& u, const SearchConfig& cfg) {
  LambdaSweep sweep;
  sweep.scope = describe_scope(FrameClass::all(), cfg);
  for_each_model(FrameClass::all(), cfg, [&](const NeighborhoodModel& m) {
    ++sweep.models;
    for (auto& c : compare_lambdas(m, u)) {
      ++sweep.states;
      if (c.equal) continue;
      ++sweep.differences;
      if (!sweep.first_difference) {
        sweep.first_model = m;
        sweep.first_difference = std::move(c);
      }
    }
    return true;
  });
  return sweep;
}

SupplementationSweep supplementation_sweep(const SearchConfig& cfg) {
  SupplementationSweep sweep;
  sweep.scope = describe_scope(FrameClass::all(), cfg);
  for_each_model(FrameClass::all(), cfg, [&](const NeighborhoodModel& m) {
    ++sweep.models;
    const NeighborhoodModel plus = supplementation(m);
    const NeighborhoodModel twice = supplementation(plus);
    std::string law;
    if (!has_property(plus, FrameProperty::Superset)) law = "result lacks (s)";
    for (int s = 0; s < m.state_count() && law.empty(); ++s)
      if (!m.neighborhood(s).subset_of(plus.neighborhood(s))) law = "N not contained in N+";
    if (law.empty() && twice.neighborhoods() != plus.neighborhoods()) law = "not idempotent";
    if (law.empty() && has_property(m, FrameProperty::Intersection) && !has_property(plus, FrameProperty::Intersection))
      law = "(i) not preserved";
    if (law.empty() && has_property(m, FrameProperty::Unit) && !has_property(plus, FrameProperty::Unit))
      law = "(n) not preserved";
    if (!law.empty()) {
      ++sweep.violations;
      if (!sweep.first_violation) {
        sweep.first_violation = m;
        sweep.first_law = law;
      }
    }
    return true;
  });
  return sweep;
}

}  // namespace cwb
