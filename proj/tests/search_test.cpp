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

#include <doctest.h>

#include <set>

#include "cwb/errors.hpp"
#include "cwb/search.hpp"
#include "cwb/semantics.hpp"
#include "test_support.hpp"

using namespace cwb;

namespace {

Formula F(const char* text) { return parse(text); }

// First falsifying (model index, state) by plain iteration and the oracle.
std::optional<std::pair<std::uint64_t, int>> oracle_first(const Formula& f, FrameClass spec, int max_states,
                                                          const std::vector<std::string>& atoms) {
  std::uint64_t index = 0;
  for (int n = 1; n <= max_states; ++n) {
    ModelEnumerator e(n, atoms, spec);
    while (auto m = e.next()) {
      ++index;
      for (int s = 0; s < n; ++s)
        if (!testing::oracle::holds(*m, s, f)) return std::make_pair(index, s);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("standard pool and instances") {
  const auto pool = standard_pool();
  CHECK(pool.size() == 6);
  CHECK(pool[4] == F("p & q"));
  CHECK(pool[5] == F("p | q"));
  CHECK(instances_over_pool(Schema::Unit, pool).size() == 1);
  CHECK(instances_over_pool(Schema::Equ, pool).size() == 6);
  CHECK(instances_over_pool(Schema::Conj, pool).size() == 36);
  CHECK(instances_over_pool(Schema::Mono, pool).size() == 216);
  const auto conj = instances_over_pool(Schema::Conj, pool);
  CHECK(conj[1].formula == instantiate(Schema::Conj, Bindings{pool[0], pool[1], std::nullopt}));
}

TEST_CASE("validity verdicts match the oracle") {
  const std::vector<const char*> formulas{
      "D p <-> D !p", "D p & D q -> D (p & q)", "D p -> D (p | q) | D (!p | q)", "D top",
      "D p -> p",     "D (p & q) -> D p",       "D p | D q",                      "p | !p"};
  for (const char* cls : {"all", "i,c", "n", "s", "quasi-filter", "filter"}) {
    const FrameClass spec = *FrameClass::parse(cls);
    for (const char* text : formulas) {
      const Formula f = F(text);
      const auto v = check_validity(f, spec, SearchConfig::exhaustive(2));
      const auto o = oracle_first(f, spec, 2, {"p", "q"});
      CAPTURE(cls);
      CAPTURE(text);
      REQUIRE(v.valid() == !o.has_value());
      if (o) {
        CHECK(v.models_checked == o->first);
        CHECK(v.witness->state == o->second);
        CHECK_FALSE(testing::oracle::holds(v.witness->model, v.witness->state, f));
        CHECK(satisfies_class(v.witness->model, spec));
      }
    }
  }
}

TEST_CASE("conjunction law fails on intersection frames within two states") {
  const Formula law = F("D p & D q -> D (p & q)");
  const auto v = check_validity(law, *FrameClass::parse("i"), SearchConfig::exhaustive(2));
  REQUIRE_FALSE(v.valid());
  CHECK(v.witness->model.state_count() <= 2);
  CHECK(has_property(v.witness->model, FrameProperty::Intersection));
  CHECK_FALSE(testing::oracle::holds(v.witness->model, v.witness->state, law));
  // first one in search order
  CHECK(to_json(v.witness->model) == R"({"states":2,"neighborhoods":[[[0]],[]],"valuation":{"p":[1],"q":[0]}})");
  CHECK(v.witness->state == 0);
}

TEST_CASE("scope strings") {
  const auto v = check_validity(F("p | !p"), FrameClass::all(), SearchConfig::exhaustive(1));
  CHECK(v.scope == "exhaustive |S|<=1 (16 models)");
  SearchConfig cfg = SearchConfig::exhaustive(1);
  cfg.trials = 10;
  CHECK(check_validity(F("p | !p"), FrameClass::all(), cfg).scope ==
        "exhaustive |S|<=1 (16 models); random 10 models |S|=3 seed 1729");
  CHECK(check_validity(F("p"), FrameClass::all(), SearchConfig::exhaustive(0)).scope == "nothing searched");
}

TEST_CASE("search errors") {
  CHECK_THROWS_AS(check_validity(F("p"), FrameClass::all(), SearchConfig::exhaustive(4)), BoundExceededError);
  CHECK_THROWS_AS(check_validity(F("r"), FrameClass::all(), SearchConfig::exhaustive(1)), Error);
  CHECK_NOTHROW(check_validity(F("D top"), FrameClass::all(), SearchConfig::exhaustive(1)));
}

TEST_CASE("random phase is reproducible and respects the class") {
  SearchConfig cfg = SearchConfig::random(50, 4, 77);
  std::vector<std::string> first, second;
  for_each_model(FrameClass::quasi_filter(), cfg, [&](const NeighborhoodModel& m) {
    CHECK(m.state_count() == 4);
    CHECK(satisfies_class(m, FrameClass::quasi_filter()));
    first.push_back(to_json(m));
    return true;
  });
  for_each_model(FrameClass::quasi_filter(), cfg, [&](const NeighborhoodModel& m) {
    second.push_back(to_json(m));
    return second.size() < 10;
  });
  CHECK(first.size() == 50);
  CHECK(second.size() == 10);
  CHECK(std::equal(second.begin(), second.end(), first.begin()));
}

TEST_CASE("check_validity_all agrees with single checks") {
  std::vector<Formula> fs;
  for (auto& i : instances_over_pool(Schema::Conj, standard_pool())) fs.push_back(i.formula);
  SearchConfig cfg = SearchConfig::exhaustive(2);
  cfg.trials = 200;
  const auto all = check_validity_all(fs, FrameClass::all(), cfg);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto one = check_validity(fs[i], FrameClass::all(), cfg);
    CHECK(one.valid() == all[i].valid());
    CHECK(one.models_checked == all[i].models_checked);
  }
  const auto first = find_first_countermodel(fs, FrameClass::all(), cfg);
  REQUIRE(first.has_value());
  CHECK_FALSE(testing::oracle::holds(first->countermodel.model, first->countermodel.state, fs[first->index]));
}

TEST_CASE("axioms are sound on their classes") {
  for (SystemId id : kAllSystems) {
    const auto r = axiom_soundness_report(id, standard_pool(), SearchConfig::exhaustive(2));
    CAPTURE(to_string(id));
    CHECK(r.countermodels() == 0);
    CHECK(r.frame_class == system_spec(id).frame_class);
    CHECK_FALSE(r.results.empty());
  }
}

TEST_CASE("axioms fail outside their classes") {
  const auto pool = standard_pool();
  CHECK(schema_validity_report({Schema::Mono}, FrameClass::all(), pool, SearchConfig::exhaustive(2)).countermodels() > 0);
  CHECK(schema_validity_report({Schema::Unit}, FrameClass::all(), pool, SearchConfig::exhaustive(1)).countermodels() == 1);
  CHECK(schema_validity_report({Schema::Conj}, *FrameClass::parse("i"), pool, SearchConfig::exhaustive(2))
            .countermodels() > 0);
}

TEST_CASE("alternative axioms hold on their classes") {
  const auto pool = standard_pool();
  const auto mono = schema_validity_report({Schema::MonoAlt}, *FrameClass::parse("s"), pool, SearchConfig::exhaustive(2));
  CHECK(mono.results.size() == 216);
  CHECK(mono.countermodels() == 0);
  const auto conj = schema_validity_report({Schema::ConjAlt}, FrameClass::quasi_filter(), pool, SearchConfig::exhaustive(2));
  CHECK(conj.results.size() == 36);
  CHECK(conj.countermodels() == 0);
}

TEST_CASE("cube arrows") {
  const auto arrows = cube_arrows();
  CHECK(arrows.size() == 12);
  std::set<std::pair<SystemId, SystemId>> seen;
  for (const auto& a : arrows) {
    CHECK(system_includes(a.to, a.from));
    CHECK_FALSE(system_includes(a.from, a.to));
    CHECK(system_spec(a.to).has_axiom(a.added));
    CHECK_FALSE(system_spec(a.from).has_axiom(a.added));
    CHECK(system_spec(a.to).axioms.size() == system_spec(a.from).axioms.size() + 1);
    seen.insert({a.from, a.to});
  }
  CHECK(seen.size() == 12);
}

TEST_CASE("strict cube within two states has no witness for some arrows") {
  CubeConfig cfg;
  cfg.fallback_trials = 0;
  CHECK_THROWS_AS(cube_strictness(cfg), WitnessNotFoundError);
}

TEST_CASE("cube with fallback separates every arrow") {
  const auto witnesses = cube_strictness(CubeConfig{});
  REQUIRE(witnesses.size() == 12);
  for (const auto& w : witnesses) {
    CAPTURE(to_string(w.arrow.from));
    CAPTURE(to_string(w.arrow.to));
    CHECK(w.syntactic_inclusion);
    CHECK(satisfies_class(w.countermodel.model, w.frame_class));
    CHECK(match_schema(w.arrow.added, w.instance).has_value());
    CHECK_FALSE(testing::oracle::holds(w.countermodel.model, w.countermodel.state, w.instance));
    if (w.arrow.from == SystemId::R && w.arrow.to == SystemId::K) {
      CHECK(w.countermodel.model.state_count() == 1);
      CHECK(w.countermodel.model.neighborhood(0).empty());
    }
  }
}

TEST_CASE("noncontingency is valid on small intersection and complement frames") {
  // (i)&(c) families on at most three states are empty or subalgebras, which
  // validates the monotonicity schema there.
  std::vector<Formula> fs;
  for (auto& i : instances_over_pool(Schema::Mono, standard_pool())) fs.push_back(i.formula);
  CHECK_FALSE(find_first_countermodel(fs, *FrameClass::parse("i,c"), SearchConfig::exhaustive(2)).has_value());
}

TEST_CASE("almost definability schema") {
  const Formula f = almost_definability(F("q"), F("p"));
  CHECK(f == parse("Nb q -> ([] p <-> D p & D (q -> p))", Mode::Extended));
  const auto r = schema_validity_experiment(FrameClass::all(), standard_pool(), SearchConfig::exhaustive(2));
  CHECK(r.results.size() == 36);
  std::size_t countermodels = 0;
  for (const auto& v : r.results) {
    if (v.verdict.valid()) continue;
    ++countermodels;
    CHECK_FALSE(testing::oracle::holds(v.verdict.witness->model, v.verdict.witness->state, v.instance, true));
  }
  CHECK(countermodels > 0);
}

TEST_CASE("selected neighborhoods match a direct computation") {
  const Universe u = Universe::close({F("p"), F("q")}, 1);
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto m = random_model(3, {"p", "q"}, FrameClass::all(), trial_seed(4, t));
    for (int s = 0; s < 3; ++s) {
      std::set<StateSet> expected;
      for (const auto& phi : u.members()) {
        if (!testing::oracle::holds(m, s, delta(phi))) continue;
        for (const auto& psi : u.members())
          if (testing::oracle::holds(m, s, delta(implies(psi, phi))) && testing::oracle::holds(m, s, nabla(psi)))
            expected.insert(testing::oracle::extension(m, phi));
      }
      const auto got = selected_neighborhoods(m, s, u);
      CHECK(std::vector<StateSet>(expected.begin(), expected.end()) == got);
    }
  }
}

TEST_CASE("almost monotonicity experiment") {
  const Universe u = Universe::close({F("p"), F("q")}, 1);
  const auto r = almost_monotonicity_experiment(u, SearchConfig::exhaustive(2), 3);
  CHECK(r.models > 0);
  CHECK(r.states >= r.models);
  CHECK(r.found());
  CHECK(r.examples.size() == 3);
  CHECK(r.all_reverified);
  for (const auto& v : r.examples) {
    CHECK(v.reverified);
    CHECK(reverify_violation(v, u));
    auto broken = v;
    broken.psi = broken.phi;
    CHECK_FALSE(reverify_violation(broken, u));
  }
}

TEST_CASE("supplementation sweep") {
  SearchConfig cfg = SearchConfig::exhaustive(2);
  cfg.trials = 300;
  cfg.random_states = 4;
  const auto sweep = supplementation_sweep(cfg);
  CHECK(sweep.models == 16 * 16 * 16 + 4 * 4 + 300);
  CHECK(sweep.violations == 0);
  CHECK_FALSE(sweep.first_violation.has_value());
}

TEST_CASE("lambda sweep") {
  const Universe u = Universe::close({F("p"), F("q")}, 1);
  const auto sweep = lambda_equivalence_sweep(u, SearchConfig::exhaustive(2));
  CHECK(sweep.models > 0);
  CHECK(sweep.differences == 0);
  CHECK_FALSE(sweep.first_difference.has_value());
}
