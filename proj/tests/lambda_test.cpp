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

#include <algorithm>
#include <set>

#include "cwb/errors.hpp"
#include "cwb/lambda.hpp"
#include "cwb/search.hpp"
#include "test_support.hpp"

using namespace cwb;

namespace {

Formula F(const char* text) { return parse(text); }

bool member(const std::vector<Formula>& xs, const Formula& f) { return std::find(xs.begin(), xs.end(), f) != xs.end(); }

// lambda_K and lambda_H straight from their definitions, by the oracle.
std::vector<Formula> oracle_kuhn(const NeighborhoodModel& m, int s, const std::vector<Formula>& u) {
  std::vector<Formula> out;
  for (const auto& phi : u) {
    bool all = true;
    for (const auto& psi : u) all = all && testing::oracle::holds(m, s, delta(disj(phi, psi)));
    if (all) out.push_back(phi);
  }
  return out;
}

std::vector<Formula> oracle_humberstone(const NeighborhoodModel& m, int s, const std::vector<Formula>& u,
                                        bool simplified) {
  std::vector<Formula> out;
  for (const auto& phi : u) {
    bool ok = simplified || testing::oracle::holds(m, s, delta(phi));
    for (const auto& psi : u)
      if (testing::oracle::tautology(implies(phi, psi))) ok = ok && testing::oracle::holds(m, s, delta(psi));
    if (ok) out.push_back(phi);
  }
  return out;
}

}  // namespace

TEST_CASE("derives is bounded tautological implication") {
  CHECK(derives(F("p"), F("p | q")));
  CHECK(derives(F("p & q"), F("q")));
  CHECK_FALSE(derives(F("p | q"), F("p")));
  CHECK(derives(F("D p"), F("D p | q")));
  CHECK_FALSE(derives(F("D p"), F("D (p | p)")));
}

TEST_CASE("universe closure") {
  const Universe u0 = Universe::close({F("p"), F("q")}, 0);
  CHECK(u0.size() == 2);
  const Universe single = Universe::close({F("p")}, 1);
  CHECK(single.members() == std::vector<Formula>{F("p"), F("p | p")});

  const Universe u1 = Universe::close({F("p"), F("q")}, 1);
  CHECK(u1.size() == 6);
  for (const char* want : {"p", "q", "p | q", "q | p", "p | p", "q | q"}) CHECK(u1.index_of(F(want)).has_value());
  CHECK(u1.members()[0] == F("p"));
  CHECK(u1.members()[1] == F("q"));
  CHECK(u1.depth() == 1);
  CHECK(u1.base().size() == 2);

  const Universe u2 = Universe::close({F("p"), F("q")}, 2);
  CHECK(u2.size() == 38);
  std::set<std::string> texts;
  for (const auto& f : u2.members()) texts.insert(render(f));
  CHECK(texts.size() == u2.size());
  for (const auto& a : u1.members())
    for (const auto& b : u1.members()) CHECK(u2.index_of(disj(a, b)).has_value());

  CHECK_THROWS_AS(Universe::close({}, 1), Error);
  CHECK_THROWS_AS(Universe::close({F("p")}, 3), Error);
  CHECK_THROWS_AS(Universe::from_members({}), Error);
  CHECK_FALSE(u1.index_of(F("p & q")).has_value());
}

TEST_CASE("precomputed implication table") {
  const Universe u = Universe::close({F("p"), F("q")}, 1);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      CHECK(u.derives(i, j) == testing::oracle::tautology(implies(u.members()[i], u.members()[j])));
}

TEST_CASE("theory sets are the truths at a state") {
  const auto m = testing::make_model(2, {{0b01}, {0b11}}, {{"p", 0b01}, {"q", 0b10}});
  const Universe u = Universe::close({F("p"), F("q")}, 1);
  const TheorySet x(m, 0, u);
  CHECK(x.state() == 0);
  CHECK(x.contains(F("p")));
  CHECK_FALSE(x.contains(F("q")));
  CHECK(x.contains(F("D p")));
  CHECK(x.contains(F("D (p & !q) & p")));
  for (const auto& f : x.materialized()) CHECK(testing::oracle::holds(m, 0, f));
  CHECK_THROWS_AS(TheorySet(m, 2, u), ModelError);
}

TEST_CASE("lambda functions match their definitions") {
  for (int depth : {0, 1}) {
    const Universe u = Universe::close({F("p"), F("q")}, depth);
    for (std::uint64_t t = 0; t < 150; ++t) {
      const auto m = random_model(1 + static_cast<int>(t % 3), {"p", "q"}, FrameClass::all(), trial_seed(17, t));
      for (int s = 0; s < m.state_count(); ++s) {
        const TheorySet x(m, s, u);
        CHECK(lambda_kuhn(x, u) == oracle_kuhn(m, s, u.members()));
        CHECK(lambda_humberstone(x, u, HumberstoneVariant::Original) == oracle_humberstone(m, s, u.members(), false));
        CHECK(lambda_humberstone(x, u, HumberstoneVariant::Simplified) == oracle_humberstone(m, s, u.members(), true));
      }
    }
  }
}

TEST_CASE("the two lambdas agree on disjunction closed universes") {
  const Universe u = Universe::close({F("p"), F("q")}, 1);
  for (int n = 1; n <= 2; ++n) {
    ModelEnumerator e(n, {"p", "q"}, FrameClass::all());
    while (auto m = e.next())
      for (const auto& c : compare_lambdas(*m, u)) {
        CHECK(c.equal);
        CHECK(c.differences.empty());
        CHECK(c.lambda_k == c.lambda_h);
        CHECK(c.universe_size == u.size());
      }
  }
}

TEST_CASE("kuhn selections are contained in the humberstone ones") {
  testing::FormulaGen gen(41);
  for (std::uint64_t t = 0; t < 200; ++t) {
    std::vector<Formula> members;
    for (int k = 0; k < 4; ++k) members.push_back(gen.skeleton_formula(2));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::string> atoms{"p", "q", "r", "s"};
    const Universe u = Universe::from_members(members);
    const auto m = random_model(3, atoms, FrameClass::all(), trial_seed(23, t));
    for (int s = 0; s < 3; ++s) {
      const TheorySet x(m, s, u);
      const auto k = lambda_kuhn(x, u);
      const auto h = lambda_humberstone(x, u, HumberstoneVariant::Simplified);
      for (const auto& phi : k) CHECK(member(h, phi));
    }
  }
}

TEST_CASE("differences are explained") {
  // an unclosed universe lets the two sides disagree
  const Universe u = Universe::from_members({F("p"), F("q")});
  bool found = false;
  for (std::uint64_t t = 0; t < 500 && !found; ++t) {
    const auto m = random_model(2, {"p", "q"}, FrameClass::all(), trial_seed(37, t));
    for (const auto& c : compare_lambdas(m, u)) {
      if (c.equal) continue;
      found = true;
      REQUIRE_FALSE(c.differences.empty());
      for (const auto& d : c.differences) {
        CHECK(u.index_of(d.phi).has_value());
        CHECK_FALSE(d.description.empty());
        CHECK(member(c.lambda_h, d.phi) != member(c.lambda_k, d.phi));
      }
    }
  }
  CHECK(found);
}

TEST_CASE("kuhn selections are monotone on closed universes") {
  const Universe u = Universe::close({F("p"), F("q")}, 1);
  for (std::uint64_t t = 0; t < 300; ++t) {
    const auto m = random_model(3, {"p", "q"}, FrameClass::all(), trial_seed(29, t));
    for (int s = 0; s < 3; ++s) CHECK(kuhn_monotonicity_failures(TheorySet(m, s, u), u).empty());
  }
}

TEST_CASE("kuhn monotonicity failures match the definition") {
  const Universe u = Universe::from_members({F("p"), F("q"), F("p & q")});
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto m = random_model(2, {"p", "q"}, FrameClass::all(), trial_seed(31, t));
    for (int s = 0; s < 2; ++s) {
      const TheorySet x(m, s, u);
      const auto k = lambda_kuhn(x, u);
      std::set<std::pair<std::string, std::string>> expected;
      for (const auto& phi : u.members())
        for (const auto& psi : u.members()) {
          const StateSet a = testing::oracle::extension(m, phi), b = testing::oracle::extension(m, psi);
          if (member(k, phi) && (a & ~b) == 0 && !member(k, psi)) expected.insert({render(phi), render(psi)});
        }
      std::set<std::pair<std::string, std::string>> got;
      for (const auto& [phi, psi] : kuhn_monotonicity_failures(x, u)) got.insert({render(phi), render(psi)});
      CHECK(got == expected);
    }
  }
}

TEST_CASE("lambda sweep over random three state models at depth two") {
  const Universe u = Universe::close({F("p"), F("q")}, 2);
  const auto sweep = lambda_equivalence_sweep(u, SearchConfig::random(40, 3, 3));
  CHECK(sweep.models == 40);
  CHECK(sweep.states == 120);
  CHECK(sweep.differences == 0);
}

TEST_CASE("kuhn selection on a two state filter") {
  const auto m = testing::uniform_model(2, {0b01, 0b11}, {{"p", 0b01}});
  const Universe u = Universe::close({F("p")}, 1);
  const TheorySet x(m, 0, u);
  for (const auto& psi : u.members()) CHECK(testing::oracle::holds(m, 0, delta(disj(F("p"), psi))));
  CHECK(member(lambda_kuhn(x, u), F("p")));
}
