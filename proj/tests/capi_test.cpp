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

#include <cstring>
#include <string>

#include <json.hpp>

#include "cwb/cwb.h"

namespace {

std::string data_path(const char* name) { return std::string(CWB_TEST_DATA_DIR) + "/" + name; }
std::string fixture(const char* name) { return std::string(CWB_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  std::fclose(f);
  return out;
}

cwb_formula* parse_ok(const char* text, int extended = 0) {
  cwb_formula* f = nullptr;
  REQUIRE(cwb_formula_parse(text, extended, &f) == CWB_OK);
  REQUIRE(f != nullptr);
  return f;
}

nlohmann::json report_json(cwb_report* r) { return nlohmann::json::parse(cwb_report_json(r)); }

cwb_search_options small_search() {
  cwb_search_options o;
  cwb_search_options_init(&o);
  return o;
}

}  // namespace

TEST_CASE("defaults") {
  cwb_search_options o;
  cwb_search_options_init(&o);
  CHECK(o.min_states == 1);
  CHECK(o.max_states == 2);
  CHECK(o.trials == 0);
  CHECK(o.random_states == 3);
  CHECK(o.seed == 1729);
  CHECK(o.atoms == nullptr);
  CHECK(o.extended == 0);
  CHECK(std::strcmp(cwb_status_name(CWB_ERR_SYNTAX), "syntax error") == 0);
  CHECK(std::strcmp(cwb_status_name(CWB_OK), "ok") == 0);
}

TEST_CASE("formula handles") {
  cwb_formula* f = parse_ok("p -> p | q");
  char* text = nullptr;
  REQUIRE(cwb_formula_render(f, &text) == CWB_OK);
  CHECK(std::string(text) == "!(p & !(!(!p & !q)))");
  cwb_string_free(text);
  int taut = -1;
  REQUIRE(cwb_formula_is_tautology(f, &taut) == CWB_OK);
  CHECK(taut == 1);
  cwb_formula_free(f);
  cwb_formula_free(nullptr);
}

TEST_CASE("parse error codes") {
  cwb_formula* f = nullptr;
  CHECK(cwb_formula_parse("p &", 0, &f) == CWB_ERR_SYNTAX);
  CHECK(f == nullptr);
  CHECK(std::string(cwb_last_error()).find("column") != std::string::npos);
  CHECK(cwb_formula_parse("[] p", 0, &f) == CWB_ERR_BOX_NOT_ALLOWED);
  CHECK(cwb_formula_parse("_t", 0, &f) == CWB_ERR_RESERVED_ATOM);
  CHECK(cwb_formula_parse(nullptr, 0, &f) == CWB_ERR_INVALID_ARGUMENT);
  CHECK(cwb_formula_parse("p", 0, nullptr) == CWB_ERR_INVALID_ARGUMENT);
  REQUIRE(cwb_formula_parse("[] p", 1, &f) == CWB_OK);
  cwb_formula_free(f);
}

TEST_CASE("model handles") {
  cwb_model* m = nullptr;
  REQUIRE(cwb_model_load(data_path("two_state.json").c_str(), &m) == CWB_OK);
  CHECK(cwb_model_state_count(m) == 2);
  int yes = -1;
  REQUIRE(cwb_model_has_property(m, 'i', &yes) == CWB_OK);
  CHECK(yes == 1);
  REQUIRE(cwb_model_has_property(m, 'n', &yes) == CWB_OK);
  CHECK(yes == 0);
  CHECK(cwb_model_has_property(m, 'x', &yes) == CWB_ERR_INVALID_ARGUMENT);
  REQUIRE(cwb_model_satisfies_class(m, "i,c", &yes) == CWB_OK);
  CHECK(yes == 0);
  CHECK(cwb_model_satisfies_class(m, "bogus", &yes) == CWB_ERR_INVALID_ARGUMENT);

  char* json = nullptr;
  REQUIRE(cwb_model_to_json(m, &json) == CWB_OK);
  CHECK(nlohmann::json::parse(json) == nlohmann::json::parse(slurp(data_path("two_state.json"))));
  cwb_string_free(json);

  cwb_model* plus = nullptr;
  REQUIRE(cwb_model_supplement(m, &plus) == CWB_OK);
  REQUIRE(cwb_model_has_property(plus, 's', &yes) == CWB_OK);
  CHECK(yes == 1);
  cwb_model_free(plus);
  cwb_model_free(m);

  CHECK(cwb_model_from_json("{\"states\":0}", &m) == CWB_ERR_INVALID_MODEL);
  CHECK(cwb_model_load("/nonexistent/model.json", &m) == CWB_ERR_IO);
}

TEST_CASE("random models") {
  cwb_model* a = nullptr;
  cwb_model* b = nullptr;
  REQUIRE(cwb_random_model(5, "p,q", "filter", 9, &a) == CWB_OK);
  REQUIRE(cwb_random_model(5, "p,q", "filter", 9, &b) == CWB_OK);
  char* ja = nullptr;
  char* jb = nullptr;
  cwb_model_to_json(a, &ja);
  cwb_model_to_json(b, &jb);
  CHECK(std::string(ja) == jb);
  int yes = 0;
  cwb_model_satisfies_class(a, "filter", &yes);
  CHECK(yes == 1);
  cwb_string_free(ja);
  cwb_string_free(jb);
  cwb_model_free(a);
  cwb_model_free(b);
  CHECK(cwb_random_model(17, "p", nullptr, 1, &a) == CWB_ERR_BOUND_EXCEEDED);
}

TEST_CASE("evaluation") {
  cwb_model* m = nullptr;
  REQUIRE(cwb_model_load(data_path("two_state.json").c_str(), &m) == CWB_OK);
  cwb_formula* f = parse_ok("D p & D q -> D (p & q)");
  uint32_t set = 0;
  REQUIRE(cwb_truth_set(m, f, 0, &set) == CWB_OK);
  CHECK(set == 0b10);
  int holds = -1;
  REQUIRE(cwb_holds_at(m, 0, f, 0, &holds) == CWB_OK);
  CHECK(holds == 0);
  CHECK(cwb_holds_at(m, 5, f, 0, &holds) == CWB_ERR_INVALID_ARGUMENT);
  cwb_formula* r = parse_ok("r");
  CHECK(cwb_truth_set(m, r, 0, &set) == CWB_ERR_UNKNOWN_ATOM);
  cwb_formula* b = parse_ok("[] p", 1);
  CHECK(cwb_truth_set(m, b, 0, &set) == CWB_ERR_BOX_NOT_ALLOWED);
  CHECK(cwb_truth_set(m, b, 1, &set) == CWB_OK);
  cwb_formula_free(b);
  cwb_formula_free(r);
  cwb_formula_free(f);
  cwb_model_free(m);
}

TEST_CASE("check report") {
  cwb_model* m = nullptr;
  REQUIRE(cwb_model_load(data_path("two_state.json").c_str(), &m) == CWB_OK);
  cwb_formula* f = parse_ok("D p");
  cwb_report* r = nullptr;
  REQUIRE(cwb_check(m, f, 0, 0, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  CHECK(std::string(cwb_report_text(r)).size() > 0);
  cwb_report_free(r);
  REQUIRE(cwb_check(m, f, 1, 0, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  CHECK(std::string(cwb_report_text(r)) == "false\n");
  cwb_report_free(r);
  CHECK(cwb_check(m, f, 2, 0, &r) == CWB_ERR_INVALID_ARGUMENT);
  REQUIRE(cwb_check(m, f, -1, 0, &r) == CWB_OK);
  cwb_report_free(r);
  cwb_formula_free(f);
  cwb_model_free(m);
}

TEST_CASE("validity reports") {
  cwb_search_options o = small_search();
  cwb_formula* f = parse_ok("D p & D q -> D (p & q)");
  cwb_report* r = nullptr;
  REQUIRE(cwb_validity(f, "i", &o, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 1);
  auto j = report_json(r);
  CHECK(j["verdict"] == "countermodel");
  CHECK(j["class"] == "i");
  CHECK(j["witness"]["states"].get<int>() <= 2);
  cwb_report_free(r);

  REQUIRE(cwb_validity(f, "filter", &o, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  CHECK(report_json(r)["verdict"] == "valid");
  cwb_report_free(r);

  CHECK(cwb_validity(f, "nope", &o, &r) == CWB_ERR_INVALID_ARGUMENT);
  o.max_states = 4;
  CHECK(cwb_validity(f, "all", &o, &r) == CWB_ERR_BOUND_EXCEEDED);
  o = small_search();
  o.atoms = "p";
  CHECK(cwb_validity(f, "all", &o, &r) != CWB_OK);
  cwb_formula_free(f);
}

TEST_CASE("extended validity carries a note") {
  cwb_search_options o = small_search();
  o.extended = 1;
  cwb_formula* f = parse_ok("[] p -> D p", 1);
  cwb_report* r = nullptr;
  REQUIRE(cwb_validity(f, "all", &o, &r) == CWB_OK);
  CHECK(report_json(r).contains("note"));
  cwb_report_free(r);
  cwb_formula_free(f);
}

TEST_CASE("props and supplement") {
  cwb_model* m = nullptr;
  REQUIRE(cwb_model_load(data_path("two_state.json").c_str(), &m) == CWB_OK);
  cwb_report* r = nullptr;
  REQUIRE(cwb_props(m, &r) == CWB_OK);
  CHECK(std::string(cwb_report_json(r)).find("\"i\"") != std::string::npos);
  cwb_report_free(r);
  REQUIRE(cwb_supplement_report(m, &r) == CWB_OK);
  cwb_report_free(r);
  cwb_model_free(m);

  cwb_search_options o = small_search();
  o.max_states = 1;
  REQUIRE(cwb_supplement_sweep(&o, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  cwb_report_free(r);
}

TEST_CASE("prove") {
  const std::string text = slurp(fixture("mono_alt.drv"));
  cwb_report* r = nullptr;
  REQUIRE(cwb_prove("M", text.c_str(), &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  cwb_report_free(r);
  REQUIRE(cwb_prove("E", text.c_str(), &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 1);
  auto j = report_json(r);
  CHECK(j.dump().find("AxiomNotInSystem") != std::string::npos);
  cwb_report_free(r);
  CHECK(cwb_prove("S4", text.c_str(), &r) == CWB_ERR_INVALID_ARGUMENT);
  CHECK(cwb_prove("M", "1. p ; nonsense", &r) == CWB_ERR_INVALID_DERIVATION);
}

TEST_CASE("soundness and schemas") {
  cwb_search_options o = small_search();
  o.max_states = 1;
  cwb_report* r = nullptr;
  REQUIRE(cwb_soundness("K", &o, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  cwb_report_free(r);
  REQUIRE(cwb_schema_soundness("M'", "s", &o, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  cwb_report_free(r);
  REQUIRE(cwb_schema_soundness("N", "all", &o, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 1);
  cwb_report_free(r);
  CHECK(cwb_schema_soundness("X", "all", &o, &r) == CWB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cube") {
  cwb_search_options o = small_search();
  cwb_report* r = nullptr;
  CHECK(cwb_cube(&o, 1, &r) == CWB_ERR_WITNESS_NOT_FOUND);
  CHECK(std::string(cwb_last_error()).find("->") != std::string::npos);
}

TEST_CASE("lambda, experiments and enumeration") {
  cwb_search_options o = small_search();
  o.max_states = 1;
  cwb_report* r = nullptr;
  REQUIRE(cwb_lambda_eq_sweep("p,q", 1, &o, &r) == CWB_OK);
  CHECK(cwb_report_outcome(r) == 0);
  cwb_report_free(r);

  cwb_model* m = nullptr;
  REQUIRE(cwb_model_load(data_path("two_state.json").c_str(), &m) == CWB_OK);
  REQUIRE(cwb_lambda_eq_model(m, "p,q", 1, &r) == CWB_OK);
  CHECK(report_json(r).is_array());
  cwb_report_free(r);
  CHECK(cwb_lambda_eq_model(m, "p,q", 3, &r) != CWB_OK);
  CHECK(cwb_lambda_eq_model(m, "p &", 1, &r) == CWB_ERR_SYNTAX);
  cwb_model_free(m);

  REQUIRE(cwb_schema_experiment("all", &o, &r) == CWB_OK);
  cwb_report_free(r);
  o.max_states = 2;
  REQUIRE(cwb_monotone_experiment("p,q", 1, &o, &r) == CWB_OK);
  CHECK(report_json(r)["verdict"] == "violation-found");
  cwb_report_free(r);

  o.max_states = 1;
  o.atoms = "p";
  REQUIRE(cwb_enumerate("all", &o, 1, &r) == CWB_OK);
  CHECK(std::string(cwb_report_json(r)).find("8") != std::string::npos);
  cwb_report_free(r);
  o.atoms = "";
  o.max_states = 2;
  REQUIRE(cwb_enumerate(nullptr, &o, 0, &r) == CWB_OK);
  CHECK(std::string(cwb_report_json(r)).find("256") != std::string::npos);
  cwb_report_free(r);
}
