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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cwb/cwb.h"

namespace {

struct Options {
  std::string model;
  std::string formula;
  std::string frame_class;
  std::string system;
  std::string axioms;
  std::string proof;
  std::string base = "p,q";
  std::string atoms;
  int state = -1;
  int max_states = 2;
  int random_states = 3;
  int depth = 1;
  uint64_t trials = 0;
  uint64_t seed = 0;
  bool json = false;
  bool extended = false;
  bool strict = false;
  bool list = false;
  bool atoms_given = false;
};

class Failure {
 public:
  Failure(cwb_status status, std::string message) : status(status), message(std::move(message)) {}
  cwb_status status;
  std::string message;
};

void check(cwb_status status) {
  if (status != CWB_OK) throw Failure(status, cwb_last_error());
}

struct ModelHandle {
  cwb_model* m = nullptr;
  ~ModelHandle() { cwb_model_free(m); }
};

struct FormulaHandle {
  cwb_formula* f = nullptr;
  ~FormulaHandle() { cwb_formula_free(f); }
};

cwb_search_options search_options(const Options& o) {
  cwb_search_options s;
  cwb_search_options_init(&s);
  s.max_states = o.max_states;
  s.trials = o.trials;
  s.random_states = o.random_states;
  s.seed = o.seed;
  s.atoms = o.atoms_given ? o.atoms.c_str() : nullptr;
  s.extended = o.extended ? 1 : 0;
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(CWB_ERR_IO, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int finish(cwb_report* r, const Options& o) {
  const int outcome = cwb_report_outcome(r);
  if (o.json)
    std::cout << cwb_report_json(r) << "\n";
  else
    std::cout << cwb_report_text(r);
  cwb_report_free(r);
  return outcome;
}

int run(const std::string& command, const Options& o) {
  cwb_report* r = nullptr;
  const cwb_search_options search = search_options(o);
  const char* cls = o.frame_class.empty() ? nullptr : o.frame_class.c_str();

  if (command == "check") {
    ModelHandle m;
    FormulaHandle f;
    check(cwb_model_load(o.model.c_str(), &m.m));
    check(cwb_formula_parse(o.formula.c_str(), o.extended, &f.f));
    check(cwb_check(m.m, f.f, o.state, o.extended, &r));
  } else if (command == "validity") {
    FormulaHandle f;
    check(cwb_formula_parse(o.formula.c_str(), o.extended, &f.f));
    check(cwb_validity(f.f, cls, &search, &r));
  } else if (command == "props") {
    ModelHandle m;
    check(cwb_model_load(o.model.c_str(), &m.m));
    check(cwb_props(m.m, &r));
  } else if (command == "supplement") {
    if (o.model.empty()) {
      check(cwb_supplement_sweep(&search, &r));
    } else {
      ModelHandle m;
      check(cwb_model_load(o.model.c_str(), &m.m));
      check(cwb_supplement_report(m.m, &r));
    }
  } else if (command == "prove") {
    check(cwb_prove(o.system.c_str(), slurp(o.proof).c_str(), &r));
  } else if (command == "soundness") {
    if (!o.axioms.empty())
      check(cwb_schema_soundness(o.axioms.c_str(), cls, &search, &r));
    else if (!o.system.empty())
      check(cwb_soundness(o.system.c_str(), &search, &r));
    else
      throw Failure(CWB_ERR_INVALID_ARGUMENT, "soundness needs --system or --axioms");
  } else if (command == "cube") {
    check(cwb_cube(&search, o.strict, &r));
  } else if (command == "lambda-eq") {
    if (o.model.empty()) {
      check(cwb_lambda_eq_sweep(o.base.c_str(), o.depth, &search, &r));
    } else {
      ModelHandle m;
      check(cwb_model_load(o.model.c_str(), &m.m));
      check(cwb_lambda_eq_model(m.m, o.base.c_str(), o.depth, &r));
    }
  } else if (command == "schema-exp") {
    check(cwb_schema_experiment(cls, &search, &r));
  } else if (command == "monotone-exp") {
    check(cwb_monotone_experiment(o.base.c_str(), o.depth, &search, &r));
  } else if (command == "enumerate") {
    check(cwb_enumerate(cls, &search, o.list, &r));
  }
  return finish(r, o);
}

void add_search(CLI::App* sub, Options& o) {
  sub->add_option("--max-states", o.max_states, "exhaustive bound on |S| (0..3; 0 skips)")->capture_default_str();
  sub->add_option("--trials", o.trials, "random models after the exhaustive phase")->capture_default_str();
  sub->add_option("--random-states", o.random_states, "|S| of the random models")->capture_default_str();
  sub->add_option("--seed", o.seed, "seed of the random phase")->capture_default_str();
  sub->add_option_function<std::string>(
      "--atoms",
      [&o](const std::string& v) {
        o.atoms = v;
        o.atoms_given = true;
      },
      "comma separated atoms of the valuation");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  {
    cwb_search_options defaults;
    cwb_search_options_init(&defaults);
    o.seed = defaults.seed;
  }

  CLI::App app{"Contingency workbench: neighborhood models for contingency logic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");
  app.add_flag("--json", o.json, "print the JSON report")->configurable(false);

  auto* check_cmd = app.add_subcommand("check", "truth of a formula in a model");
  check_cmd->add_option("--model", o.model, "model JSON file")->required();
  check_cmd->add_option("--formula", o.formula, "formula")->required();
  check_cmd->add_option("--state", o.state, "state; omitted prints the truth set");

  auto* validity = app.add_subcommand("validity", "bounded validity on a frame class");
  validity->add_option("--formula", o.formula, "formula")->required();
  validity->add_option("--class", o.frame_class, "frame class")->capture_default_str();
  add_search(validity, o);

  auto* props = app.add_subcommand("props", "frame properties of a model");
  props->add_option("--model", o.model, "model JSON file")->required();

  auto* supplement = app.add_subcommand("supplement", "supplementation of a model, or its laws over a search");
  supplement->add_option("--model", o.model, "model JSON file");
  add_search(supplement, o);

  auto* prove = app.add_subcommand("prove", "check a derivation");
  prove->add_option("--system", o.system, "E, EC, EN, ECN, M, R, EMN or K")->required();
  prove->add_option("--proof", o.proof, "derivation file")->required();

  auto* soundness = app.add_subcommand("soundness", "axiom instances over the standard pool");
  soundness->add_option("--system", o.system, "system whose axioms and class are checked");
  soundness->add_option("--axioms", o.axioms, "comma separated schemas (EQU, M, C, N, M', C')");
  soundness->add_option("--class", o.frame_class, "frame class for --axioms");
  add_search(soundness, o);

  auto* cube = app.add_subcommand("cube", "separation witnesses for the 12 cube arrows");
  cube->add_flag("--strict", o.strict, "no fallback beyond --max-states");
  add_search(cube, o);

  auto* lambda = app.add_subcommand("lambda-eq", "compare the two canonical neighborhood functions");
  lambda->add_option("--model", o.model, "model JSON file; omitted sweeps the search");
  lambda->add_option("--base", o.base, "comma separated universe base")->capture_default_str();
  lambda->add_option("--depth", o.depth, "disjunction closure depth (0..2)")->capture_default_str();
  add_search(lambda, o);

  auto* schema = app.add_subcommand("schema-exp", "almost-definability schema in extended mode");
  schema->add_option("--class", o.frame_class, "frame class");
  add_search(schema, o);

  auto* monotone = app.add_subcommand("monotone-exp", "almost-monotonicity of the selected neighborhoods");
  monotone->add_option("--base", o.base, "comma separated universe base")->capture_default_str();
  monotone->add_option("--depth", o.depth, "disjunction closure depth (0..2)")->capture_default_str();
  add_search(monotone, o);

  auto* enumerate = app.add_subcommand("enumerate", "count the models of a class");
  enumerate->add_option("--class", o.frame_class, "frame class");
  enumerate->add_flag("--list", o.list, "print every model");
  add_search(enumerate, o);

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", o.json, "print the JSON report");
    sub->add_flag("--extended", o.extended, "allow [] (evidence only)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Failure& f) {
    std::cerr << "error: " << cwb_status_name(f.status) << ": " << f.message << "\n";
    return f.status == CWB_ERR_WITNESS_NOT_FOUND ? 1 : 2;
  }
}
