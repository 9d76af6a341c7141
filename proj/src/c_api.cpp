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

#include "cwb/cwb.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cwb/errors.hpp"
#include "cwb/formula.hpp"
#include "cwb/lambda.hpp"
#include "cwb/model.hpp"
#include "cwb/proofs.hpp"
#include "cwb/report.hpp"
#include "cwb/search.hpp"
#include "cwb/semantics.hpp"

struct cwb_formula {
  cwb::Formula f;
  cwb::Mode mode;
};

struct cwb_model {
  cwb::NeighborhoodModel m;
};

struct cwb_report {
  cwb::Report r;
};

namespace {

thread_local std::string last_error;

class ArgumentError : public cwb::Error {
 public:
  using cwb::Error::Error;
};

class IoError : public cwb::Error {
 public:
  using cwb::Error::Error;
};

cwb_status fail(cwb_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Body>
cwb_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return CWB_OK;
  } catch (const cwb::ParseError& e) {
    switch (e.kind()) {
      case cwb::ParseError::Kind::BoxNotAllowed:
        return fail(CWB_ERR_BOX_NOT_ALLOWED, e.what());
      case cwb::ParseError::Kind::ReservedAtom:
        return fail(CWB_ERR_RESERVED_ATOM, e.what());
      default:
        return fail(CWB_ERR_SYNTAX, e.what());
    }
  } catch (const cwb::BoxNotAllowedError& e) {
    return fail(CWB_ERR_BOX_NOT_ALLOWED, e.what());
  } catch (const cwb::UnknownAtomError& e) {
    return fail(CWB_ERR_UNKNOWN_ATOM, e.what());
  } catch (const cwb::TooManyAtomsError& e) {
    return fail(CWB_ERR_TOO_MANY_ATOMS, e.what());
  } catch (const cwb::BoundExceededError& e) {
    return fail(CWB_ERR_BOUND_EXCEEDED, e.what());
  } catch (const cwb::ModelError& e) {
    return fail(CWB_ERR_INVALID_MODEL, e.what());
  } catch (const cwb::DerivationFormatError& e) {
    return fail(CWB_ERR_INVALID_DERIVATION, e.what());
  } catch (const cwb::WitnessNotFoundError& e) {
    return fail(CWB_ERR_WITNESS_NOT_FOUND, e.what());
  } catch (const ArgumentError& e) {
    return fail(CWB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const IoError& e) {
    return fail(CWB_ERR_IO, e.what());
  } catch (const cwb::Error& e) {
    return fail(CWB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CWB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CWB_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_csv(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

cwb::FrameClass frame_class(const char* text) {
  if (text == nullptr || *text == '\0') return cwb::FrameClass::all();
  auto spec = cwb::FrameClass::parse(text);
  if (!spec) throw ArgumentError(std::string("unknown frame class '") + text + "'");
  return *spec;
}

cwb::SystemId system_id(const char* text) {
  require(text, "system");
  auto id = cwb::parse_system(text);
  if (!id) throw ArgumentError(std::string("unknown system '") + text + "'");
  return *id;
}

std::vector<std::string> merge_atoms(const std::vector<cwb::Formula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs)
    for (auto& a : cwb::atoms_of(f))
      if (a != cwb::kTopAtom && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  if (out.empty()) out.push_back("p");
  return out;
}

// Atoms from the options, or `fallback` when opts->atoms is NULL.
cwb::SearchConfig search_config(const cwb_search_options* opts, std::vector<std::string> fallback) {
  cwb_search_options defaults;
  cwb_search_options_init(&defaults);
  const cwb_search_options& o = opts != nullptr ? *opts : defaults;
  if (o.max_states < 0) throw ArgumentError("max-states must be nonnegative");
  if (o.max_states > cwb::kMaxExhaustiveStates)
    throw cwb::BoundExceededError("exhaustive search is limited to " + std::to_string(cwb::kMaxExhaustiveStates) +
                                  " states");
  if (o.trials > 0 && (o.random_states < 1 || o.random_states > cwb::kMaxStates))
    throw cwb::BoundExceededError("random models need 1.." + std::to_string(cwb::kMaxStates) + " states");
  cwb::SearchConfig cfg;
  cfg.min_states = o.min_states < 1 ? 1 : o.min_states;
  cfg.max_states = o.max_states;
  cfg.trials = o.trials;
  cfg.random_states = o.random_states;
  cfg.seed = o.seed;
  cfg.mode = o.extended ? cwb::Mode::Extended : cwb::Mode::Core;
  cfg.atoms = o.atoms == nullptr ? std::move(fallback) : split_csv(o.atoms);
  return cfg;
}

std::vector<cwb::Formula> parse_list(const char* text) {
  std::vector<cwb::Formula> out;
  for (const auto& item : split_csv(text)) out.push_back(cwb::parse(item, cwb::Mode::Core));
  if (out.empty()) throw ArgumentError("formula list must be nonempty");
  return out;
}

cwb_status emit(cwb_report** out, const std::function<cwb::Report()>& make) {
  return guarded([&] {
    require(out, "out");
    auto r = std::make_unique<cwb_report>(cwb_report{make()});
    *out = r.release();
  });
}

std::string read_file(const char* path) {
  require(path, "path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

extern "C" {

void cwb_search_options_init(cwb_search_options* opts) {
  if (opts == nullptr) return;
  opts->min_states = 1;
  opts->max_states = 2;
  opts->trials = 0;
  opts->random_states = 3;
  opts->seed = cwb::kDefaultSeed;
  opts->atoms = nullptr;
  opts->extended = 0;
}

const char* cwb_last_error(void) { return last_error.c_str(); }

const char* cwb_status_name(cwb_status status) {
  switch (status) {
    case CWB_OK: return "ok";
    case CWB_ERR_SYNTAX: return "syntax error";
    case CWB_ERR_BOX_NOT_ALLOWED: return "box not allowed";
    case CWB_ERR_RESERVED_ATOM: return "reserved atom";
    case CWB_ERR_UNKNOWN_ATOM: return "unknown atom";
    case CWB_ERR_TOO_MANY_ATOMS: return "too many atoms";
    case CWB_ERR_BOUND_EXCEEDED: return "bound exceeded";
    case CWB_ERR_INVALID_MODEL: return "invalid model";
    case CWB_ERR_INVALID_DERIVATION: return "invalid derivation";
    case CWB_ERR_WITNESS_NOT_FOUND: return "witness not found";
    case CWB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CWB_ERR_IO: return "i/o error";
    case CWB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void cwb_string_free(char* s) { std::free(s); }

cwb_status cwb_formula_parse(const char* text, int extended, cwb_formula** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const cwb::Mode mode = extended ? cwb::Mode::Extended : cwb::Mode::Core;
    *out = new cwb_formula{cwb::parse(text, mode), mode};
  });
}

void cwb_formula_free(cwb_formula* f) { delete f; }

cwb_status cwb_formula_render(const cwb_formula* f, char** out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "out");
    *out = copy_string(cwb::render(f->f));
  });
}

cwb_status cwb_formula_is_tautology(const cwb_formula* f, int* out) {
  return guarded([&] {
    require(f, "formula");
    require(out, "out");
    *out = cwb::is_tautology(f->f) ? 1 : 0;
  });
}

cwb_status cwb_model_from_json(const char* json, cwb_model** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new cwb_model{cwb::model_from_json(json)};
  });
}

cwb_status cwb_model_load(const char* path, cwb_model** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cwb_model{cwb::model_from_json(read_file(path))};
  });
}

void cwb_model_free(cwb_model* m) { delete m; }

cwb_status cwb_model_to_json(const cwb_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = copy_string(cwb::to_json(m->m));
  });
}

int cwb_model_state_count(const cwb_model* m) { return m == nullptr ? 0 : m->m.state_count(); }

cwb_status cwb_model_has_property(const cwb_model* m, char letter, int* out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    auto p = cwb::property_from_letter(letter);
    if (!p) throw ArgumentError(std::string("unknown frame property '") + letter + "'");
    *out = cwb::has_property(m->m, *p) ? 1 : 0;
  });
}

cwb_status cwb_model_satisfies_class(const cwb_model* m, const char* cls, int* out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = cwb::satisfies_class(m->m, frame_class(cls)) ? 1 : 0;
  });
}

cwb_status cwb_model_supplement(const cwb_model* m, cwb_model** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = new cwb_model{cwb::supplementation(m->m)};
  });
}

cwb_status cwb_random_model(int states, const char* atoms, const char* cls, uint64_t seed, cwb_model** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cwb_model{cwb::random_model(states, split_csv(atoms), frame_class(cls), seed)};
  });
}

cwb_status cwb_truth_set(const cwb_model* m, const cwb_formula* f, int extended, uint32_t* out) {
  return guarded([&] {
    require(m, "model");
    require(f, "formula");
    require(out, "out");
    *out = cwb::truth_set(m->m, f->f, extended ? cwb::Mode::Extended : cwb::Mode::Core);
  });
}

cwb_status cwb_holds_at(const cwb_model* m, int state, const cwb_formula* f, int extended, int* out) {
  return guarded([&] {
    require(m, "model");
    require(f, "formula");
    require(out, "out");
    if (state < 0 || state >= m->m.state_count())
      throw ArgumentError("state " + std::to_string(state) + " out of range");
    *out = cwb::holds_at(m->m, state, f->f, extended ? cwb::Mode::Extended : cwb::Mode::Core) ? 1 : 0;
  });
}

int cwb_report_outcome(const cwb_report* r) { return r == nullptr ? -1 : r->r.outcome; }
const char* cwb_report_text(const cwb_report* r) { return r == nullptr ? "" : r->r.text.c_str(); }
const char* cwb_report_json(const cwb_report* r) { return r == nullptr ? "" : r->r.json.c_str(); }
void cwb_report_free(cwb_report* r) { delete r; }

cwb_status cwb_check(const cwb_model* m, const cwb_formula* f, int state, int extended, cwb_report** out) {
  return emit(out, [&] {
    require(m, "model");
    require(f, "formula");
    const cwb::Mode mode = extended || f->mode == cwb::Mode::Extended ? cwb::Mode::Extended : cwb::Mode::Core;
    if (state >= m->m.state_count()) throw ArgumentError("state " + std::to_string(state) + " out of range");
    return cwb::report_check(m->m, f->f, state, mode);
  });
}

cwb_status cwb_validity(const cwb_formula* f, const char* cls, const cwb_search_options* opts, cwb_report** out) {
  return emit(out, [&] {
    require(f, "formula");
    auto cfg = search_config(opts, merge_atoms({f->f}));
    if (f->mode == cwb::Mode::Extended) cfg.mode = cwb::Mode::Extended;
    const auto spec = frame_class(cls);
    return cwb::report_validity(f->f, spec, cwb::check_validity(f->f, spec, cfg), cfg.mode);
  });
}

cwb_status cwb_props(const cwb_model* m, cwb_report** out) {
  return emit(out, [&] {
    require(m, "model");
    return cwb::report_props(m->m);
  });
}

cwb_status cwb_supplement_report(const cwb_model* m, cwb_report** out) {
  return emit(out, [&] {
    require(m, "model");
    return cwb::report_supplement(m->m);
  });
}

cwb_status cwb_supplement_sweep(const cwb_search_options* opts, cwb_report** out) {
  return emit(out, [&] { return cwb::report_supplement_sweep(cwb::supplementation_sweep(search_config(opts, {"p"}))); });
}

cwb_status cwb_prove(const char* system, const char* derivation, cwb_report** out) {
  return emit(out, [&] {
    require(derivation, "derivation");
    const auto id = system_id(system);
    const auto d = cwb::parse_derivation(derivation);
    return cwb::report_derivation(id, d, cwb::check_derivation(id, d));
  });
}

cwb_status cwb_soundness(const char* system, const cwb_search_options* opts, cwb_report** out) {
  return emit(out, [&] {
    const auto id = system_id(system);
    return cwb::report_soundness(
        cwb::axiom_soundness_report(id, cwb::standard_pool(), search_config(opts, {"p", "q"})));
  });
}

cwb_status cwb_schema_soundness(const char* schemas, const char* cls, const cwb_search_options* opts,
                                cwb_report** out) {
  return emit(out, [&] {
    std::vector<cwb::Schema> list;
    for (const auto& name : split_csv(schemas)) {
      auto s = cwb::parse_schema(name);
      if (!s) throw ArgumentError("unknown axiom schema '" + name + "'");
      list.push_back(*s);
    }
    if (list.empty()) throw ArgumentError("schema list must be nonempty");
    return cwb::report_soundness(cwb::schema_validity_report(list, frame_class(cls), cwb::standard_pool(),
                                                             search_config(opts, {"p", "q"})));
  });
}

cwb_status cwb_cube(const cwb_search_options* opts, int strict, cwb_report** out) {
  return emit(out, [&] {
    cwb::CubeConfig cfg;
    cfg.search = search_config(opts, {"p", "q"});
    cfg.search.trials = 0;
    if (strict) {
      cfg.fallback_trials = 0;
    } else if (opts != nullptr && opts->trials > 0) {
      cfg.fallback_trials = opts->trials;
    }
    return cwb::report_cube(cwb::cube_strictness(cfg));
  });
}

cwb_status cwb_lambda_eq_model(const cwb_model* m, const char* base, int depth, cwb_report** out) {
  return emit(out, [&] {
    require(m, "model");
    const auto u = cwb::Universe::close(parse_list(base), depth);
    return cwb::report_lambda(m->m, u, cwb::compare_lambdas(m->m, u));
  });
}

cwb_status cwb_lambda_eq_sweep(const char* base, int depth, const cwb_search_options* opts, cwb_report** out) {
  return emit(out, [&] {
    const auto members = parse_list(base);
    const auto u = cwb::Universe::close(members, depth);
    const auto cfg = search_config(opts, merge_atoms(members));
    return cwb::report_lambda_sweep(cwb::lambda_equivalence_sweep(u, cfg), u.size(), depth);
  });
}

cwb_status cwb_schema_experiment(const char* cls, const cwb_search_options* opts, cwb_report** out) {
  return emit(out, [&] {
    return cwb::report_schema_experiment(
        cwb::schema_validity_experiment(frame_class(cls), cwb::standard_pool(), search_config(opts, {"p", "q"})));
  });
}

cwb_status cwb_monotone_experiment(const char* base, int depth, const cwb_search_options* opts, cwb_report** out) {
  return emit(out, [&] {
    const auto members = parse_list(base);
    const auto u = cwb::Universe::close(members, depth);
    const auto cfg = search_config(opts, merge_atoms(members));
    return cwb::report_monotone(cwb::almost_monotonicity_experiment(u, cfg), u, cfg);
  });
}

cwb_status cwb_enumerate(const char* cls, const cwb_search_options* opts, int list, cwb_report** out) {
  return emit(out, [&] {
    const auto spec = frame_class(cls);
    const auto cfg = search_config(opts, {"p"});
    std::vector<cwb::EnumerationCount> counts;
    std::vector<cwb::NeighborhoodModel> listed;
    for (int n = cfg.min_states; n <= cfg.max_states; ++n) {
      cwb::ModelEnumerator e(n, cfg.atoms, spec);
      counts.push_back({n, e.count()});
      if (!list) continue;
      if (listed.size() + e.count() > 100000) throw cwb::BoundExceededError("too many models to list");
      while (auto m = e.next()) listed.push_back(std::move(*m));
    }
    return cwb::report_enumerate(spec, cfg.atoms, counts, listed);
  });
}

}  // extern "C"
