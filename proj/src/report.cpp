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

#include "cwb/report.hpp"

#include <json.hpp>
#include <sstream>

#include "cwb/semantics.hpp"

namespace cwb {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kBoxNote =
    "extended mode: [] phi is read as phi^M in N(s); this reading is a workbench choice, results are evidence only";

ojson model_json(const NeighborhoodModel& m) { return ojson::parse(to_json(m)); }

ojson formula_list(const std::vector<Formula>& fs) {
  ojson out = ojson::array();
  for (const auto& f : fs) out.push_back(render(f));
  return out;
}

std::string join(const std::vector<Formula>& fs) {
  std::string out = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) out += ", ";
    out += render(fs[i]);
  }
  return out + "}";
}

std::string indent(const std::string& block, const std::string& pad) {
  std::istringstream in(block);
  std::string line, out;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

ojson verdict_json(const SearchVerdict& v) {
  ojson out = ojson::object();
  out["verdict"] = v.valid() ? "valid" : "countermodel";
  out["witness"] = v.witness ? model_json(v.witness->model) : ojson(nullptr);
  out["state"] = v.witness ? ojson(v.witness->state) : ojson(nullptr);
  out["scope"] = v.scope;
  return out;
}

void merge(ojson& into, const ojson& from) {
  for (const auto& [k, value] : from.items()) into[k] = value;
}

}  // namespace

std::string describe_set(StateSet set) {
  std::string out = "{";
  bool first = true;
  for (int s = 0; s < kMaxStates; ++s) {
    if (((set >> s) & 1u) == 0) continue;
    if (!first) out += ",";
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

std::string describe_model(const NeighborhoodModel& m) {
  std::string out = "states: " + std::to_string(m.state_count()) + "\n";
  for (int s = 0; s < m.state_count(); ++s) {
    out += "N(" + std::to_string(s) + ") = {";
    const auto members = m.neighborhood(s).members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out += ", ";
      out += describe_set(members[i]);
    }
    out += "}\n";
  }
  for (const auto& [name, set] : m.valuation()) out += "V(" + name + ") = " + describe_set(set) + "\n";
  return out;
}

Report report_check(const NeighborhoodModel& m, const Formula& f, int state, Mode mode) {
  Report r;
  const StateSet ts = truth_set(m, f, mode);
  ojson j = ojson::object();
  j["formula"] = render(f);
  j["truth_set"] = ojson::parse("[]");
  for (int s = 0; s < m.state_count(); ++s)
    if ((ts >> s) & 1u) j["truth_set"].push_back(s);
  if (state >= 0) {
    const bool value = holds_at(m, state, f, mode);
    j["state"] = state;
    j["holds"] = value;
    r.text = value ? "true\n" : "false\n";
  } else {
    r.text = "truth set: " + describe_set(ts) + "\n";
  }
  j["valid_in_model"] = ts == m.all_states();
  if (mode == Mode::Extended) j["note"] = kBoxNote;
  r.json = j.dump();
  return r;
}

Report report_validity(const Formula& f, FrameClass spec, const SearchVerdict& v, Mode mode) {
  Report r;
  r.outcome = v.valid() ? 0 : 1;
  ojson j = ojson::object();
  j["query"] = render(f);
  j["class"] = spec.name();
  merge(j, verdict_json(v));
  if (mode == Mode::Extended) j["note"] = kBoxNote;
  r.json = j.dump();

  std::string t = "query: " + render(f) + "\nclass: " + spec.name() + "\n";
  if (v.valid()) {
    t += "verdict: valid\n";
  } else {
    t += "verdict: countermodel at state " + std::to_string(v.witness->state) + "\n";
    t += indent(describe_model(v.witness->model), "  ");
  }
  t += "scope: " + v.scope + "\n";
  if (mode == Mode::Extended) t += std::string("note: ") + kBoxNote + "\n";
  r.text = t;
  return r;
}

Report report_props(const NeighborhoodModel& m) {
  Report r;
  ojson props = ojson::object();
  std::string t;
  for (auto p : {FrameProperty::Unit, FrameProperty::Intersection, FrameProperty::Superset, FrameProperty::Complement}) {
    const bool has = has_property(m, p);
    props[std::string(1, property_letter(p))] = has;
    t += std::string("(") + property_letter(p) + "): " + (has ? "yes" : "no") + "\n";
  }
  const bool qf = satisfies_class(m, FrameClass::quasi_filter());
  const bool f = satisfies_class(m, FrameClass::filter());
  t += std::string("quasi-filter: ") + (qf ? "yes" : "no") + "\n";
  t += std::string("filter: ") + (f ? "yes" : "no") + "\n";
  ojson j = ojson::object();
  j["properties"] = props;
  j["quasi_filter"] = qf;
  j["filter"] = f;
  r.json = j.dump();
  r.text = t;
  return r;
}

Report report_supplement(const NeighborhoodModel& m) {
  Report r;
  const NeighborhoodModel plus = supplementation(m);
  r.json = to_json(plus);
  r.text = describe_model(plus);
  return r;
}

Report report_supplement_sweep(const SupplementationSweep& sweep) {
  Report r;
  r.outcome = sweep.violations == 0 ? 0 : 1;
  ojson j = ojson::object();
  j["models"] = sweep.models;
  j["violations"] = sweep.violations;
  j["scope"] = sweep.scope;
  j["first_violation"] = sweep.first_violation ? model_json(*sweep.first_violation) : ojson(nullptr);
  j["law"] = sweep.first_law;
  r.json = j.dump();
  r.text = "supplementation laws on " + std::to_string(sweep.models) + " models: " +
           std::to_string(sweep.violations) + " violations\n";
  if (sweep.first_violation) r.text += sweep.first_law + "\n" + indent(describe_model(*sweep.first_violation), "  ");
  r.text += "scope: " + sweep.scope + "\n";
  return r;
}

Report report_derivation(SystemId system, const Derivation& d, const CheckResult& c) {
  Report r;
  r.outcome = c.accepted ? 0 : 1;
  ojson j = ojson::object();
  j["system"] = std::string(to_string(system));
  j["lines"] = d.lines.size();
  j["verdict"] = c.accepted ? "accepted" : "rejected";
  j["line"] = c.accepted ? ojson(nullptr) : ojson(c.line);
  j["reason"] = c.accepted ? ojson(nullptr) : ojson(std::string(to_string(c.reason)));
  j["detail"] = c.detail;
  r.json = j.dump();
  if (c.accepted) {
    r.text = "accepted in " + std::string(to_string(system)) + " (" + std::to_string(d.lines.size()) + " lines)\n";
  } else {
    r.text = "rejected at line " + std::to_string(c.line) + ": " + std::string(to_string(c.reason)) + " (" +
             c.detail + ")\n";
  }
  return r;
}

Report report_soundness(const SoundnessReport& s) {
  Report r;
  r.outcome = s.countermodels() == 0 ? 0 : 1;
  const SystemSpec spec = system_spec(s.system);
  ojson j = ojson::object();
  j["system"] = std::string(to_string(s.system));
  j["axioms"] = spec.describe();
  j["class"] = s.frame_class.name();
  j["pool"] = formula_list(s.pool);
  j["instances"] = s.results.size();
  j["countermodels"] = s.countermodels();
  ojson failures = ojson::array();
  for (const auto& res : s.results) {
    if (res.verdict.valid()) continue;
    ojson f = ojson::object();
    f["schema"] = std::string(to_string(res.schema));
    f["query"] = render(res.instance);
    merge(f, verdict_json(res.verdict));
    failures.push_back(f);
  }
  j["failures"] = failures;
  j["scope"] = s.results.empty() ? "" : s.results.front().verdict.scope;
  r.json = j.dump();

  std::string t = "system " + std::string(to_string(s.system)) + " [" + spec.describe() + "] on class " +
                  s.frame_class.name() + "\n";
  t += "pool: " + join(s.pool) + "\n";
  t += std::to_string(s.results.size()) + " instances, " + std::to_string(s.countermodels()) + " countermodels\n";
  for (const auto& res : s.results) {
    if (res.verdict.valid()) continue;
    t += "  " + std::string(to_string(res.schema)) + ": " + render(res.instance) + " fails at state " +
         std::to_string(res.verdict.witness->state) + "\n";
    t += indent(describe_model(res.verdict.witness->model), "    ");
  }
  if (!s.results.empty()) t += "scope: " + s.results.front().verdict.scope + "\n";
  r.text = t;
  return r;
}

Report report_cube(const std::vector<SeparationWitness>& ws) {
  Report r;
  ojson arrows = ojson::array();
  std::string t;
  for (const auto& w : ws) {
    ojson a = ojson::object();
    a["from"] = std::string(to_string(w.arrow.from));
    a["to"] = std::string(to_string(w.arrow.to));
    a["axiom"] = std::string(to_string(w.arrow.added));
    a["syntactic_inclusion"] = w.syntactic_inclusion;
    a["class"] = w.frame_class.name();
    a["instance"] = render(w.instance);
    a["witness"] = model_json(w.countermodel.model);
    a["state"] = w.countermodel.state;
    a["states"] = w.countermodel.model.state_count();
    a["scope"] = w.scope;
    arrows.push_back(a);

    t += std::string(to_string(w.arrow.from)) + " -> " + std::string(to_string(w.arrow.to)) + ": axiom " +
         std::string(to_string(w.arrow.added)) + " fails on class " + w.frame_class.name() + " (|S|=" +
         std::to_string(w.countermodel.model.state_count()) + ", state " + std::to_string(w.countermodel.state) +
         "; inclusion " + (w.syntactic_inclusion ? "yes" : "NO") + ")\n";
    t += "  instance: " + render(w.instance) + "\n";
    t += indent(describe_model(w.countermodel.model), "  ");
  }
  ojson j = ojson::object();
  j["arrows"] = arrows;
  j["count"] = ws.size();
  r.json = j.dump();
  r.text = t + std::to_string(ws.size()) + " separation witnesses\n";
  return r;
}

Report report_lambda(const NeighborhoodModel& m, const Universe& u, const std::vector<StateComparison>& cmp) {
  Report r;
  ojson arr = ojson::array();
  std::string t;
  for (const auto& c : cmp) {
    if (!c.equal) r.outcome = 1;
    ojson j = ojson::object();
    j["model"] = model_json(m);
    j["state"] = c.state;
    j["universe_size"] = c.universe_size;
    j["lambda_k"] = formula_list(c.lambda_k);
    j["lambda_h"] = formula_list(c.lambda_h);
    j["lambda_h_simplified"] = formula_list(c.lambda_h_simplified);
    j["equal"] = c.equal;
    ojson diffs = ojson::array();
    for (const auto& d : c.differences) {
      ojson dj = ojson::object();
      dj["phi"] = render(d.phi);
      dj["psi"] = d.psi ? ojson(render(*d.psi)) : ojson(nullptr);
      dj["description"] = d.description;
      diffs.push_back(dj);
    }
    j["differences"] = diffs;
    arr.push_back(j);

    t += "state " + std::to_string(c.state) + ": |U|=" + std::to_string(u.size()) + ", lambda_K " +
         join(c.lambda_k) + ", lambda_H " + join(c.lambda_h) + (c.equal ? " (equal)" : " (DIFFERENT)") + "\n";
    for (const auto& d : c.differences)
      t += "  " + render(d.phi) + " " + d.description + (d.psi ? ", witness " + render(*d.psi) : "") + "\n";
  }
  r.json = arr.dump();
  r.text = t;
  return r;
}

Report report_lambda_sweep(const LambdaSweep& sweep, std::size_t universe_size, int depth) {
  Report r;
  r.outcome = sweep.differences == 0 ? 0 : 1;
  ojson j = ojson::object();
  j["models"] = sweep.models;
  j["states"] = sweep.states;
  j["universe_size"] = universe_size;
  j["depth"] = depth;
  j["differences"] = sweep.differences;
  j["equal"] = sweep.differences == 0;
  j["scope"] = sweep.scope;
  if (sweep.first_difference) {
    ojson d = ojson::object();
    d["model"] = model_json(*sweep.first_model);
    d["state"] = sweep.first_difference->state;
    d["lambda_k"] = formula_list(sweep.first_difference->lambda_k);
    d["lambda_h"] = formula_list(sweep.first_difference->lambda_h);
    j["first_difference"] = d;
  } else {
    j["first_difference"] = nullptr;
  }
  r.json = j.dump();
  r.text = "compared lambda_K with lambda_H (original and simplified) at " + std::to_string(sweep.states) +
           " states of " + std::to_string(sweep.models) + " models, |U|=" + std::to_string(universe_size) +
           ", depth " + std::to_string(depth) + "\n" + "differences: " + std::to_string(sweep.differences) + "\n" +
           "scope: " + sweep.scope + "\n";
  return r;
}

Report report_schema_experiment(const SchemaExperimentReport& e) {
  Report r;
  ojson arr = ojson::array();
  std::size_t failing = 0;
  std::string t = "almost-definability schema on class " + e.frame_class.name() + "\n";
  for (const auto& res : e.results) {
    ojson j = ojson::object();
    j["query"] = render(res.instance);
    merge(j, verdict_json(res.verdict));
    arr.push_back(j);
    if (!res.verdict.valid()) ++failing;
    t += "  " + render(res.instance) + ": " +
         (res.verdict.valid() ? std::string("valid")
                              : "countermodel at state " + std::to_string(res.verdict.witness->state)) +
         "\n";
  }
  ojson j = ojson::object();
  j["class"] = e.frame_class.name();
  j["instances"] = arr;
  j["failing"] = failing;
  j["note"] = kBoxNote;
  r.json = j.dump();
  t += std::to_string(failing) + " of " + std::to_string(e.results.size()) + " instances have countermodels\n";
  if (!e.results.empty()) t += "scope: " + e.results.front().verdict.scope + "\n";
  t += std::string("note: ") + kBoxNote + "\n";
  r.text = t;
  return r;
}

Report report_monotone(const MonotonicityReport& m, const Universe& u, const SearchConfig& cfg) {
  Report r;
  const std::string verdict = m.found() ? (m.all_reverified ? "violation-found" : "reverification-failed")
                                        : "inconclusive";
  if (m.found() && !m.all_reverified) r.outcome = 1;
  ojson j = ojson::object();
  j["universe"] = formula_list(u.members());
  j["models"] = m.models;
  j["states"] = m.states;
  j["violations"] = m.violations;
  j["all_reverified"] = m.all_reverified;
  j["verdict"] = verdict;
  ojson ex = ojson::array();
  for (const auto& v : m.examples) {
    ojson e = ojson::object();
    e["model"] = model_json(v.model);
    e["state"] = v.state;
    e["phi"] = render(v.phi);
    e["psi"] = render(v.psi);
    e["selector"] = render(v.selector);
    e["reverified"] = v.reverified;
    ex.push_back(e);
  }
  j["examples"] = ex;
  j["seed"] = cfg.seed;
  r.json = j.dump();

  std::string t = "N'(s) = {phi^M : D phi & D (psi -> phi) & Nb psi at s for some psi}, U = " + join(u.members()) +
                  "\n";
  t += std::to_string(m.models) + " models, " + std::to_string(m.states) + " states, " +
       std::to_string(m.violations) + " violations of almost-monotonicity\n";
  if (!m.examples.empty()) {
    const auto& v = m.examples.front();
    t += "first violation at state " + std::to_string(v.state) + ": " + render(v.phi) + " selected (via " +
         render(v.selector) + "), " + render(v.psi) + " not selected\n";
    t += indent(describe_model(v.model), "  ");
  }
  t += "verdict: " + verdict + "\n";
  r.text = t;
  return r;
}

Report report_enumerate(FrameClass spec, const std::vector<std::string>& atoms,
                        const std::vector<EnumerationCount>& counts, const std::vector<NeighborhoodModel>& listed) {
  Report r;
  ojson j = ojson::object();
  j["class"] = spec.name();
  j["atoms"] = atoms;
  ojson c = ojson::object();
  std::uint64_t total = 0;
  std::string t;
  for (const auto& e : counts) {
    c[std::to_string(e.states)] = e.models;
    total += e.models;
    t += "|S|=" + std::to_string(e.states) + ": " + std::to_string(e.models) + " models\n";
  }
  j["counts"] = c;
  j["total"] = total;
  if (!listed.empty()) {
    ojson arr = ojson::array();
    for (const auto& m : listed) arr.push_back(model_json(m));
    j["models"] = arr;
    for (const auto& m : listed) t += to_json(m) + "\n";
  }
  t += "total: " + std::to_string(total) + "\n";
  r.json = j.dump();
  r.text = t;
  return r;
}

}  // namespace cwb
