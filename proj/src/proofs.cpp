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

#include "cwb/proofs.hpp"

#include <map>

#include "cwb/errors.hpp"

namespace cwb {

std::string_view to_string(SystemId id) {
  switch (id) {
    case SystemId::E: return "E";
    case SystemId::EC: return "EC";
    case SystemId::EN: return "EN";
    case SystemId::ECN: return "ECN";
    case SystemId::M: return "M";
    case SystemId::R: return "R";
    case SystemId::EMN: return "EMN";
    case SystemId::K: return "K";
  }
  return "?";
}

std::optional<SystemId> parse_system(std::string_view text) {
  for (SystemId id : kAllSystems)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

std::string_view to_string(Schema schema) {
  switch (schema) {
    case Schema::Equ: return "EQU";
    case Schema::Mono: return "M";
    case Schema::Conj: return "C";
    case Schema::Unit: return "N";
    case Schema::MonoAlt: return "M'";
    case Schema::ConjAlt: return "C'";
  }
  return "?";
}

std::optional<Schema> parse_schema(std::string_view text) {
  for (Schema s : {Schema::Equ, Schema::Mono, Schema::Conj, Schema::Unit, Schema::MonoAlt, Schema::ConjAlt})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

int metavariable_count(Schema schema) {
  switch (schema) {
    case Schema::Equ: return 1;
    case Schema::Mono: return 3;
    case Schema::Conj: return 2;
    case Schema::Unit: return 0;
    case Schema::MonoAlt: return 3;
    case Schema::ConjAlt: return 2;
  }
  return 0;
}

bool SystemSpec::has_axiom(Schema s) const {
  for (Schema a : axioms)
    if (a == s) return true;
  return false;
}

std::string SystemSpec::describe() const {
  std::string out = "TAUT";
  for (Schema a : axioms) {
    out += ", ";
    out += to_string(a);
  }
  out += ";";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += rules[i];
  }
  return out;
}

SystemSpec system_spec(SystemId id) {
  using P = FrameProperty;
  SystemSpec spec{id, {Schema::Equ}, {"MP", "RE"}, FrameClass::all()};
  switch (id) {
    case SystemId::E:
      break;
    case SystemId::EC:
      spec.axioms.push_back(Schema::Conj);
      spec.frame_class = FrameClass{P::Intersection, P::Complement};
      break;
    case SystemId::EN:
      spec.axioms.push_back(Schema::Unit);
      spec.frame_class = FrameClass{P::Unit};
      break;
    case SystemId::ECN:
      spec.axioms.insert(spec.axioms.end(), {Schema::Conj, Schema::Unit});
      spec.frame_class = FrameClass{P::Intersection, P::Complement, P::Unit};
      break;
    case SystemId::M:
      spec.axioms.push_back(Schema::Mono);
      spec.frame_class = FrameClass{P::Superset};
      break;
    case SystemId::R:
      spec.axioms.insert(spec.axioms.end(), {Schema::Mono, Schema::Conj});
      spec.frame_class = FrameClass::quasi_filter();
      break;
    case SystemId::EMN:
      spec.axioms.insert(spec.axioms.end(), {Schema::Mono, Schema::Unit});
      spec.frame_class = FrameClass{P::Superset, P::Unit};
      break;
    case SystemId::K:
      spec.axioms.insert(spec.axioms.end(), {Schema::Mono, Schema::Conj, Schema::Unit});
      spec.frame_class = FrameClass::filter();
      break;
  }
  return spec;
}

bool system_includes(SystemId stronger, SystemId weaker) {
  const SystemSpec big = system_spec(stronger);
  for (Schema a : system_spec(weaker).axioms)
    if (!big.has_axiom(a)) return false;
  return true;
}

namespace {

// Metavariable atoms; '?' never survives the lexer, so these cannot collide
// with parsed atoms.
const std::string kPhi = "?phi";
const std::string kPsi = "?psi";
const std::string kChi = "?chi";

Formula build(Schema schema, const Formula& phi, const Formula& psi, const Formula& chi) {
  switch (schema) {
    case Schema::Equ:
      return iff(delta(phi), delta(negate(phi)));
    case Schema::Mono:
      return implies(delta(phi), disj(delta(disj(phi, psi)), delta(disj(negate(phi), chi))));
    case Schema::Conj:
      return implies(conj(delta(phi), delta(psi)), delta(conj(phi, psi)));
    case Schema::Unit:
      return delta(top());
    case Schema::MonoAlt:
      return implies(delta(phi), disj(delta(implies(phi, psi)), delta(implies(negate(phi), chi))));
    case Schema::ConjAlt:
      return implies(conj(delta(implies(psi, phi)), delta(implies(negate(psi), phi))), delta(phi));
  }
  throw Error("unknown schema");
}

const Formula& pattern(Schema schema) {
  static const std::map<Schema, Formula> patterns = [] {
    std::map<Schema, Formula> out;
    const Formula phi = atom(kPhi), psi = atom(kPsi), chi = atom(kChi);
    for (Schema s : {Schema::Equ, Schema::Mono, Schema::Conj, Schema::Unit, Schema::MonoAlt, Schema::ConjAlt})
      out.emplace(s, build(s, phi, psi, chi));
    return out;
  }();
  return patterns.at(schema);
}

bool unify(const Formula& pat, const Formula& f, std::map<std::string, Formula>& bound) {
  if (pat.is_atom() && !pat.name().empty() && pat.name()[0] == '?') {
    auto it = bound.find(pat.name());
    if (it == bound.end()) {
      bound.emplace(pat.name(), f);
      return true;
    }
    return it->second == f;
  }
  if (pat.kind() != f.kind()) return false;
  switch (pat.kind()) {
    case NodeKind::Atom:
      return pat.name() == f.name();
    case NodeKind::And:
      return unify(pat.left(), f.left(), bound) && unify(pat.right(), f.right(), bound);
    default:
      return unify(pat.child(), f.child(), bound);
  }
}

}  // namespace

Formula instantiate(Schema schema, const Bindings& b) {
  const int arity = metavariable_count(schema);
  // Argument order in build(): phi, psi, chi. Unused slots get a placeholder.
  const Formula filler = atom(kPhi);
  const bool needs_psi = arity >= 2;
  const bool needs_chi = arity >= 3;
  if ((arity >= 1 && !b.phi) || (needs_psi && !b.psi) || (needs_chi && !b.chi))
    throw Error(std::string("schema ") + std::string(to_string(schema)) + " needs " + std::to_string(arity) +
                " bound metavariables");
  return build(schema, b.phi.value_or(filler), b.psi.value_or(filler), b.chi.value_or(filler));
}

std::optional<Bindings> match_schema(Schema schema, const Formula& f) {
  std::map<std::string, Formula> bound;
  if (!unify(pattern(schema), f, bound)) return std::nullopt;
  Bindings out;
  if (auto it = bound.find(kPhi); it != bound.end()) out.phi = it->second;
  if (auto it = bound.find(kPsi); it != bound.end()) out.psi = it->second;
  if (auto it = bound.find(kChi); it != bound.end()) out.chi = it->second;
  return out;
}

std::string Justification::to_string() const {
  switch (kind) {
    case Kind::Taut:
      return "taut";
    case Kind::Axiom:
      return "ax:" + std::string(cwb::to_string(axiom));
    case Kind::ModusPonens:
      return "mp " + std::to_string(first) + " " + std::to_string(second);
    case Kind::Rewrite:
      return "re " + std::to_string(first);
  }
  return "?";
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::None: return "None";
    case RejectReason::MalformedDerivation: return "MalformedDerivation";
    case RejectReason::AxiomNotInSystem: return "AxiomNotInSystem";
    case RejectReason::JustificationMismatch: return "JustificationMismatch";
  }
  return "?";
}

CheckResult check_derivation(SystemId system, const Derivation& d) {
  const SystemSpec spec = system_spec(system);
  auto reject = [](int line, RejectReason reason, std::string detail) {
    return CheckResult{false, line, reason, std::move(detail)};
  };
  auto cites_earlier = [](int cited, int k) { return cited >= 1 && cited < k; };

  if (d.lines.empty()) return reject(0, RejectReason::MalformedDerivation, "empty derivation");

  for (std::size_t idx = 0; idx < d.lines.size(); ++idx) {
    const int k = static_cast<int>(idx) + 1;
    const ProofLine& line = d.lines[idx];
    if (line.number != k)
      return reject(k, RejectReason::MalformedDerivation,
                    "line numbered " + std::to_string(line.number) + " at position " + std::to_string(k));
    const Justification& why = line.why;
    switch (why.kind) {
      case Justification::Kind::Taut: {
        bool ok = false;
        try {
          ok = is_tautology(line.formula);
        } catch (const TooManyAtomsError& e) {
          return reject(k, RejectReason::JustificationMismatch, e.what());
        }
        if (!ok) return reject(k, RejectReason::JustificationMismatch, "not a tautology instance");
        break;
      }
      case Justification::Kind::Axiom:
        if (!spec.has_axiom(why.axiom))
          return reject(k, RejectReason::AxiomNotInSystem,
                        "axiom " + std::string(to_string(why.axiom)) + " is not part of " +
                            std::string(to_string(system)));
        if (!match_schema(why.axiom, line.formula))
          return reject(k, RejectReason::JustificationMismatch,
                        "not an instance of " + std::string(to_string(why.axiom)));
        break;
      case Justification::Kind::ModusPonens: {
        if (!cites_earlier(why.first, k) || !cites_earlier(why.second, k))
          return reject(k, RejectReason::MalformedDerivation, "mp must cite earlier lines");
        const Formula& premise = d.lines[why.first - 1].formula;
        const Formula& implication = d.lines[why.second - 1].formula;
        if (implication != implies(premise, line.formula))
          return reject(k, RejectReason::JustificationMismatch,
                        "line " + std::to_string(why.second) + " is not line " + std::to_string(why.first) +
                            " -> this line");
        break;
      }
      case Justification::Kind::Rewrite: {
        if (!cites_earlier(why.first, k))
          return reject(k, RejectReason::MalformedDerivation, "re must cite an earlier line");
        Formula a = line.formula, b = line.formula;
        if (!as_biconditional(d.lines[why.first - 1].formula, &a, &b))
          return reject(k, RejectReason::JustificationMismatch,
                        "line " + std::to_string(why.first) + " is not a biconditional");
        if (line.formula != iff(delta(a), delta(b)))
          return reject(k, RejectReason::JustificationMismatch, "expected D a <-> D b for the cited a <-> b");
        break;
      }
    }
  }
  return CheckResult{};
}

}  // namespace cwb
