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

#ifndef CWB_PROOFS_HPP
#define CWB_PROOFS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwb/formula.hpp"
#include "cwb/model.hpp"

namespace cwb {

// The eight Hilbert systems, each named after the frame class it is sound
// and complete for.
enum class SystemId { E, EC, EN, ECN, M, R, EMN, K };

inline constexpr SystemId kAllSystems[] = {SystemId::E, SystemId::EC,  SystemId::EN, SystemId::ECN,
                                           SystemId::M, SystemId::R,   SystemId::EMN, SystemId::K};

std::string_view to_string(SystemId id);
std::optional<SystemId> parse_system(std::string_view text);

// Axiom schemas. MonoAlt and ConjAlt are the alternative monotonicity and
// conjunction axioms; they are not axioms of any system, only schemas for
// semantic experiments.
//   Equ      D phi <-> D !phi
//   Mono     D phi -> D (phi | psi) | D (!phi | chi)
//   Conj     D phi & D psi -> D (phi & psi)
//   Unit     D top
//   MonoAlt  D phi -> D (phi -> psi) | D (!phi -> chi)
//   ConjAlt  D (psi -> phi) & D (!psi -> phi) -> D phi
enum class Schema { Equ, Mono, Conj, Unit, MonoAlt, ConjAlt };

// "EQU", "M", "C", "N", "M'", "C'".
std::string_view to_string(Schema schema);
std::optional<Schema> parse_schema(std::string_view text);
int metavariable_count(Schema schema);

struct SystemSpec {
  SystemId id;
  std::vector<Schema> axioms;      // TAUT is implicit in every system
  std::vector<std::string> rules;  // "MP", "RE"
  FrameClass frame_class;

  bool has_axiom(Schema s) const;
  // "TAUT, EQU, M; MP, RE"
  std::string describe() const;
};

SystemSpec system_spec(SystemId id);

// Syntactic inclusion of axiom sets.
bool system_includes(SystemId stronger, SystemId weaker);

struct Bindings {
  std::optional<Formula> phi;
  std::optional<Formula> psi;
  std::optional<Formula> chi;
};

// Instantiates a schema. Metavariables the schema does not use are ignored;
// used ones must be bound.
Formula instantiate(Schema schema, const Bindings& bindings);

// Syntactic matching modulo the fixed expansion of abbreviations only.
std::optional<Bindings> match_schema(Schema schema, const Formula& f);

struct Justification {
  enum class Kind { Taut, Axiom, ModusPonens, Rewrite };
  Kind kind = Kind::Taut;
  Schema axiom = Schema::Equ;  // Axiom only
  int first = 0;               // ModusPonens: premise; Rewrite: cited biconditional
  int second = 0;              // ModusPonens: the implication

  static Justification taut() { return {}; }
  static Justification axiom_of(Schema s) { return {Kind::Axiom, s, 0, 0}; }
  static Justification mp(int premise, int implication) { return {Kind::ModusPonens, Schema::Equ, premise, implication}; }
  static Justification re(int line) { return {Kind::Rewrite, Schema::Equ, line, 0}; }

  // "taut", "ax:EQU", "mp I J", "re I"
  std::string to_string() const;
};

struct ProofLine {
  int number;
  Formula formula;
  Justification why;
};

struct Derivation {
  std::vector<ProofLine> lines;
};

enum class RejectReason { None, MalformedDerivation, AxiomNotInSystem, JustificationMismatch };

std::string_view to_string(RejectReason reason);

struct CheckResult {
  bool accepted = true;
  int line = 0;  // 1-based position of the first bad line
  RejectReason reason = RejectReason::None;
  std::string detail;
};

// A line is accepted when it is a tautology instance (taut), an instance of
// an axiom of `system` (ax), follows by modus ponens from an earlier psi and
// psi -> phi (mp), or is D a <-> D b for an earlier a <-> b (re).
CheckResult check_derivation(SystemId system, const Derivation& d);

// Line format "N. <formula> ; <justification>", '#' starts a comment.
// Throws DerivationFormatError (formula or justification unreadable).
Derivation parse_derivation(std::string_view text);

}  // namespace cwb

#endif  // CWB_PROOFS_HPP
