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

#include <array>
#include <unordered_map>

#include "cwb/errors.hpp"
#include "cwb/formula.hpp"

namespace cwb {

namespace {

// Postfix program over 64-row truth-table chunks.
struct Instr {
  enum Op : std::uint8_t { Var, Not, And } op;
  int var;
};

void compile(const Formula& f, const std::unordered_map<std::string, int>& index, std::vector<Instr>& out) {
  switch (f.kind()) {
    case NodeKind::Atom:
      out.push_back({Instr::Var, index.at(f.name())});
      return;
    case NodeKind::Not:
      compile(f.child(), index, out);
      out.push_back({Instr::Not, 0});
      return;
    case NodeKind::And:
      compile(f.left(), index, out);
      compile(f.right(), index, out);
      out.push_back({Instr::And, 0});
      return;
    default:
      // skeleton() leaves no modal nodes.
      throw Error("tautology oracle received a modal node");
  }
}

// Bit r of pattern i is bit i of the row index r, for rows 0..63.
constexpr std::array<std::uint64_t, 6> kLowPatterns = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

bool is_tautology(const Formula& f) {
  PropSkeleton sk = skeleton(f);
  std::vector<std::string> names = atoms_of(sk.formula);
  const int n = static_cast<int>(names.size());
  if (n > kMaxTautologyAtoms) throw TooManyAtomsError(n);

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(names[i], i);
  std::vector<Instr> program;
  compile(sk.formula, index, program);

  const std::uint64_t valid = n >= 6 ? ~0ULL : ((1ULL << (1u << n)) - 1);
  const std::uint64_t chunks = n > 6 ? (1ULL << (n - 6)) : 1;
  std::vector<std::uint64_t> stack;
  stack.reserve(program.size());
  for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
    stack.clear();
    for (const Instr& in : program) {
      switch (in.op) {
        case Instr::Var:
          if (in.var < 6) {
            stack.push_back(kLowPatterns[in.var]);
          } else {
            stack.push_back(((chunk >> (in.var - 6)) & 1ULL) ? ~0ULL : 0ULL);
          }
          break;
        case Instr::Not:
          stack.back() = ~stack.back();
          break;
        case Instr::And: {
          std::uint64_t rhs = stack.back();
          stack.pop_back();
          stack.back() &= rhs;
          break;
        }
      }
    }
    if ((stack.back() & valid) != valid) return false;
  }
  return true;
}

}  // namespace cwb
