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

#ifndef CWB_FORMULA_HPP
#define CWB_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cwb {

enum class NodeKind : std::uint8_t { Atom, Not, And, Delta, Box };

// Core mode is the plain language with the noncontingency operator only.
// Extended mode additionally admits the neighborhood box.
enum class Mode : std::uint8_t { Core, Extended };

// Atom used to build top/bot; the parser rejects it in user input.
inline constexpr std::string_view kTopAtom = "_t";

// Immutable formula DAG node handle. Copies share structure; equality is
// structural (with a pointer shortcut), and the hash is cached per node.
class Formula {
 public:
  NodeKind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == NodeKind::Atom; }

  // Only meaningful for atoms.
  const std::string& name() const { return node_->name; }

  // Operand of Not/Delta/Box, left operand of And.
  Formula child() const { return Formula(node_->left); }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }
  int depth() const { return node_->depth; }
  bool contains_box() const { return node_->has_box; }

  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  // Total order used for deterministic containers. Not a semantic order.
  friend bool operator<(const Formula& a, const Formula& b);

  friend Formula atom(std::string name);
  friend Formula negate(const Formula& f);
  friend Formula conj(const Formula& a, const Formula& b);
  friend Formula delta(const Formula& f);
  friend Formula box(const Formula& f);

 private:
  struct Node {
    NodeKind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t hash;
    std::size_t size;
    int depth;
    bool has_box;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(NodeKind kind, std::string name, const Formula* left, const Formula* right);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Core constructors.
Formula atom(std::string name);
Formula negate(const Formula& f);
Formula conj(const Formula& a, const Formula& b);
Formula delta(const Formula& f);
Formula box(const Formula& f);

// Abbreviations, expanded into core nodes on construction.
Formula disj(const Formula& a, const Formula& b);     // !(!a & !b)
Formula implies(const Formula& a, const Formula& b);  // !(a & !b)
Formula iff(const Formula& a, const Formula& b);      // (a -> b) & (b -> a)
Formula nabla(const Formula& f);                      // !D f
Formula top();                                        // _t | !_t
Formula bot();                                        // !top

// Inverse views of the abbreviations; nullopt-like results are signalled by
// returning false.
bool as_implication(const Formula& f, Formula* antecedent, Formula* consequent);
bool as_biconditional(const Formula& f, Formula* lhs, Formula* rhs);

struct ParseOptions {
  Mode mode = Mode::Core;
  // Admit the reserved atom "_t". Needed to re-read rendered formulas that
  // contain top/bot.
  bool allow_reserved = false;
};

// Throws ParseError.
Formula parse(std::string_view text, ParseOptions options = {});
inline Formula parse(std::string_view text, Mode mode) { return parse(text, ParseOptions{mode, false}); }

// Canonical text: core connectives only, unary operands parenthesized
// unless atomic, conjunction left-associated.
std::string render(const Formula& f);

// Atom names in first-occurrence (pre-order, left to right) order.
std::vector<std::string> atoms_of(const Formula& f);

// Propositional skeleton: each maximal modal subformula replaced by a fresh
// atom. `table` lists (modal subformula, fresh atom) in order of first
// occurrence.
struct PropSkeleton {
  Formula formula;
  std::vector<std::pair<Formula, Formula>> table;

  Formula substitute_back() const;
};

PropSkeleton skeleton(const Formula& f);

// True iff the skeleton of f is a classical tautology. Throws
// TooManyAtomsError above kMaxTautologyAtoms skeleton atoms.
inline constexpr int kMaxTautologyAtoms = 24;
bool is_tautology(const Formula& f);

}  // namespace cwb

#endif  // CWB_FORMULA_HPP
