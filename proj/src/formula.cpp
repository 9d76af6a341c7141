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

#include "cwb/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace cwb {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(NodeKind kind, std::string name, const Formula* left, const Formula* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = mix(0x51ed270b27bULL, static_cast<std::size_t>(kind));
  node->size = 1;
  node->depth = 0;
  node->has_box = kind == NodeKind::Box;
  if (kind == NodeKind::Atom) h = mix(h, std::hash<std::string>{}(node->name));
  if (left != nullptr) {
    node->left = left->node_;
    h = mix(h, left->hash());
    node->size += left->size();
    node->depth = std::max(node->depth, left->depth() + 1);
    node->has_box = node->has_box || left->contains_box();
  }
  if (right != nullptr) {
    node->right = right->node_;
    h = mix(h, right->hash());
    node->size += right->size();
    node->depth = std::max(node->depth, right->depth() + 1);
    node->has_box = node->has_box || right->contains_box();
  }
  node->hash = h;
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case NodeKind::Atom:
      return a.name() == b.name();
    case NodeKind::And:
      return a.left() == b.left() && a.right() == b.right();
    default:
      return a.child() == b.child();
  }
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case NodeKind::Atom:
      return a.name() < b.name();
    case NodeKind::And:
      if (a.left() != b.left()) return a.left() < b.left();
      return a.right() < b.right();
    default:
      return a.child() < b.child();
  }
}

Formula atom(std::string name) { return Formula::make(NodeKind::Atom, std::move(name), nullptr, nullptr); }
Formula negate(const Formula& f) { return Formula::make(NodeKind::Not, {}, &f, nullptr); }
Formula conj(const Formula& a, const Formula& b) { return Formula::make(NodeKind::And, {}, &a, &b); }
Formula delta(const Formula& f) { return Formula::make(NodeKind::Delta, {}, &f, nullptr); }
Formula box(const Formula& f) { return Formula::make(NodeKind::Box, {}, &f, nullptr); }

Formula disj(const Formula& a, const Formula& b) { return negate(conj(negate(a), negate(b))); }
Formula implies(const Formula& a, const Formula& b) { return negate(conj(a, negate(b))); }
Formula iff(const Formula& a, const Formula& b) { return conj(implies(a, b), implies(b, a)); }
Formula nabla(const Formula& f) { return negate(delta(f)); }

Formula top() {
  static const Formula t = [] {
    Formula r = atom(std::string(kTopAtom));
    return disj(r, negate(r));
  }();
  return t;
}

Formula bot() {
  static const Formula b = negate(top());
  return b;
}

bool as_implication(const Formula& f, Formula* antecedent, Formula* consequent) {
  if (f.kind() != NodeKind::Not) return false;
  Formula body = f.child();
  if (body.kind() != NodeKind::And || body.right().kind() != NodeKind::Not) return false;
  *antecedent = body.left();
  *consequent = body.right().child();
  return true;
}

bool as_biconditional(const Formula& f, Formula* lhs, Formula* rhs) {
  if (f.kind() != NodeKind::And) return false;
  Formula a = f, b = f, c = f, d = f;
  if (!as_implication(f.left(), &a, &b) || !as_implication(f.right(), &c, &d)) return false;
  if (a != d || b != c) return false;
  *lhs = a;
  *rhs = b;
  return true;
}

namespace {

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, std::string& out) {
  if (f.is_atom()) {
    out += f.name();
    return;
  }
  out += '(';
  render_into(f, out);
  out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case NodeKind::Atom:
      out += f.name();
      break;
    case NodeKind::Not:
      out += '!';
      render_operand(f.child(), out);
      break;
    case NodeKind::Delta:
      out += "D ";
      render_operand(f.child(), out);
      break;
    case NodeKind::Box:
      out += "[] ";
      render_operand(f.child(), out);
      break;
    case NodeKind::And:
      render_into(f.left(), out);
      out += " & ";
      if (f.right().kind() == NodeKind::And) {
        out += '(';
        render_into(f.right(), out);
        out += ')';
      } else {
        render_into(f.right(), out);
      }
      break;
  }
}

void collect_atoms(const Formula& f, std::vector<std::string>& out, std::unordered_set<std::string>& seen) {
  if (f.is_atom()) {
    if (seen.insert(f.name()).second) out.push_back(f.name());
    return;
  }
  collect_atoms(f.left(), out, seen);
  if (f.kind() == NodeKind::And) collect_atoms(f.right(), out, seen);
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_atoms(f, out, seen);
  return out;
}

namespace {

class SkeletonBuilder {
 public:
  explicit SkeletonBuilder(const Formula& f) {
    for (auto& name : atoms_of(f)) taken_.insert(name);
  }

  Formula build(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::Atom:
        return f;
      case NodeKind::Not:
        return negate(build(f.child()));
      case NodeKind::And:
        return conj(build(f.left()), build(f.right()));
      case NodeKind::Delta:
      case NodeKind::Box: {
        auto it = index_.find(f);
        if (it != index_.end()) return table_[it->second].second;
        Formula fresh = atom(next_name());
        index_.emplace(f, table_.size());
        table_.emplace_back(f, fresh);
        return fresh;
      }
    }
    return f;
  }

  std::vector<std::pair<Formula, Formula>> take_table() { return std::move(table_); }

 private:
  std::string next_name() {
    for (;;) {
      std::string name = "a" + std::to_string(++counter_);
      if (taken_.insert(name).second) return name;
    }
  }

  std::unordered_set<std::string> taken_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::vector<std::pair<Formula, Formula>> table_;
  int counter_ = 0;
};

Formula substitute(const Formula& f, const std::unordered_map<std::string, Formula>& by_name) {
  switch (f.kind()) {
    case NodeKind::Atom: {
      auto it = by_name.find(f.name());
      return it == by_name.end() ? f : it->second;
    }
    case NodeKind::Not:
      return negate(substitute(f.child(), by_name));
    case NodeKind::And:
      return conj(substitute(f.left(), by_name), substitute(f.right(), by_name));
    case NodeKind::Delta:
      return delta(substitute(f.child(), by_name));
    case NodeKind::Box:
      return box(substitute(f.child(), by_name));
  }
  return f;
}

}  // namespace

PropSkeleton skeleton(const Formula& f) {
  SkeletonBuilder builder(f);
  Formula prop = builder.build(f);
  return PropSkeleton{prop, builder.take_table()};
}

Formula PropSkeleton::substitute_back() const {
  std::unordered_map<std::string, Formula> by_name;
  for (const auto& [modal, fresh] : table) by_name.emplace(fresh.name(), modal);
  return substitute(formula, by_name);
}

}  // namespace cwb
