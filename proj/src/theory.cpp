// Copyright 2026 The cacheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cac/theory.hpp"

#include <mutex>

#include "cac/error.hpp"
#include "cac/reduction.hpp"

namespace cac {

// ---------------------------------------------------------------------------
// Environment and rules

void Environment::push(const Variable& x, Term type) {
  if (contains(x))
    throw Error(ErrorKind::InvalidArgument, "variable " + x.name() + " bound twice");
  bindings_.push_back({x, std::move(type)});
}

Environment Environment::extended(const Variable& x, Term type) const {
  Environment e = *this;
  e.push(x, std::move(type));
  return e;
}

const Term* Environment::find(const Variable& x) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
    if (it->var == x) return &it->type;
  return nullptr;
}

std::size_t Environment::index_of(const Variable& x) const {
  for (std::size_t i = 0; i < bindings_.size(); ++i)
    if (bindings_[i].var == x) return i;
  return bindings_.size();
}

Environment Environment::prefix(std::size_t n) const {
  Environment e;
  e.bindings_.assign(bindings_.begin(), bindings_.begin() + std::min(n, bindings_.size()));
  return e;
}

std::vector<Variable> Environment::domain() const {
  std::vector<Variable> d;
  for (const auto& b : bindings_) d.push_back(b.var);
  return d;
}

bool operator==(const Environment& a, const Environment& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].var == b[i].var) || !(a[i].type == b[i].type)) return false;
  return true;
}

std::string to_string(const Environment& env) {
  std::string s = "[";
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i) s += ", ";
    s += env[i].var.name() + " : " + to_string(env[i].type);
  }
  return s + "]";
}

std::string to_string(const AccPair& p) {
  return "<" + to_string(p.term) + ", " + to_string(p.type) + ">";
}

void validate_rule_shape(const RewriteRule& rule) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::IllFormedRule, "rule " + rule.name + ": " + why);
  };
  if (!rule.lhs || !rule.rhs) fail("missing side");
  if (!rule.lhs.is(TermKind::Symbol)) fail("left-hand side must be headed by a symbol");
  if (!is_algebraic(rule.lhs)) fail("left-hand side must be algebraic");
  if (!rule.lhs.locally_closed() || !rule.rhs.locally_closed()) fail("dangling bound variable");
  auto lv = free_vars(rule.lhs);
  for (const Variable& x : free_vars_ordered(rule.rhs))
    if (!lv.count(x)) fail("variable " + x.name() + " of the right-hand side is not in the left-hand side");
}

bool is_left_linear(const Term& lhs) {
  for (const Variable& x : free_vars_ordered(lhs))
    if (count_occurrences(x, lhs) > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Theory

struct Theory::Cache {
  std::once_flag once;
  std::unique_ptr<ConfluenceVerdict> verdict;
};

Theory::Theory() : cache_(std::make_shared<Cache>()) {}

void Theory::invalidate() { cache_ = std::make_shared<Cache>(); }

void Theory::add_rule(RewriteRule rule) {
  if (sealed()) throw Error(ErrorKind::Sealed, "theory is sealed; cannot add rule " + rule.name);
  validate_rule_shape(rule);
  sig_.at(rule.head());
  if (find_rule(rule.name))
    throw Error(ErrorKind::DuplicateSymbol, "rule " + rule.name + " is already defined");
  defined_.insert(rule.head());
  rules_.push_back(std::move(rule));
  invalidate();
}

std::vector<const RewriteRule*> Theory::rules_for(std::string_view f) const {
  std::vector<const RewriteRule*> out;
  for (const auto& r : rules_)
    if (r.head() == f) out.push_back(&r);
  return out;
}

const RewriteRule* Theory::find_rule(std::string_view name) const {
  for (const auto& r : rules_)
    if (r.name == name) return &r;
  return nullptr;
}

bool Theory::is_defined(std::string_view f) const { return defined_.count(f) != 0; }

bool Theory::is_predicate_symbol(std::string_view f) const {
  const SymbolDecl* d = sig_.find(f);
  return d && d->sort == Sort::Box;
}

std::optional<std::string> Theory::constructor_output(std::string_view c) const {
  const SymbolDecl* d = sig_.find(c);
  if (!d || d->sort != Sort::Star || product_count(d->type) != d->arity) return std::nullopt;
  const Term* cod = &d->type;
  while (cod->is(TermKind::Prod)) cod = &cod->body();
  if (!cod->is(TermKind::Symbol) || !is_free_predicate(cod->symbol_name())) return std::nullopt;
  return cod->symbol_name();
}

void Theory::seal() {
  if (sealed()) return;
  Precedence& prec = sig_.precedence();
  for (const auto& f : sig_.names())
    for (const auto& g : symbols_of(sig_.at(f).type))
      if (g != f && sig_.contains(g)) prec.add_default(f, g);
  for (const auto& c : sig_.names()) {
    auto out = constructor_output(c);
    if (!out) continue;
    for (const auto& d : symbols_of(sig_.at(c).type))
      if (d != *out && is_predicate_symbol(d)) prec.add_default(*out, d);
  }
  prec.finalize();
  sig_.seal();
  invalidate();
}

const ConfluenceVerdict& Theory::confluence() const {
  if (!sealed()) throw Error(ErrorKind::Sealed, "confluence is only computed on sealed theories");
  Cache& c = *cache_;
  std::call_once(c.once, [&] {
    c.verdict = std::make_unique<ConfluenceVerdict>(confluence_check(*this, fuel));
  });
  return *c.verdict;
}

bool Theory::confluent() const {
  if (!sealed()) return rules_.empty();
  return confluence().positive();
}

}  // namespace cac
