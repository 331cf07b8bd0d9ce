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

#include "judge.hpp"

#include "cac/error.hpp"
#include "cac/general_schema.hpp"
#include "cac/reduction.hpp"

namespace cac::detail {

namespace {

// Errors raised while building a closure derivation are all NoDerivation so
// callers can tell "not in the closure" from "ill-typed input".
[[noreturn]] void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

std::string nf_or_self(const Term& t, const Theory& theory, std::size_t fuel) {
  try {
    return to_string(normalize(t, theory, fuel));
  } catch (const FuelExhausted&) {
    return to_string(t) + " (no normal form within fuel)";
  }
}

}  // namespace

Derivation Judge::node(const Environment& env, const Term& subject, const Term& type,
                       RuleTag tag, std::vector<Derivation> premises, std::string note) {
  auto n = std::make_shared<DerivationNode>();
  n->env = env;
  n->subject = subject;
  n->type = type;
  n->tag = tag;
  n->premises = std::move(premises);
  n->note = std::move(note);
  return n;
}

std::pair<Sort, Derivation> Judge::sort_of(const Environment& env, const Term& type) {
  Typed k = infer(env, type);
  if (k.type.is(TermKind::Sort)) return {k.type.sort_value(), k.derivation};
  Term nf = normalize(k.type, theory_, fuel_);
  if (!nf.is(TermKind::Sort))
    fail(ErrorKind::SortError, to_string(type) + " is not a type: it has type " + to_string(k.type));
  auto [s, ds] = sort_of(env, nf);
  (void)s;
  Derivation conv = node(env, type, nf, RuleTag::Conv, {k.derivation, ds});
  return {nf.sort_value(), conv};
}

Derivation Judge::type_premise(const Environment& env, const Variable& x, const Term& type,
                               bool acc) {
  std::uint64_t key = x.id() * 2 + (acc ? 1 : 0);
  if (auto it = premise_cache_.find(key); it != premise_cache_.end()) return it->second;
  if (!in_progress_.insert(key).second)
    fail(ErrorKind::SortError, "type of " + x.name() + " depends on itself");
  struct Guard {
    std::set<std::uint64_t>& s;
    std::uint64_t k;
    ~Guard() { s.erase(k); }
  } guard{in_progress_, key};
  auto [s, d] = sort_of(env, type);
  if (s != x.sort_class())
    fail(ErrorKind::SortError, "variable " + x.name() + " has type " + to_string(type) +
                                   " of sort " + to_string(s) + " but belongs to sort class " +
                                   to_string(x.sort_class()));
  premise_cache_.emplace(key, d);
  return d;
}

Typed Judge::infer_variable(const Environment& env, const Term& t) {
  const Variable& x = t.variable();
  if (closure_) {
    if (const Term* ty = closure_->gamma0.find(x)) {
      Derivation p = type_premise(closure_->gamma0, x, *ty, true);
      return {*ty, node(env, t, *ty, RuleTag::Acc, {p})};
    }
  }
  std::size_t idx = env.index_of(x);
  if (idx == env.size())
    fail(closure_ ? ErrorKind::NoDerivation : ErrorKind::UnboundVariable,
         "variable " + x.name() + (closure_ ? " is not accessible" : " is unbound"));
  const Term& ty = env[idx].type;
  Derivation p = type_premise(env.prefix(idx), x, ty, false);
  return {ty, node(env, t, ty, RuleTag::Var, {p})};
}

Typed Judge::infer_symbol(const Environment& env, const Term& t) {
  const std::string& f = t.symbol_name();
  const SymbolDecl* d = theory_.signature().find(f);
  if (!d) fail(ErrorKind::UnknownSymbol, "unknown symbol " + f);
  auto args = t.args();
  if (args.size() != d->arity)
    fail(ErrorKind::ArityMismatch, f + " expects " + std::to_string(d->arity) +
                                       " arguments, got " + std::to_string(args.size()));
  Instantiated inst = instantiate_products(d->type, args);

  RuleTag tag = RuleTag::Symb;
  std::string note;
  const Precedence& prec = theory_.precedence();
  if (closure_) {
    if (f == closure_->head || prec.equivalent(f, closure_->head)) {
      tag = RuleTag::SymbEq;
    } else if (prec.greater(closure_->head, f)) {
      tag = RuleTag::SymbLt;
    } else {
      fail(ErrorKind::NoDerivation, "symbol " + f + " is not below " + closure_->head +
                                        " in the precedence (at " + to_string(t) + ")");
    }
  }

  std::vector<Derivation> premises;
  premises.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    premises.push_back(check(env, args[i], inst.domains[i]));

  if (tag == RuleTag::SymbEq) {
    std::vector<AccPair> callee;
    for (std::size_t i = 0; i < args.size(); ++i) callee.push_back({args[i], inst.domains[i]});
    if (!args_greater(theory_, closure_->lhs_pairs, callee))
      fail(ErrorKind::NoDerivation, "recursive call " + to_string(t) +
                                        " has no decreasing argument");
    note = describe_decrease(closure_->lhs_pairs, callee);
  }
  return {inst.codomain, node(env, t, inst.codomain, tag, std::move(premises), std::move(note))};
}

Typed Judge::infer_app(const Environment& env, const Term& t) {
  Typed h = infer(env, t.head());
  Term ht = h.type;
  Derivation hd = h.derivation;
  if (!ht.is(TermKind::Prod)) {
    Term nf = normalize(ht, theory_, fuel_);
    if (!nf.is(TermKind::Prod))
      fail(ErrorKind::NotAProduct, to_string(t.head()) + " has type " + to_string(ht) +
                                       ", which is not a product");
    auto [s, ds] = sort_of(env, nf);
    (void)s;
    hd = node(env, t.head(), nf, RuleTag::Conv, {hd, ds});
    ht = nf;
  }
  Derivation ad = check(env, t.arg(), ht.domain());
  Term result = instantiate(ht.body(), t.arg());
  return {result, node(env, t, result, RuleTag::App, {hd, ad})};
}

Typed Judge::infer(const Environment& env, const Term& t) {
  switch (t.kind()) {
    case TermKind::Sort:
      if (t.sort_value() == Sort::Box) fail(ErrorKind::SortError, "□ has no type");
      return {Term::box(), node(env, t, Term::box(), RuleTag::Ax, {})};
    case TermKind::Bound:
      fail(ErrorKind::UnboundVariable, "dangling bound variable " + to_string(t));
    case TermKind::Free:
      return infer_variable(env, t);
    case TermKind::Symbol:
      return infer_symbol(env, t);
    case TermKind::Prod: {
      auto [s, dd] = sort_of(env, t.domain());
      Variable x = Variable::fresh(t.binder_name(), s);
      Environment ext = env.extended(x, t.domain());
      auto [s2, bd] = sort_of(ext, open(t.body(), x));
      Term ty = Term::sort(s2);
      return {ty, node(env, t, ty, RuleTag::Prod, {dd, bd})};
    }
    case TermKind::Abs: {
      auto [s, dd] = sort_of(env, t.domain());
      (void)dd;
      Variable x = Variable::fresh(t.binder_name(), s);
      Environment ext = env.extended(x, t.domain());
      Typed b = infer(ext, open(t.body(), x));
      Term ty = Term::pi(x, t.domain(), b.type);
      auto [s2, pd] = sort_of(env, ty);
      (void)s2;
      return {ty, node(env, t, ty, RuleTag::Abs, {b.derivation, pd})};
    }
    case TermKind::App:
      return infer_app(env, t);
  }
  fail(ErrorKind::InvalidArgument, "unknown term kind");
}

Derivation Judge::check(const Environment& env, const Term& t, const Term& type) {
  Typed got = infer(env, t);
  if (got.type == type) return got.derivation;
  if (!(alpha_eq(got.type, type) || joinable(got.type, type, theory_, fuel_)))
    fail(ErrorKind::TypeMismatch, to_string(t) + " has type " + to_string(got.type) +
                                      " (normal form " + nf_or_self(got.type, theory_, fuel_) +
                                      ") but " + to_string(type) + " (normal form " +
                                      nf_or_self(type, theory_, fuel_) + ") was expected");
  auto [s, sd] = sort_of(env, type);
  (void)s;
  return node(env, t, type, RuleTag::Conv, {got.derivation, sd});
}

void Judge::env_valid(const Environment& env) {
  for (std::size_t i = 0; i < env.size(); ++i) {
    try {
      type_premise(env.prefix(i), env[i].var, env[i].type, false);
    } catch (const FuelExhausted&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.kind(), "binding " + std::to_string(i + 1) + " (" + env[i].var.name() +
                                "): " + e.what());
    }
  }
}

}  // namespace cac::detail
