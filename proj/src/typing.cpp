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

#include "cac/typing.hpp"

#include <unordered_set>

#include "cac/error.hpp"
#include "cac/general_schema.hpp"
#include "cac/reduction.hpp"
#include "cac/theory.hpp"
#include "judge.hpp"

namespace cac {

const char* to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::Ax: return "ax";
    case RuleTag::Symb: return "symb";
    case RuleTag::Var: return "var";
    case RuleTag::Weak: return "weak";
    case RuleTag::Prod: return "prod";
    case RuleTag::Abs: return "abs";
    case RuleTag::App: return "app";
    case RuleTag::Conv: return "conv";
    case RuleTag::Acc: return "acc";
    case RuleTag::SymbLt: return "symb<";
    case RuleTag::SymbEq: return "symb=";
  }
  return "?";
}

Typed infer(const Theory& theory, const Environment& env, const Term& t, std::size_t fuel) {
  detail::Judge j(theory, fuel);
  j.env_valid(env);
  return j.infer(env, t);
}

Derivation check(const Theory& theory, const Environment& env, const Term& t,
                 const Term& type, std::size_t fuel) {
  detail::Judge j(theory, fuel);
  j.env_valid(env);
  return j.check(env, t, type);
}

void env_valid(const Theory& theory, const Environment& env, std::size_t fuel) {
  detail::Judge(theory, fuel).env_valid(env);
}

bool convertible(const Theory& theory, const Term& a, const Term& b, std::size_t fuel) {
  return alpha_eq(a, b) || joinable(a, b, theory, fuel);
}

std::vector<SubstitutionFailure> check_substitution(const Theory& theory,
                                                    const Substitution& theta,
                                                    const Environment& gamma,
                                                    const Environment& delta,
                                                    std::size_t fuel) {
  std::vector<SubstitutionFailure> out;
  detail::Judge j(theory, fuel);
  j.env_valid(delta);
  for (const auto& b : gamma.bindings()) {
    const Term* img = theta.find(b.var);
    Term image = img ? *img : Term::var(b.var);
    try {
      j.check(delta, image, subst_apply(b.type, theta));
    } catch (const FuelExhausted&) {
      throw;
    } catch (const Error& e) {
      out.push_back({b.var, e.what()});
    }
  }
  return out;
}

std::size_t derivation_size(const Derivation& d) {
  if (!d) return 0;
  std::size_t n = 1;
  for (const auto& p : d->premises) n += derivation_size(p);
  return n;
}

namespace {

class Replayer {
 public:
  Replayer(const Theory& theory, std::size_t fuel, const ClosureReplayContext* closure)
      : theory_(theory), fuel_(fuel), closure_(closure) {}

  std::optional<std::string> run(const Derivation& d) {
    if (!d) return "missing derivation";
    if (seen_.count(d.get())) return std::nullopt;
    if (auto e = node(*d)) {
      return "(" + std::string(to_string(d->tag)) + ") " + to_string(d->subject) + " : " +
             to_string(d->type) + ": " + *e;
    }
    for (const auto& p : d->premises)
      if (auto e = run(p)) return e;
    seen_.insert(d.get());
    return std::nullopt;
  }

 private:
  using Result = std::optional<std::string>;

  static bool is_sort(const Derivation& p) { return p && p->type.is(TermKind::Sort); }

  Result arity(const DerivationNode& d, std::size_t n) const {
    if (d.premises.size() != n)
      return "expected " + std::to_string(n) + " premises, found " +
             std::to_string(d.premises.size());
    for (const auto& p : d.premises)
      if (!p) return std::string("null premise");
    return std::nullopt;
  }

  // Premise j is a sort judgment on `subject` in `env`.
  Result sort_premise(const DerivationNode& d, std::size_t j, const Environment& env,
                      const Term& subject) const {
    const auto& p = d.premises[j];
    if (!(p->env == env)) return "premise " + std::to_string(j + 1) + " has the wrong environment";
    if (!(p->subject == subject))
      return "premise " + std::to_string(j + 1) + " sorts " + to_string(p->subject) +
             " instead of " + to_string(subject);
    if (!is_sort(p)) return "premise " + std::to_string(j + 1) + " does not conclude a sort";
    return std::nullopt;
  }

  Result symbol(const DerivationNode& d) const {
    const Term& t = d.subject;
    if (!t.is(TermKind::Symbol)) return std::string("subject is not a symbol application");
    const SymbolDecl* decl = theory_.signature().find(t.symbol_name());
    if (!decl) return "unknown symbol " + t.symbol_name();
    if (t.args().size() != decl->arity) return std::string("arity mismatch");
    if (auto e = arity(d, decl->arity)) return e;
    Instantiated inst = instantiate_products(decl->type, t.args());
    for (std::size_t i = 0; i < decl->arity; ++i) {
      const auto& p = d.premises[i];
      if (!(p->env == d.env) || !(p->subject == t.args()[i]) || !(p->type == inst.domains[i]))
        return "premise " + std::to_string(i + 1) + " does not type argument " +
               std::to_string(i + 1) + " at its declared type";
    }
    if (!(d.type == inst.codomain)) return std::string("type is not the instantiated codomain");
    const Precedence& prec = theory_.precedence();
    const std::string& f = t.symbol_name();
    switch (d.tag) {
      case RuleTag::Symb:
        if (closure_) return std::string("(symb) inside the computable closure");
        return std::nullopt;
      case RuleTag::SymbLt:
        if (!closure_) return std::string("(symb<) outside the computable closure");
        if (!prec.greater(closure_->head, f)) return f + " is not below " + closure_->head;
        return std::nullopt;
      default: {
        if (!closure_) return std::string("(symb=) outside the computable closure");
        if (f != closure_->head && !prec.equivalent(f, closure_->head))
          return f + " is not equivalent to " + closure_->head;
        std::vector<AccPair> callee;
        for (std::size_t i = 0; i < decl->arity; ++i)
          callee.push_back({t.args()[i], inst.domains[i]});
        if (!args_greater(theory_, closure_->lhs_pairs, callee))
          return std::string("arguments do not decrease");
        return std::nullopt;
      }
    }
  }

  // Premise j lives in env extended by one binding x : domain; returns x.
  std::optional<Variable> extension(const DerivationNode& d, std::size_t j,
                                    const Term& domain) const {
    const Environment& pe = d.premises[j]->env;
    if (pe.size() != d.env.size() + 1 || !(pe.prefix(d.env.size()) == d.env)) return std::nullopt;
    const auto& last = pe[d.env.size()];
    if (!(last.type == domain)) return std::nullopt;
    return last.var;
  }

  Result node(const DerivationNode& d) {
    const Term& t = d.subject;
    switch (d.tag) {
      case RuleTag::Ax:
        if (auto e = arity(d, 0)) return e;
        if (!t.is_sort(Sort::Star) || !d.type.is_sort(Sort::Box)) return std::string("not * : □");
        return std::nullopt;

      case RuleTag::Var: {
        if (auto e = arity(d, 1)) return e;
        if (!t.is(TermKind::Free)) return std::string("subject is not a variable");
        const Variable& x = t.variable();
        if (closure_ && closure_->gamma0.contains(x))
          return "variable " + x.name() + " of the rule environment must use (acc)";
        std::size_t idx = d.env.index_of(x);
        if (idx == d.env.size()) return "variable " + x.name() + " is not bound";
        if (!(d.env[idx].type == d.type)) return std::string("type differs from the binding");
        if (auto e = sort_premise(d, 0, d.env.prefix(idx), d.type)) return e;
        if (d.premises[0]->type.sort_value() != x.sort_class())
          return std::string("sort class of the variable differs from the sort of its type");
        return std::nullopt;
      }

      case RuleTag::Acc: {
        if (!closure_) return std::string("(acc) outside the computable closure");
        if (auto e = arity(d, 1)) return e;
        if (!t.is(TermKind::Free)) return std::string("subject is not a variable");
        const Variable& x = t.variable();
        const Term* ty = closure_->gamma0.find(x);
        if (!ty) return "variable " + x.name() + " is not in the rule environment";
        if (!(*ty == d.type)) return std::string("type differs from the rule environment");
        if (auto e = sort_premise(d, 0, closure_->gamma0, d.type)) return e;
        if (d.premises[0]->type.sort_value() != x.sort_class())
          return std::string("sort class of the variable differs from the sort of its type");
        return std::nullopt;
      }

      case RuleTag::Symb:
      case RuleTag::SymbLt:
      case RuleTag::SymbEq:
        return symbol(d);

      case RuleTag::Weak: {
        if (auto e = arity(d, 2)) return e;
        if (d.env.empty()) return std::string("empty environment");
        Environment shorter = d.env.prefix(d.env.size() - 1);
        const auto& p = d.premises[0];
        if (!(p->env == shorter) || !(p->subject == t) || !(p->type == d.type))
          return std::string("first premise is not the same judgment in the shorter environment");
        const auto& last = d.env[d.env.size() - 1];
        if (auto e = sort_premise(d, 1, shorter, last.type)) return e;
        if (d.premises[1]->type.sort_value() != last.var.sort_class())
          return std::string("sort class mismatch for the weakened variable");
        return std::nullopt;
      }

      case RuleTag::Prod: {
        if (auto e = arity(d, 2)) return e;
        if (!t.is(TermKind::Prod)) return std::string("subject is not a product");
        if (auto e = sort_premise(d, 0, d.env, t.domain())) return e;
        auto x = extension(d, 1, t.domain());
        if (!x) return std::string("second premise does not extend the environment by the domain");
        if (x->sort_class() != d.premises[0]->type.sort_value())
          return std::string("bound variable has the wrong sort class");
        const auto& p = d.premises[1];
        if (!(p->subject == open(t.body(), *x)) || !is_sort(p))
          return std::string("second premise does not sort the codomain");
        if (!(d.type == p->type)) return std::string("type is not the sort of the codomain");
        return std::nullopt;
      }

      case RuleTag::Abs: {
        if (auto e = arity(d, 2)) return e;
        if (!t.is(TermKind::Abs)) return std::string("subject is not an abstraction");
        auto x = extension(d, 0, t.domain());
        if (!x) return std::string("first premise does not extend the environment by the domain");
        const auto& p = d.premises[0];
        if (!(p->subject == open(t.body(), *x))) return std::string("first premise types another body");
        if (!(d.type == Term::pi(*x, t.domain(), p->type)))
          return std::string("type is not the product over the body type");
        if (auto e = sort_premise(d, 1, d.env, d.type)) return e;
        return std::nullopt;
      }

      case RuleTag::App: {
        if (auto e = arity(d, 2)) return e;
        if (!t.is(TermKind::App)) return std::string("subject is not an application");
        const auto& h = d.premises[0];
        const auto& a = d.premises[1];
        if (!(h->env == d.env) || !(a->env == d.env)) return std::string("environment changes");
        if (!(h->subject == t.head()) || !h->type.is(TermKind::Prod))
          return std::string("first premise does not give the head a product type");
        if (!(a->subject == t.arg()) || !(a->type == h->type.domain()))
          return std::string("second premise does not type the argument at the domain");
        if (!(d.type == instantiate(h->type.body(), t.arg())))
          return std::string("type is not the instantiated codomain");
        return std::nullopt;
      }

      case RuleTag::Conv: {
        if (auto e = arity(d, 2)) return e;
        const auto& p = d.premises[0];
        if (!(p->env == d.env) || !(p->subject == t))
          return std::string("first premise is about another judgment");
        if (auto e = sort_premise(d, 1, d.env, d.type)) return e;
        if (!convertible(theory_, p->type, d.type, fuel_))
          return to_string(p->type) + " and " + to_string(d.type) + " are not joinable";
        return std::nullopt;
      }
    }
    return std::string("unknown rule");
  }

  const Theory& theory_;
  std::size_t fuel_;
  const ClosureReplayContext* closure_;
  std::unordered_set<const DerivationNode*> seen_;
};

}  // namespace

std::optional<std::string> replay(const Theory& theory, const Derivation& d, std::size_t fuel,
                                  const ClosureReplayContext* closure) {
  return Replayer(theory, fuel, closure).run(d);
}

}  // namespace cac
