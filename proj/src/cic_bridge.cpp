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

#include "cac/cic_bridge.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "cac/error.hpp"
#include "cac/theory.hpp"
#include "cac/typing.hpp"

namespace cac {

namespace {

[[noreturn]] void reject(const std::string& msg) { throw Error(ErrorKind::Inductive, msg); }

struct Ctor {
  std::string name;
  std::vector<Variable> z;
  std::vector<Term> b;  // raw, may mention self
  std::vector<Term> m;
  // a' when B_j = X a', per argument.
  std::vector<std::optional<std::vector<Term>>> rec;
};

struct Shape {
  std::vector<Variable> x;
  std::vector<Term> a;
  std::vector<Ctor> ctors;
};

Shape analyse(const InductiveDecl& d, const BridgeOptions& opt) {
  Shape s;
  Telescope at = open_products(d.arity_type);
  if (!at.codomain.is_sort(Sort::Star))
    reject("arity of " + d.name + " must end in *, found " + to_string(at.codomain));
  if (occurs_free(d.self, d.arity_type)) reject("arity of " + d.name + " mentions " + d.name);
  s.x = at.vars;
  s.a = at.types;

  for (const auto& [cname, ctype] : d.constructors) {
    Ctor c;
    c.name = cname;
    Telescope ct = open_products(ctype);
    auto [head, ms] = spine(ct.codomain);
    if (!head.is(TermKind::Free) || !(head.variable() == d.self))
      reject("constructor " + cname + " must produce " + d.name);
    if (ms.size() != s.x.size())
      reject("constructor " + cname + " applies " + d.name + " to " + std::to_string(ms.size()) +
             " arguments, expected " + std::to_string(s.x.size()));
    for (const Term& m : ms)
      if (occurs_free(d.self, m)) reject("constructor " + cname + ": nested occurrence of " + d.name);
    c.z = ct.vars;
    c.b = ct.types;
    c.m = ms;
    for (std::size_t j = 0; j < c.b.size(); ++j) {
      const Term& bj = c.b[j];
      std::optional<std::vector<Term>> rec;
      if (occurs_free(d.self, bj)) {
        auto [bh, bargs] = spine(bj);
        bool nested = false;
        for (const Term& t : bargs) nested = nested || occurs_free(d.self, t);
        if (bh.is(TermKind::Free) && bh.variable() == d.self && !nested &&
            bargs.size() == s.x.size()) {
          rec = bargs;
        } else if (!opt.allow_non_basic) {
          reject("constructor " + cname + ": argument " + std::to_string(j + 1) + " (" +
                 to_string(bj) + ") is not basic");
        } else {
          Telescope bt = open_products(bj);
          auto [h2, args2] = spine(bt.codomain);
          bool ok = h2.is(TermKind::Free) && h2.variable() == d.self;
          for (const Term& t : bt.types) ok = ok && !occurs_free(d.self, t);
          for (const Term& t : args2) ok = ok && !occurs_free(d.self, t);
          if (!ok)
            reject("constructor " + cname + ": argument " + std::to_string(j + 1) +
                   " is not strictly positive");
        }
      }
      c.rec.push_back(std::move(rec));
    }
    // Predicate arguments must be parameters of the output type.
    for (std::size_t j = 0; j < c.b.size(); ++j) {
      for (const Variable& v : free_vars_ordered(c.b[j])) {
        if (v == d.self || v.sort_class() != Sort::Box) continue;
        bool param = false;
        for (const Term& m : c.m) param = param || (m.is(TermKind::Free) && m.variable() == v);
        if (!param)
          reject("constructor " + cname + " violates I6: predicate variable " + v.name() +
                 " in argument " + std::to_string(j + 1) + " is not a parameter of " + d.name);
      }
    }
    s.ctors.push_back(std::move(c));
  }
  return s;
}

// X a -> I(a), everywhere.
Term translate(const Term& t, const Variable& self, const std::string& ind, std::size_t arity) {
  if (!occurs_free(self, t)) return t;
  auto [head, args] = spine(t);
  if (head.is(TermKind::Free) && head.variable() == self) {
    if (args.size() != arity) reject(ind + " is used with " + std::to_string(args.size()) +
                                     " arguments, expected " + std::to_string(arity));
    std::vector<Term> out;
    for (const Term& a : args) out.push_back(translate(a, self, ind, arity));
    return Term::symbol(ind, std::move(out));
  }
  auto tr = [&](const Term& u) { return translate(u, self, ind, arity); };
  switch (t.kind()) {
    case TermKind::App: return Term::app(tr(t.head()), tr(t.arg()));
    case TermKind::Abs: return Term::abs(t.binder_name(), tr(t.domain()), tr(t.body()));
    case TermKind::Prod: return Term::prod(t.binder_name(), tr(t.domain()), tr(t.body()));
    case TermKind::Symbol: {
      std::vector<Term> out;
      for (const Term& a : t.args()) out.push_back(tr(a));
      return Term::symbol(t.symbol_name(), std::move(out));
    }
    default: return t;
  }
}

Term pi_chain(const std::vector<Variable>& vars, const std::vector<Term>& types, Term body) {
  for (std::size_t i = vars.size(); i-- > 0;) body = Term::pi(vars[i], types[i], body);
  return body;
}

std::vector<Term> vars_of(const std::vector<Variable>& vs) {
  std::vector<Term> out;
  for (const auto& v : vs) out.push_back(Term::var(v));
  return out;
}

// C_i{I, Q}: (z:B)(z':B{X->Q}) Q m, translated.
Term recursor_case(const InductiveDecl& d, std::size_t arity, const Ctor& c, const Term& q) {
  std::vector<Variable> vars = c.z;
  std::vector<Term> types;
  for (const Term& b : c.b) types.push_back(translate(b, d.self, d.name, arity));
  Substitution to_q{{d.self, q}};
  for (std::size_t j = 0; j < c.z.size(); ++j) {
    vars.push_back(Variable::fresh(c.z[j].name() + "'", sort_class_of_type(c.b[j])));
    types.push_back(translate(subst_apply(c.b[j], to_q), d.self, d.name, arity));
  }
  std::vector<Term> ms;
  for (const Term& m : c.m) ms.push_back(translate(m, d.self, d.name, arity));
  return pi_chain(vars, types, Term::apply(q, ms));
}

// Shared by both eliminators: `prefix` are the leading lhs arguments
// (Q and f for WElim, f for SElim), `make_call` rebuilds a recursive call.
struct RuleVars {
  std::vector<Term> prefix;
  std::vector<Variable> prefix_vars;
  std::vector<Term> prefix_types;
};

RewriteRule iota_rule(const InductiveDecl& d, const Shape& s, std::size_t i,
                      const std::string& elim, const RuleVars& rv) {
  const Ctor& c = s.ctors[i];
  std::size_t arity = s.x.size();
  std::vector<Variable> a, b;
  Substitution xa, zb;
  for (const auto& x : s.x) {
    a.push_back(x.renamed(x.name()));
    xa.bind(x, Term::var(a.back()));
  }
  for (const auto& z : c.z) {
    b.push_back(z.renamed(z.name()));
    zb.bind(z, Term::var(b.back()));
  }
  std::vector<Term> mb;
  for (const Term& m : c.m) mb.push_back(subst_apply(translate(m, d.self, d.name, arity), zb));

  Substitution rho;
  for (std::size_t k = 0; k < arity; ++k)
    if (mb[k].is(TermKind::Free) && !rho.contains(mb[k].variable()) &&
        std::find(b.begin(), b.end(), mb[k].variable()) != b.end())
      rho.bind(mb[k].variable(), Term::var(a[k]));
  Substitution rho1 = rho;
  for (std::size_t k = 0; k < arity; ++k) {
    bool linked = mb[k].is(TermKind::Free) && rho1.contains(mb[k].variable()) &&
                  *rho1.find(mb[k].variable()) == Term::var(a[k]);
    if (!linked) rho.bind(a[k], subst_apply(mb[k], rho1));
  }

  auto call = [&](std::vector<Term> params, const Term& scrutinee) {
    std::vector<Term> args = rv.prefix;
    for (auto& p : params) args.push_back(std::move(p));
    args.push_back(scrutinee);
    return Term::symbol(elim, std::move(args));
  };

  std::vector<Term> bvars = vars_of(b);
  Term lhs = call(vars_of(a), Term::symbol(c.name, bvars));
  std::vector<Term> rargs = bvars;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!c.rec[j]) {
      rargs.push_back(bvars[j]);
      continue;
    }
    std::vector<Term> params;
    for (const Term& t : *c.rec[j]) params.push_back(subst_apply(translate(t, d.self, d.name, arity), zb));
    rargs.push_back(call(std::move(params), bvars[j]));
  }
  Term rhs = subst_apply(Term::apply(rv.prefix[i + rv.prefix.size() - s.ctors.size()], rargs), rho);

  Environment env;
  for (std::size_t k = 0; k < rv.prefix_vars.size(); ++k) env.push(rv.prefix_vars[k], rv.prefix_types[k]);
  for (std::size_t k = 0; k < arity; ++k)
    if (!rho.contains(a[k])) env.push(a[k], subst_apply(subst_apply(s.a[k], xa), rho));
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!rho.contains(b[j]))
      env.push(b[j], subst_apply(subst_apply(translate(c.b[j], d.self, d.name, arity), zb), rho));

  RewriteRule r;
  r.name = elim + "_" + c.name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.env = std::move(env);
  r.rho = std::move(rho);
  r.annotated = true;
  return r;
}

}  // namespace

Term beta_normalize(const Term& t) {
  switch (t.kind()) {
    case TermKind::App: {
      Term h = beta_normalize(t.head());
      Term a = beta_normalize(t.arg());
      if (h.is(TermKind::Abs)) return beta_normalize(instantiate(h.body(), a));
      return Term::app(h, a);
    }
    case TermKind::Abs:
      return Term::abs(t.binder_name(), beta_normalize(t.domain()), beta_normalize(t.body()));
    case TermKind::Prod:
      return Term::prod(t.binder_name(), beta_normalize(t.domain()), beta_normalize(t.body()));
    case TermKind::Symbol: {
      std::vector<Term> out;
      for (const Term& a : t.args()) out.push_back(beta_normalize(a));
      return Term::symbol(t.symbol_name(), std::move(out));
    }
    default:
      return t;
  }
}

GeneratedBundle translate_inductive(Theory& theory, const InductiveDecl& d,
                                    const BridgeOptions& options) {
  Shape s = analyse(d, options);
  std::size_t arity = s.x.size();
  GeneratedBundle g;
  g.inductive = d.name;
  g.decl = d;
  g.options = options;

  g.symbols.push_back(declare_symbol(theory, {d.name, Sort::Box, arity, d.arity_type}));
  for (const Ctor& c : s.ctors) {
    std::vector<Term> types;
    for (const Term& b : c.b) types.push_back(translate(b, d.self, d.name, arity));
    std::vector<Term> ms;
    for (const Term& m : c.m) ms.push_back(translate(m, d.self, d.name, arity));
    Term type = pi_chain(c.z, types, Term::symbol(d.name, ms));
    g.symbols.push_back(declare_symbol(theory, {c.name, Sort::Star, c.z.size(), type}));
    g.constructors.push_back(c.name);
    auto& acc = theory.signature().structure().acc[c.name];
    for (unsigned j = 1; j <= c.z.size(); ++j) acc.insert(j);
  }
  theory.signature().structure().ind[d.name];

  // WElim_I : (Q:A)(f:T)(x:A)(c:I(x)) Q x
  g.welim = "WElim_" + d.name;
  Variable q = Variable::fresh("Q", Sort::Box);
  std::vector<Variable> vars{q};
  std::vector<Term> types{d.arity_type};
  for (std::size_t i = 0; i < s.ctors.size(); ++i) {
    vars.push_back(Variable::fresh("f" + std::to_string(i + 1), Sort::Star));
    types.push_back(recursor_case(d, arity, s.ctors[i], Term::var(q)));
  }
  for (std::size_t k = 0; k < arity; ++k) {
    vars.push_back(s.x[k]);
    types.push_back(s.a[k]);
  }
  vars.push_back(Variable::fresh("c", Sort::Star));
  types.push_back(Term::symbol(d.name, vars_of(s.x)));
  Term wtype = pi_chain(vars, types, Term::apply(Term::var(q), vars_of(s.x)));
  g.symbols.push_back(declare_symbol(theory, {g.welim, Sort::Star, vars.size(), wtype}));

  RuleVars rv;
  Variable qr = Variable::fresh("Q", Sort::Box);
  rv.prefix.push_back(Term::var(qr));
  rv.prefix_vars.push_back(qr);
  rv.prefix_types.push_back(d.arity_type);
  for (std::size_t i = 0; i < s.ctors.size(); ++i) {
    Variable f = Variable::fresh("f" + std::to_string(i + 1), Sort::Star);
    rv.prefix.push_back(Term::var(f));
    rv.prefix_vars.push_back(f);
    rv.prefix_types.push_back(recursor_case(d, arity, s.ctors[i], Term::var(qr)));
  }
  for (std::size_t i = 0; i < s.ctors.size(); ++i) {
    RewriteRule r = iota_rule(d, s, i, g.welim, rv);
    g.provenance[r.name] = {d.name, i + 1, "WElim"};
    theory.add_rule(r);
    g.rules.push_back(std::move(r));
  }
  return g;
}

std::string add_strong_elimination(Theory& theory, GeneratedBundle& g, const std::string& name,
                                   const Term& motive) {
  const InductiveDecl& d = g.decl;
  if (!motive.locally_closed() || motive.has_free_vars())
    reject("motive for " + name + " must be closed");
  for (const auto& [m, sym] : g.motives) {
    if (m == motive) {
      if (sym != name) theory.aliases[name] = sym;
      return sym;
    }
  }
  Shape s = analyse(d, g.options);
  std::size_t arity = s.x.size();

  // [x:A]K with K = (y:U)*.
  Term k = motive;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!k.is(TermKind::Abs)) reject("motive for " + name + " must abstract the parameters of " + d.name);
    if (!(k.domain() == s.a[i]))
      reject("motive for " + name + ": parameter " + std::to_string(i + 1) + " has type " +
             to_string(k.domain()) + ", expected " + to_string(s.a[i]));
    k = open(k.body(), s.x[i]);
  }
  if (!is_kind(k)) reject("motive for " + name + " must end in a kind (y:U)*");
  Environment params;
  for (std::size_t i = 0; i < arity; ++i) params.push(s.x[i], s.a[i]);
  Typed kt = infer(theory, params, k, theory.fuel);
  if (!kt.type.is_sort(Sort::Box)) reject("motive body " + to_string(k) + " is not a kind");

  for (const Ctor& c : s.ctors)
    for (const Variable& z : c.z) {
      if (z.sort_class() != Sort::Box) continue;
      bool param = false;
      for (const Term& m : c.m) param = param || (m.is(TermKind::Free) && m.variable() == z);
      if (!param)
        reject("strong elimination on " + d.name + " needs a small type; constructor " + c.name +
               " has the predicate argument " + z.name());
    }

  // (f:T^Q)(x:A)(c:I(x)) K
  std::vector<Term> cases;
  for (const Ctor& c : s.ctors) cases.push_back(beta_normalize(recursor_case(d, arity, c, motive)));
  std::vector<Variable> vars;
  std::vector<Term> types;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    vars.push_back(Variable::fresh("f" + std::to_string(i + 1), sort_class_of_type(cases[i])));
    types.push_back(cases[i]);
  }
  for (std::size_t i = 0; i < arity; ++i) {
    vars.push_back(s.x[i]);
    types.push_back(s.a[i]);
  }
  vars.push_back(Variable::fresh("c", Sort::Star));
  types.push_back(Term::symbol(d.name, vars_of(s.x)));
  Term stype = pi_chain(vars, types, k);
  g.symbols.push_back(declare_symbol(theory, {name, Sort::Box, vars.size(), stype}));

  RuleVars rv;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    Variable f = Variable::fresh("f" + std::to_string(i + 1), sort_class_of_type(cases[i]));
    rv.prefix.push_back(Term::var(f));
    rv.prefix_vars.push_back(f);
    rv.prefix_types.push_back(cases[i]);
  }
  for (std::size_t i = 0; i < s.ctors.size(); ++i) {
    RewriteRule r = iota_rule(d, s, i, name, rv);
    g.provenance[r.name] = {d.name, i + 1, "SElim"};
    theory.add_rule(r);
    g.rules.push_back(std::move(r));
  }
  g.selims.push_back(name);
  g.motives.emplace_back(motive, name);
  return name;
}

BundleCertificate certify_bundle(const Theory& theory, const GeneratedBundle& g,
                                 std::size_t fuel) {
  BundleCertificate c;
  c.confluence = theory.confluence().level;
  SystemProperties w = system_properties(theory, {g.welim}, fuel);
  c.welim_safe = w.safe;
  c.welim_recursive = w.recursive;
  std::set<std::string> se(g.selims.begin(), g.selims.end());
  SystemProperties sp = system_properties(theory, se, fuel);
  c.selim_simple = sp.simple;
  c.selim_recursive = sp.recursive;
  c.ok = (c.confluence == ConfluenceLevel::Orthogonal) && c.welim_safe.holds() &&
         c.welim_recursive.holds() && c.selim_simple.holds() && c.selim_recursive.holds();
  return c;
}

}  // namespace cac
