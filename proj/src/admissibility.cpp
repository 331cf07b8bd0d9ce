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

#include "cac/admissibility.hpp"

#include <algorithm>
#include <future>

#include "cac/error.hpp"
#include "cac/theory.hpp"
#include "cac/typing.hpp"

namespace cac {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::PassSufficient: return "PASS_SUFFICIENT";
    case Outcome::Asserted: return "ASSERTED";
    case Outcome::Fail: return "FAIL";
    case Outcome::NotChecked: return "NOT_CHECKED";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Holds: return "HOLDS";
    case Tri::Fails: return "FAILS";
    case Tri::NotChecked: return "NOT_CHECKED";
  }
  return "?";
}

const char* to_string(Overall o) {
  switch (o) {
    case Overall::Admissible: return "ADMISSIBLE";
    case Overall::AdmissibleWithAssertions: return "ADMISSIBLE_WITH_ASSERTIONS";
    case Overall::Rejected: return "REJECTED";
  }
  return "?";
}

std::vector<std::pair<const char*, const Property*>> property_list(const SystemProperties& p) {
  return {{"algebraic", &p.algebraic}, {"non_duplicating", &p.non_duplicating},
          {"primitive", &p.primitive}, {"simple", &p.simple},
          {"positive", &p.positive},   {"recursive", &p.recursive},
          {"safe", &p.safe}};
}

// ---------------------------------------------------------------------------
// S1-S5

namespace {

ConditionResult pass(Outcome o, std::string d = {}) { return {o, std::move(d)}; }

ConditionResult s1(const RewriteRule& rule) {
  auto lv = free_vars(rule.lhs);
  for (const Variable& x : rule.rho.domain()) {
    if (rule.env.contains(x)) return {Outcome::Fail, x.name() + " is in dom(Γ)"};
    if (!lv.count(x)) return {Outcome::Fail, x.name() + " does not occur in the left-hand side"};
  }
  return pass(Outcome::Pass);
}

ConditionResult typed(const Theory& theory, const RewriteRule& rule, const Term& t,
                      std::size_t fuel) {
  try {
    check(theory, rule.env, t, rule_type(theory, rule), fuel);
    return pass(Outcome::Pass);
  } catch (const Error& e) {
    return {Outcome::Fail, e.what()};
  }
}

ConditionResult s4(const Theory& theory, const RewriteRule& rule) {
  if (rule.env.empty()) return pass(Outcome::Pass);
  std::string detail;
  for (const auto& b : rule.env.bindings()) {
    std::optional<Position> at;
    for (const Position& p : positions_of(rule.lhs, b.var)) {
      if (subst_apply(derived_type(theory, rule.lhs, p), rule.rho) == b.type) {
        at = p;
        break;
      }
    }
    if (!at)
      return {Outcome::Fail, b.var.name() + " has no occurrence whose derived type matches " +
                                 to_string(b.type)};
    if (!detail.empty()) detail += "; ";
    detail += b.var.name() + " at " + at->to_string();
  }
  return {Outcome::PassSufficient, "derived types: " + detail};
}

// x' occurs only as a parameter of constructors of free predicates, and the
// expected type there fixes that parameter to x' rho.
ConditionResult s5(const Theory& theory, const RewriteRule& rule) {
  if (rule.rho.empty()) return pass(Outcome::Pass);
  std::string detail;
  for (const auto& [x, image] : rule.rho.entries()) {
    auto occ = positions_of(rule.lhs, x);
    if (occ.empty()) return {Outcome::Fail, x.name() + " does not occur in the left-hand side"};
    for (const Position& p : occ) {
      auto why = [&](const std::string& s) -> ConditionResult {
        return {Outcome::Fail, x.name() + " at " + p.to_string() + ": " + s};
      };
      std::vector<unsigned> path = p.path();
      unsigned k = path.back();
      path.pop_back();
      Position pp(path);
      if (pp.is_root()) return why("argument of the head symbol, not of a constructor");
      Term parent = subterm_at(rule.lhs, pp);
      auto out = parent.is(TermKind::Symbol) ? theory.constructor_output(parent.symbol_name())
                                             : std::nullopt;
      if (!out) return why("parent is not a constructor of a free predicate");
      const SymbolDecl& d = theory.decl(parent.symbol_name());
      Telescope tel = open_products(d.type, d.arity);
      std::optional<std::size_t> m;
      auto outs = tel.codomain.args();
      for (std::size_t i = 0; i < outs.size(); ++i)
        if (outs[i].is(TermKind::Free) && outs[i].variable() == tel.vars[k - 1]) m = i;
      if (!m) return why("not a parameter of " + *out);
      Term expected = derived_type(theory, rule.lhs, pp);
      if (!expected.is(TermKind::Symbol) || expected.symbol_name() != *out ||
          expected.args().size() != outs.size())
        return why("expected type " + to_string(expected) + " is not headed by " + *out);
      if (!(subst_apply(expected.args()[*m], rule.rho) == image))
        return why("expected parameter " + to_string(expected.args()[*m]) + " is not " +
                   to_string(image));
      if (!detail.empty()) detail += "; ";
      detail += x.name() + " linked through " + parent.symbol_name() + " at " + pp.to_string() +
                " to " + to_string(expected);
    }
  }
  return {Outcome::PassSufficient, detail};
}

}  // namespace

TypePreservation check_type_preservation(const Theory& theory, const RewriteRule& rule,
                                         std::size_t fuel) {
  TypePreservation out;
  out[0] = s1(rule);
  bool env_ok = true;
  try {
    env_valid(theory, rule.env, fuel);
  } catch (const Error& e) {
    env_ok = false;
    out[1] = out[2] = {Outcome::Fail, std::string("environment: ") + e.what()};
  }
  if (env_ok) {
    out[1] = typed(theory, rule, subst_apply(rule.lhs, rule.rho), fuel);
    out[2] = typed(theory, rule, rule.rhs, fuel);
  }
  out[3] = s4(theory, rule);
  out[4] = s5(theory, rule);
  return out;
}

// ---------------------------------------------------------------------------
// System properties

namespace {

std::vector<const RewriteRule*> rules_of(const Theory& theory, const std::set<std::string>& g) {
  std::vector<const RewriteRule*> out;
  for (const auto& r : theory.rules())
    if (g.count(r.head())) out.push_back(&r);
  return out;
}

bool primitive_predicate(const Theory& theory, const std::string& c) {
  return theory.is_free_predicate(c) && classify_predicate(theory, c) == PredicateClass::Primitive;
}

bool algebraic_eligible(const Theory& theory, const std::string& g) {
  if (theory.is_predicate_symbol(g)) return true;
  auto out = theory.constructor_output(g);
  return out && primitive_predicate(theory, *out);
}

Term linearize(const Term& t) {
  if (t.is(TermKind::Free)) return Term::var(t.variable().renamed(t.variable().name()));
  if (!t.is(TermKind::Symbol)) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(linearize(a));
  return Term::symbol(t.symbol_name(), std::move(args));
}

Property holds() { return {Tri::Holds, {}}; }
Property fails(std::string w) { return {Tri::Fails, std::move(w)}; }

Property algebraic(const Theory& theory, const std::set<std::string>& g,
                   const std::vector<const RewriteRule*>& rules) {
  for (const auto& f : theory.signature().names())
    if (g.count(f) && !algebraic_eligible(theory, f))
      return fails(f + " is neither a predicate symbol nor a constructor of a primitive predicate");
  for (const auto* r : rules)
    if (!is_algebraic(r->rhs)) return fails(r->name + ": right-hand side is not algebraic");
  return holds();
}

Property non_duplicating(const std::vector<const RewriteRule*>& rules) {
  for (const auto* r : rules) {
    for (const Variable& x : free_vars_ordered(r->rhs)) {
      std::size_t nl = count_occurrences(x, r->lhs), nr = count_occurrences(x, r->rhs);
      if (nr > nl)
        return fails(r->name + ": " + x.name() + " occurs " + std::to_string(nl) +
                     " time(s) in the left-hand side and " + std::to_string(nr) +
                     " in the right-hand side");
    }
  }
  return holds();
}

Property primitive(const Theory& theory, const std::set<std::string>& g,
                   const std::vector<const RewriteRule*>& rules) {
  for (const auto* r : rules) {
    Term t = r->rhs;
    while (t.is(TermKind::Abs)) t = t.body();
    Term head = spine(t).first;
    bool ok = head.is(TermKind::Symbol) &&
              (g.count(head.symbol_name()) || primitive_predicate(theory, head.symbol_name()));
    if (!ok)
      return fails(r->name + ": right-hand side " + to_string(r->rhs) +
                   " is not headed by a symbol of the system or a primitive predicate");
  }
  return holds();
}

Property simple(const Theory& theory, const std::vector<const RewriteRule*>& rules) {
  for (const auto* r : rules)
    for (std::size_t i = 0; i < r->lhs.args().size(); ++i)
      for (const auto& s : symbols_of(r->lhs.args()[i]))
        if (!theory.is_free(s))
          return fails(r->name + ": defined symbol " + s + " in argument " + std::to_string(i + 1));
  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = a + 1; b < rules.size(); ++b) {
      if (rules[a]->head() != rules[b]->head()) continue;
      if (unify(linearize(rules[a]->lhs), linearize(rules[b]->lhs)))
        return fails(rules[a]->name + " and " + rules[b]->name + " can both apply at the top");
    }
  for (const auto* r : rules)
    for (const Variable& y : free_vars_ordered(r->rhs)) {
      if (y.sort_class() != Sort::Box) continue;
      auto args = r->lhs.args();
      auto n = std::count_if(args.begin(), args.end(), [&](const Term& l) {
        return l.is(TermKind::Free) && l.variable() == y;
      });
      if (n != 1)
        return fails(r->name + ": predicate variable " + y.name() + " is " +
                     (n ? "several" : "no") + " argument(s) of the left-hand side");
    }
  return holds();
}

Property positive(const Theory& theory, const std::set<std::string>& g,
                  const std::vector<const RewriteRule*>& rules) {
  for (const auto* r : rules) {
    PolarityReport pol = polarity(theory, r->rhs);
    for (const auto& f : g)
      for (const Position& p : positions_of(r->rhs, f))
        if (!pol.positive.count(p))
          return fails(r->name + ": " + f + " at " + p.to_string() + " is not positive");
  }
  return holds();
}

Property recursive(const Theory& theory, const std::vector<const RewriteRule*>& rules,
                   std::size_t fuel, const SchemaCache* schemas) {
  for (const auto* r : rules) {
    SchemaResult local;
    const SchemaResult* s = nullptr;
    if (schemas) {
      if (auto it = schemas->find(r->name); it != schemas->end()) s = &it->second;
    }
    if (!s) {
      local = satisfies_general_schema(theory, *r, fuel);
      s = &local;
    }
    if (!s->satisfied) {
      std::string why = !s->well_formed.ok ? s->well_formed.failures.front().reason
                                           : s->closure.error;
      return fails(r->name + ": " + why);
    }
  }
  return holds();
}

Property safe(const Theory& theory, const std::vector<const RewriteRule*>& rules) {
  for (const auto* r : rules) {
    const SymbolDecl& d = theory.decl(r->head());
    Telescope tel = open_products(d.type, d.arity);
    std::map<Variable, Variable> seen;  // image -> X
    for (std::size_t k = 0; k < tel.vars.size(); ++k) {
      const Variable& x = tel.vars[k];
      if (x.sort_class() != Sort::Box) continue;
      bool occurs = occurs_free(x, tel.codomain);
      for (std::size_t m = k + 1; m < tel.types.size() && !occurs; ++m)
        occurs = occurs_free(x, tel.types[m]);
      if (!occurs) continue;
      Term img = subst_apply(r->lhs.args()[k], r->rho);
      if (!img.is(TermKind::Free) || img.variable().sort_class() != Sort::Box ||
          !r->env.contains(img.variable()))
        return fails(r->name + ": argument " + std::to_string(k + 1) + " (" + to_string(img) +
                     ") is not a predicate variable of the environment");
      auto [it, fresh] = seen.emplace(img.variable(), x);
      if (!fresh)
        return fails(r->name + ": arguments for " + it->second.name() + " and " + x.name() +
                     " are the same variable " + img.variable().name());
    }
  }
  return holds();
}

}  // namespace

SystemProperties system_properties(const Theory& theory, const std::set<std::string>& g,
                                   std::size_t fuel, const SchemaCache* schemas) {
  auto rules = rules_of(theory, g);
  SystemProperties p;
  p.algebraic = algebraic(theory, g, rules);
  p.non_duplicating = non_duplicating(rules);
  p.primitive = primitive(theory, g, rules);
  p.simple = simple(theory, rules);
  p.positive = positive(theory, g, rules);
  p.recursive = recursive(theory, rules, fuel, schemas);
  p.safe = safe(theory, rules);
  return p;
}

Partition partition_defined(const Theory& theory) {
  std::vector<std::string> defined;
  for (const auto& f : theory.signature().names())
    if (theory.is_defined(f)) defined.push_back(f);

  std::set<std::string> fa;
  for (const auto& f : defined) {
    if (theory.force_nonalgebraic.count(f)) continue;
    bool ok = theory.force_algebraic.count(f) || algebraic_eligible(theory, f);
    for (const auto* r : theory.rules_for(f)) ok = ok && is_algebraic(r->rhs);
    if (ok || theory.force_algebraic.count(f)) fa.insert(f);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& f : defined) {
      if (!fa.count(f) || theory.force_algebraic.count(f)) continue;
      for (const auto* r : theory.rules_for(f)) {
        auto syms = symbols_of(r->lhs);
        auto rs = symbols_of(r->rhs);
        syms.insert(rs.begin(), rs.end());
        bool mentions = std::any_of(syms.begin(), syms.end(), [&](const std::string& s) {
          return theory.is_defined(s) && !fa.count(s);
        });
        if (mentions) {
          fa.erase(f);
          changed = true;
          break;
        }
      }
    }
  }
  Partition p;
  for (const auto& f : defined) (fa.count(f) ? p.fa : p.fna).push_back(f);
  return p;
}

// ---------------------------------------------------------------------------
// A1-A4

namespace {

Outcome from_property(const Property& p) { return p.holds() ? Outcome::Pass : Outcome::Fail; }

Outcome worst(std::initializer_list<Outcome> os) {
  auto rank = [](Outcome o) {
    switch (o) {
      case Outcome::Pass: return 0;
      case Outcome::PassSufficient: return 1;
      case Outcome::Asserted: return 2;
      case Outcome::NotChecked: return 3;
      case Outcome::Fail: return 4;
    }
    return 4;
  };
  Outcome w = Outcome::Pass;
  for (Outcome o : os)
    if (rank(o) > rank(w)) w = o;
  return w;
}

}  // namespace

AdmissibilityReport check_admissible(const Theory& theory, std::size_t fuel, bool strict) {
  if (!theory.sealed()) throw Error(ErrorKind::Sealed, "admissibility needs a sealed theory");
  AdmissibilityReport rep;

  // Per-rule work first, concurrently; results are stored in rule order.
  std::vector<std::future<RuleReport>> jobs;
  for (const auto& r : theory.rules()) {
    jobs.push_back(std::async(std::launch::async, [&theory, &r, fuel] {
      RuleReport rr;
      rr.name = r.name;
      rr.s = check_type_preservation(theory, r, fuel);
      rr.schema = satisfies_general_schema(theory, r, fuel);
      return rr;
    }));
  }
  SchemaCache schemas;
  for (auto& j : jobs) {
    rep.rules.push_back(j.get());
    schemas.emplace(rep.rules.back().name, rep.rules.back().schema);
  }

  // A1
  rep.confluence = theory.confluence();
  switch (rep.confluence.level) {
    case ConfluenceLevel::Orthogonal:
    case ConfluenceLevel::Newman: rep.a1 = Outcome::Pass; break;
    case ConfluenceLevel::Asserted: rep.a1 = Outcome::Asserted; break;
    case ConfluenceLevel::Unknown: rep.a1 = Outcome::Fail; break;
  }

  // A2
  rep.precedence = check_precedence(theory);
  rep.structure = check_inductive_structure(theory);
  for (const auto& c : free_predicates(theory))
    rep.predicate_classes.emplace_back(c, classify_predicate(theory, c));
  rep.a2 = rep.precedence.ok && rep.structure.ok ? Outcome::Pass : Outcome::Fail;

  // A3
  std::set<std::string> dfbox;
  for (const auto& f : theory.signature().names())
    if (theory.is_defined(f) && theory.is_predicate_symbol(f)) {
      dfbox.insert(f);
      rep.defined_predicates.push_back(f);
    }
  rep.a3_properties = system_properties(theory, dfbox, fuel, &schemas);
  const auto& p3 = rep.a3_properties;
  if (p3.primitive.holds()) {
    rep.a3_branch = "primitive";
  } else if (p3.simple.holds() && p3.positive.holds()) {
    rep.a3_branch = "simple+positive";
  } else if (p3.simple.holds() && p3.recursive.holds()) {
    rep.a3_branch = "simple+recursive";
  }
  rep.a3 = rep.a3_branch.empty() ? Outcome::Fail : Outcome::Pass;

  // A4
  rep.partition = partition_defined(theory);
  std::set<std::string> fa(rep.partition.fa.begin(), rep.partition.fa.end());
  std::set<std::string> fna(rep.partition.fna.begin(), rep.partition.fna.end());
  rep.fa_properties = system_properties(theory, fa, fuel, &schemas);
  rep.fna_properties = system_properties(theory, fna, fuel, &schemas);
  auto fa_rules = rules_of(theory, fa);
  rep.termination = rpo_terminates(fa_rules, theory.precedence());
  if (rep.termination.proved)
    rep.fa_terminating = Outcome::Pass;
  else
    rep.fa_terminating = theory.assume_terminating ? Outcome::Asserted : Outcome::Fail;
  rep.fa_isolated = holds();
  for (const auto* r : fa_rules) {
    auto syms = symbols_of(r->lhs);
    auto rs = symbols_of(r->rhs);
    syms.insert(rs.begin(), rs.end());
    for (const auto& s : syms)
      if (fna.count(s) && rep.fa_isolated.holds())
        rep.fa_isolated = fails(r->name + ": " + s + " belongs to F_na");
  }
  rep.a4 = worst({from_property(rep.fa_properties.algebraic),
                  from_property(rep.fa_properties.non_duplicating), rep.fa_terminating,
                  from_property(rep.fa_isolated), from_property(rep.fna_properties.safe),
                  from_property(rep.fna_properties.recursive)});

  std::set<std::string> df(fa);
  df.insert(fna.begin(), fna.end());
  rep.properties = system_properties(theory, df, fuel, &schemas);

  // Overall.
  auto note = [&](const std::string& what, Outcome o) {
    if (o == Outcome::Asserted) rep.assertions.push_back(what);
    if (o == Outcome::PassSufficient) rep.sufficient.push_back(what);
    if (o == Outcome::Fail || o == Outcome::NotChecked) rep.failures.push_back(what);
  };
  note("A1", rep.a1);
  note("A2", rep.a2);
  note("A3", rep.a3);
  if (rep.fa_terminating == Outcome::Asserted) note("A4 termination", Outcome::Asserted);
  note("A4", rep.a4 == Outcome::Asserted ? Outcome::Pass : rep.a4);
  for (const auto& rr : rep.rules)
    for (std::size_t i = 0; i < rr.s.size(); ++i)
      note(rr.name + " S" + std::to_string(i + 1), rr.s[i].outcome);

  bool strict_fail = strict && (!rep.assertions.empty() || !rep.sufficient.empty());
  if (!rep.failures.empty() || strict_fail)
    rep.overall = Overall::Rejected;
  else if (!rep.assertions.empty())
    rep.overall = Overall::AdmissibleWithAssertions;
  else
    rep.overall = Overall::Admissible;
  return rep;
}

}  // namespace cac
