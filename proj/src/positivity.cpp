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

#include "cac/positivity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cac/signature.hpp"
#include "cac/theory.hpp"

namespace cac {

namespace {

void add_prefixed(PositionSet& into, unsigned i, const PositionSet& from) {
  for (const Position& p : from) into.insert(p.prefixed(i));
}

struct Polarity {
  const Theory& theory;
  std::vector<bool> bound;  // predicate-level flag per enclosing binder

  PolarityReport run(const Term& t) {
    PolarityReport r;
    r.subject = t;
    switch (t.kind()) {
      case TermKind::Sort:
      case TermKind::Free:
      case TermKind::Bound:
        r.positive.insert(Position::root());
        return r;
      case TermKind::Symbol: {
        r.positive.insert(Position::root());
        const std::string& c = t.symbol_name();
        if (!theory.is_free_predicate(c)) return r;
        for (unsigned i : theory.structure().ind_of(c)) {
          if (i == 0 || i > t.args().size()) continue;
          PolarityReport s = run(t.args()[i - 1]);
          add_prefixed(r.positive, i, s.positive);
          add_prefixed(r.negative, i, s.negative);
          add_prefixed(r.neutral, i, s.neutral);
        }
        return r;
      }
      case TermKind::Prod: {
        PolarityReport v = run(t.domain());
        bound.push_back(is_kind(t.domain()));
        PolarityReport w = run(t.body());
        bound.pop_back();
        add_prefixed(r.positive, 1, v.negative);
        add_prefixed(r.negative, 1, v.positive);
        add_prefixed(r.neutral, 1, v.neutral);
        add_prefixed(r.positive, 2, w.positive);
        add_prefixed(r.negative, 2, w.negative);
        add_prefixed(r.neutral, 2, w.neutral);
        return r;
      }
      case TermKind::Abs: {
        PositionSet all;
        for (const Position& p : all_positions(t.domain())) all.insert(p.prefixed(1));
        bound.push_back(is_kind(t.domain()));
        PolarityReport w = run(t.body());
        bound.pop_back();
        r.positive = all;
        r.negative = all;
        r.neutral = all;
        add_prefixed(r.positive, 2, w.positive);
        add_prefixed(r.negative, 2, w.negative);
        add_prefixed(r.neutral, 2, w.neutral);
        return r;
      }
      case TermKind::App: {
        PolarityReport v = run(t.head());
        add_prefixed(r.positive, 1, v.positive);
        add_prefixed(r.negative, 1, v.negative);
        add_prefixed(r.neutral, 1, v.neutral);
        if (!is_predicate_term(theory, t.arg(), bound)) {
          for (const Position& p : all_positions(t.arg())) {
            Position q = p.prefixed(2);
            r.positive.insert(q);
            r.negative.insert(q);
            r.neutral.insert(q);
          }
        }
        return r;
      }
    }
    return r;
  }
};

struct Telescoped {
  std::vector<Variable> vars;
  std::vector<Term> types;
  std::vector<Term> outputs;  // v
};

// tau_c = (y:U) C(v), opened.
Telescoped open_constructor(const Theory& theory, const std::string& c) {
  const SymbolDecl& d = theory.decl(c);
  Telescope tel = open_products(d.type, d.arity);
  Telescoped out{tel.vars, tel.types, {}};
  for (const Term& v : tel.codomain.args()) out.outputs.push_back(v);
  return out;
}

bool occurs_symbol_in_class(const Theory& theory, const Term& u, const std::string& d) {
  for (const auto& e : symbols_of(u))
    if (e == d || theory.precedence().equivalent(e, d)) return true;
  return false;
}

std::vector<std::string> class_members(const Theory& theory, const std::string& c) {
  std::vector<std::string> out;
  for (const auto& d : free_predicates(theory))
    if (d == c || theory.precedence().equivalent(d, c)) out.push_back(d);
  return out;
}

struct Classifier {
  const Theory& theory;
  std::map<std::string, PredicateClass> memo;
  std::set<std::string> visiting;

  // Visits U_j for every constructor of every D =_F C, j in Acc(d).
  template <class F>
  bool all_accessible(const std::string& c, F&& pred) {
    for (const auto& d : class_members(theory, c)) {
      for (const auto& ctor : constructors_of(theory, d)) {
        Telescoped tel = open_constructor(theory, ctor);
        for (unsigned j : theory.structure().acc_of(ctor)) {
          if (j == 0 || j > tel.types.size()) continue;
          if (!pred(d, tel.types[j - 1])) return false;
        }
      }
    }
    return true;
  }

  bool basic(const std::string& c) {
    return all_accessible(c, [&](const std::string& d, const Term& u) {
      if (!occurs_symbol_in_class(theory, u, d)) return true;
      return u.is(TermKind::Symbol) && (u.symbol_name() == d ||
                                        theory.precedence().equivalent(u.symbol_name(), d));
    });
  }

  bool strictly_positive(const std::string& c) {
    return all_accessible(c, [&](const std::string& d, const Term& u) {
      if (!occurs_symbol_in_class(theory, u, d)) return true;
      Telescope tel = open_products(u);
      const Term& e = tel.codomain;
      if (!e.is(TermKind::Symbol)) return false;
      if (e.symbol_name() != d && !theory.precedence().equivalent(e.symbol_name(), d)) return false;
      for (const Term& v : tel.types)
        if (occurs_symbol_in_class(theory, v, d)) return false;
      return true;
    });
  }

  bool primitive(const std::string& c) {
    return all_accessible(c, [&](const std::string& d, const Term& u) {
      if (!u.is(TermKind::Symbol)) return false;
      const std::string& e = u.symbol_name();
      if (e == d || theory.precedence().equivalent(e, d)) return true;
      if (!theory.precedence().greater(d, e) || !theory.is_free_predicate(e)) return false;
      PredicateClass k = classify(e);
      return k == PredicateClass::Primitive || k == PredicateClass::Basic;
    });
  }

  PredicateClass classify(const std::string& c) {
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    // E <_F D keeps recursion well-founded on an acyclic precedence; the
    // guard only protects against a cyclic one.
    if (!visiting.insert(c).second) return PredicateClass::General;
    PredicateClass k = PredicateClass::General;
    if (basic(c))
      k = primitive(c) ? PredicateClass::Primitive : PredicateClass::Basic;
    else if (strictly_positive(c))
      k = PredicateClass::StrictlyPositive;
    visiting.erase(c);
    memo[c] = k;
    return k;
  }
};

}  // namespace

bool is_predicate_term(const Theory& theory, const Term& t, const std::vector<bool>& bound) {
  switch (t.kind()) {
    case TermKind::Sort:
    case TermKind::Prod:
      return true;
    case TermKind::Free:
      return t.variable().sort_class() == Sort::Box;
    case TermKind::Bound:
      return t.index() < bound.size() && bound[bound.size() - 1 - t.index()];
    case TermKind::Symbol:
      return theory.is_predicate_symbol(t.symbol_name());
    case TermKind::App:
      return is_predicate_term(theory, t.head(), bound);
    case TermKind::Abs: {
      std::vector<bool> inner = bound;
      inner.push_back(is_kind(t.domain()));
      return is_predicate_term(theory, t.body(), inner);
    }
  }
  return false;
}

PolarityReport polarity(const Theory& theory, const Term& type) {
  return Polarity{theory, {}}.run(type);
}

std::vector<std::string> free_predicates(const Theory& theory) {
  std::vector<std::string> out;
  for (const auto& n : theory.signature().names())
    if (theory.is_free_predicate(n)) out.push_back(n);
  return out;
}

InductiveCheck check_inductive_structure(const Theory& theory) {
  InductiveCheck res;
  auto report = [&](InductiveViolation v) {
    res.ok = false;
    res.violations.push_back(std::move(v));
  };
  const Precedence& prec = theory.precedence();
  std::vector<std::string> frees = free_predicates(theory);

  for (const auto& c : frees) {
    const SymbolDecl& cd = theory.decl(c);
    Telescope ctel = open_products(cd.type, cd.arity);
    const auto& ind = theory.structure().ind_of(c);
    for (unsigned i : ind) {
      if (i == 0 || i > ctel.vars.size() || ctel.vars[i - 1].sort_class() != Sort::Box)
        report({c, "", i, "Ind", Position::root(),
                "inductive position " + std::to_string(i) + " is not a predicate argument of " + c});
    }

    for (const auto& ctor : constructors_of(theory, c)) {
      Telescoped tel = open_constructor(theory, ctor);
      // I1
      for (unsigned i : ind) {
        if (i == 0 || i > tel.outputs.size()) continue;
        const Term& v = tel.outputs[i - 1];
        if (!v.is(TermKind::Free) || v.variable().sort_class() != Sort::Box)
          report({c, ctor, i, "I1", Position{i},
                  "output argument " + std::to_string(i) + " of " + ctor + " is " + to_string(v) +
                      ", not a predicate variable"});
      }
      for (unsigned j : theory.structure().acc_of(ctor)) {
        if (j == 0 || j > tel.types.size()) {
          report({c, ctor, j, "Acc", Position::root(),
                  "accessible position " + std::to_string(j) + " exceeds the arity of " + ctor});
          continue;
        }
        const Term& u = tel.types[j - 1];
        PolarityReport pol = polarity(theory, u);
        auto not_positive = [&](const std::vector<Position>& ps) -> std::optional<Position> {
          for (const auto& p : ps)
            if (!pol.positive.count(p)) return p;
          return std::nullopt;
        };
        // I2
        for (unsigned i : ind) {
          if (i == 0 || i > tel.outputs.size() || !tel.outputs[i - 1].is(TermKind::Free)) continue;
          const Variable& x = tel.outputs[i - 1].variable();
          if (auto p = not_positive(positions_of(u, x)))
            report({c, ctor, j, "I2", *p,
                    x.name() + " occurs non-positively in " + to_string(u)});
        }
        for (const auto& d : frees) {
          auto occ = positions_of(u, d);
          if (occ.empty()) continue;
          // I3
          if (d == c || prec.equivalent(d, c)) {
            if (auto p = not_positive(occ))
              report({c, ctor, j, "I3", *p, d + " occurs non-positively in " + to_string(u)});
          }
          // I4
          if (prec.greater(d, c))
            report({c, ctor, j, "I4", occ.front(),
                    d + " is greater than " + c + " but occurs in " + to_string(u)});
        }
        // I5
        for (const auto& f : symbols_of(u)) {
          if (theory.is_predicate_symbol(f) && theory.is_defined(f))
            report({c, ctor, j, "I5", positions_of(u, f).front(),
                    "defined predicate " + f + " occurs in " + to_string(u)});
        }
        // I6
        for (const Variable& x : free_vars_ordered(u)) {
          if (x.sort_class() != Sort::Box) continue;
          bool param = std::any_of(tel.outputs.begin(), tel.outputs.end(), [&](const Term& v) {
            return v.is(TermKind::Free) && v.variable() == x;
          });
          if (!param)
            report({c, ctor, j, "I6", positions_of(u, x).front(),
                    "predicate variable " + x.name() + " of argument " + std::to_string(j) +
                        " is not a parameter of " + c});
        }
      }
    }
  }
  return res;
}

const char* to_string(PredicateClass c) {
  switch (c) {
    case PredicateClass::Primitive: return "PRIMITIVE";
    case PredicateClass::Basic: return "BASIC";
    case PredicateClass::StrictlyPositive: return "STRICTLY_POSITIVE";
    case PredicateClass::General: return "GENERAL";
  }
  return "?";
}

PredicateClass classify_predicate(const Theory& theory, std::string_view c) {
  Classifier k{theory, {}, {}};
  return k.classify(std::string(c));
}

}  // namespace cac
