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

#include "cac/reduction.hpp"

#include <unordered_set>

#include "cac/error.hpp"
#include "cac/theory.hpp"

namespace cac {

// ---------------------------------------------------------------------------
// Matching and unification

namespace {

bool match_rec(const Term& p, const Term& s, Substitution& sigma) {
  if (p.is(TermKind::Free)) {
    if (const Term* bound = sigma.find(p.variable())) return *bound == s;
    sigma.bind(p.variable(), s);
    return true;
  }
  if (!p.is(TermKind::Symbol) || !s.is(TermKind::Symbol)) return false;
  if (p.symbol_name() != s.symbol_name() || p.args().size() != s.args().size()) return false;
  for (std::size_t i = 0; i < p.args().size(); ++i)
    if (!match_rec(p.args()[i], s.args()[i], sigma)) return false;
  return true;
}

class Unifier {
 public:
  bool unify(const Term& a0, const Term& b0) {
    Term a = walk(a0), b = walk(b0);
    if (a.is(TermKind::Free) && b.is(TermKind::Free) && a.variable() == b.variable()) return true;
    if (a.is(TermKind::Free)) return bind(a.variable(), b);
    if (b.is(TermKind::Free)) return bind(b.variable(), a);
    if (!a.is(TermKind::Symbol) || !b.is(TermKind::Symbol)) return a == b;
    if (a.symbol_name() != b.symbol_name() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
      if (!unify(a.args()[i], b.args()[i])) return false;
    return true;
  }

  Substitution solved() {
    Substitution out;
    for (const auto& [x, t] : bindings_.entries()) out.bind(x, resolve(t));
    return out;
  }

 private:
  Term walk(Term t) const {
    while (t.is(TermKind::Free)) {
      const Term* b = bindings_.find(t.variable());
      if (!b) break;
      t = *b;
    }
    return t;
  }

  bool occurs(const Variable& x, const Term& t) const {
    Term u = walk(t);
    if (u.is(TermKind::Free)) return u.variable() == x;
    for (const Term& k : u.children())
      if (occurs(x, k)) return true;
    return false;
  }

  bool bind(const Variable& x, const Term& t) {
    if (occurs(x, t)) return false;
    bindings_.bind(x, t);
    return true;
  }

  Term resolve(const Term& t) const {
    Term u = walk(t);
    if (!u.has_free_vars()) return u;
    if (u.is(TermKind::Symbol)) {
      std::vector<Term> args;
      for (const Term& a : u.args()) args.push_back(resolve(a));
      return Term::symbol(u.symbol_name(), std::move(args));
    }
    return u;
  }

  Substitution bindings_;
};

}  // namespace

std::optional<Substitution> match_first_order(const Term& pattern, const Term& subject) {
  Substitution sigma;
  if (!match_rec(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Unifier u;
  if (!u.unify(a, b)) return std::nullopt;
  return u.solved();
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

/// Contractions available at the root of u: rules first, then beta.
void root_steps(const Term& u, const Theory& theory, std::vector<std::pair<std::string, Term>>& out,
                bool first_only) {
  if (u.is(TermKind::Symbol) && theory.is_defined(u.symbol_name())) {
    for (const RewriteRule* r : theory.rules_for(u.symbol_name())) {
      if (auto sigma = match_first_order(r->lhs, u)) {
        out.emplace_back(r->name, subst_apply(r->rhs, *sigma));
        if (first_only) return;
      }
    }
  }
  if (u.is(TermKind::App) && u.head().is(TermKind::Abs))
    out.emplace_back("", instantiate(u.head().body(), u.arg()));
}

void collect_steps(const Term& t, const Term& whole, const Position& here, const Theory& theory,
                   std::vector<Step>& out) {
  std::vector<std::pair<std::string, Term>> at_root;
  root_steps(t, theory, at_root, false);
  for (auto& [rule, result] : at_root)
    out.push_back({here, rule, replace_at(whole, here, result)});
  auto kids = t.children();
  for (unsigned i = 0; i < kids.size(); ++i)
    collect_steps(kids[i], whole, here.child(i + 1), theory, out);
}

std::optional<Term> leftmost_outermost(const Term& t, const Theory& theory) {
  std::vector<std::pair<std::string, Term>> at_root;
  root_steps(t, theory, at_root, true);
  if (!at_root.empty()) return std::move(at_root.front().second);
  auto kids = t.children();
  for (unsigned i = 0; i < kids.size(); ++i) {
    if (auto r = leftmost_outermost(kids[i], theory))
      return replace_at(t, Position{i + 1}, *r);
  }
  return std::nullopt;
}

}  // namespace

std::vector<Step> one_steps(const Term& t, const Theory& theory) {
  std::vector<Step> out;
  collect_steps(t, t, Position{}, theory, out);
  return out;
}

std::vector<Term> reduce_one(const Term& t, const Theory& theory) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  for (Step& s : one_steps(t, theory))
    if (seen.insert(s.result).second) out.push_back(std::move(s.result));
  return out;
}

Term normalize(const Term& t, const Theory& theory, std::size_t fuel) {
  Term cur = t;
  for (std::size_t steps = 0;; ++steps) {
    auto next = leftmost_outermost(cur, theory);
    if (!next) return cur;
    if (steps >= fuel)
      throw FuelExhausted("normalization of " + to_string(t) + " exceeded " +
                          std::to_string(fuel) + " steps");
    cur = std::move(*next);
  }
}

bool joinable(const Term& t, const Term& u, const Theory& theory, std::size_t fuel) {
  if (t == u) return true;
  try {
    if (normalize(t, theory, fuel) == normalize(u, theory, fuel)) return true;
    if (theory.confluent()) return false;
  } catch (const FuelExhausted&) {
  }
  std::unordered_set<Term, TermHash> seen[2] = {{t}, {u}};
  std::vector<Term> frontier[2] = {{t}, {u}};
  std::size_t budget = 0;
  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side = frontier[0].empty() ? 1
               : frontier[1].empty() ? 0
               : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
    std::vector<Term> next;
    for (const Term& v : frontier[side]) {
      for (Term& w : reduce_one(v, theory)) {
        if (seen[1 - side].count(w)) return true;
        if (seen[side].insert(w).second) {
          if (++budget > fuel)
            throw FuelExhausted("joinability search for " + to_string(t) + " and " +
                                to_string(u) + " exceeded " + std::to_string(fuel) + " terms");
          next.push_back(std::move(w));
        }
      }
    }
    frontier[side] = std::move(next);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Critical pairs and confluence

const char* to_string(ConfluenceLevel level) {
  switch (level) {
    case ConfluenceLevel::Orthogonal: return "ORTHOGONAL";
    case ConfluenceLevel::Newman: return "NEWMAN";
    case ConfluenceLevel::Asserted: return "ASSERTED";
    case ConfluenceLevel::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

RewriteRule renamed_apart(const RewriteRule& r) {
  Substitution ren;
  for (const Variable& x : free_vars_ordered(r.lhs))
    ren.bind(x, Term::var(x.renamed(x.name() + "'")));
  RewriteRule out = r;
  out.lhs = subst_apply(r.lhs, ren);
  out.rhs = subst_apply(r.rhs, ren);
  return out;
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const std::vector<RewriteRule>& rules) {
  std::vector<CriticalPair> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const RewriteRule& outer = rules[i];
    for (std::size_t j = 0; j < rules.size(); ++j) {
      RewriteRule inner = renamed_apart(rules[j]);
      for (const Position& p : all_positions(outer.lhs)) {
        Term sub = subterm_at(outer.lhs, p);
        if (!sub.is(TermKind::Symbol)) continue;
        if (p.is_root() && j <= i) continue;
        auto sigma = unify(sub, inner.lhs);
        if (!sigma) continue;
        Term peak = subst_apply(outer.lhs, *sigma);
        out.push_back({peak, subst_apply(outer.rhs, *sigma),
                       replace_at(peak, p, subst_apply(inner.rhs, *sigma)), p, outer.name,
                       inner.name});
      }
    }
  }
  return out;
}

ConfluenceVerdict confluence_check(const Theory& theory, std::size_t fuel) {
  ConfluenceVerdict v;
  for (const auto& r : theory.rules()) {
    if (!is_left_linear(r.lhs)) {
      v.left_linear = false;
      v.non_left_linear_rules.push_back(r.name);
    }
  }
  auto pairs = critical_pairs(theory.rules());
  if (v.left_linear && pairs.empty()) {
    v.level = ConfluenceLevel::Orthogonal;
    v.note = "left-linear without critical pairs";
    return v;
  }
  bool all_joined = true;
  for (auto& cp : pairs) {
    CriticalPairOutcome o{cp, std::nullopt, Term{}, Term{}};
    try {
      o.left_normal = normalize(cp.left_reduct, theory, fuel);
      o.right_normal = normalize(cp.right_reduct, theory, fuel);
      o.joinable = o.left_normal == o.right_normal;
    } catch (const FuelExhausted&) {
    }
    all_joined = all_joined && o.joinable.value_or(false);
    v.pairs.push_back(std::move(o));
  }
  std::vector<const RewriteRule*> all;
  for (const auto& r : theory.rules()) all.push_back(&r);
  v.termination = rpo_terminates(all, theory.precedence());
  if (v.left_linear && all_joined && v.termination->proved) {
    v.level = ConfluenceLevel::Newman;
    v.note = "left-linear, terminating by RPO, all critical pairs joinable";
  } else if (v.left_linear && all_joined && theory.assume_terminating) {
    v.level = ConfluenceLevel::Asserted;
    v.note = "critical pairs joinable; termination assumed";
  } else if (theory.assume_confluent) {
    v.level = ConfluenceLevel::Asserted;
    v.note = "confluence assumed";
  } else {
    v.level = ConfluenceLevel::Unknown;
    if (!v.left_linear)
      v.note = "not left-linear";
    else if (!all_joined)
      v.note = "some critical pair is not joinable within fuel";
    else
      v.note = "no termination proof";
  }
  return v;
}

}  // namespace cac
