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

#include "cac/general_schema.hpp"

#include <deque>

#include "cac/error.hpp"
#include "cac/theory.hpp"
#include "judge.hpp"

namespace cac {

namespace {

// <c(u), T> |>1 <u_j, U_j gamma> for the single index j, if accessible.
std::optional<AccPair> acc_step_at(const Theory& theory, const Term& t, const Term& type,
                                   unsigned j) {
  if (!t.is(TermKind::Symbol) || !type.is(TermKind::Symbol)) return std::nullopt;
  auto out = theory.constructor_output(t.symbol_name());
  if (!out || *out != type.symbol_name()) return std::nullopt;
  if (!theory.structure().acc_of(t.symbol_name()).count(j)) return std::nullopt;
  const SymbolDecl& d = theory.decl(t.symbol_name());
  if (j == 0 || j > t.args().size()) return std::nullopt;
  Instantiated inst = instantiate_products(d.type, t.args());
  return AccPair{t.args()[j - 1], inst.domains[j - 1]};
}

bool strictly_accessible(const Theory& theory, const AccPair& from, const Term& target) {
  for (const AccPair& p : acc_closure(theory, from))
    if (p.term == target) return true;
  return false;
}

}  // namespace

std::vector<AccPair> acc_step(const Theory& theory, const Term& t, const Term& type) {
  std::vector<AccPair> out;
  if (!t.is(TermKind::Symbol)) return out;
  for (unsigned j : theory.structure().acc_of(t.symbol_name()))
    if (auto p = acc_step_at(theory, t, type, j)) out.push_back(*p);
  return out;
}

std::vector<AccPair> acc_closure(const Theory& theory, const AccPair& from) {
  std::vector<AccPair> seen;
  std::deque<AccPair> queue{from};
  while (!queue.empty()) {
    AccPair cur = queue.front();
    queue.pop_front();
    for (AccPair& next : acc_step(theory, cur.term, cur.type)) {
      bool dup = false;
      for (const auto& s : seen) dup = dup || s == next;
      if (dup) continue;
      seen.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

Term derived_type(const Theory& theory, const Term& lhs, const Position& p) {
  if (p.is_root()) throw Error(ErrorKind::InvalidPosition, "derived type at the root");
  Term cur = lhs;
  Term type;
  for (unsigned i : p.path()) {
    if (!cur.is(TermKind::Symbol))
      throw Error(ErrorKind::InvalidPosition,
                  "position " + p.to_string() + " passes through a non-symbol node");
    if (i == 0 || i > cur.args().size())
      throw Error(ErrorKind::InvalidPosition, "position " + p.to_string() + " is not in " +
                                                  to_string(lhs));
    const SymbolDecl& d = theory.decl(cur.symbol_name());
    type = instantiate_products(d.type, cur.args()).domains[i - 1];
    cur = cur.args()[i - 1];
  }
  return type;
}

std::vector<AccPair> lhs_pairs(const Theory& theory, const Term& lhs) {
  const SymbolDecl& d = theory.decl(lhs.symbol_name());
  Instantiated inst = instantiate_products(d.type, lhs.args());
  std::vector<AccPair> out;
  for (std::size_t i = 0; i < lhs.args().size(); ++i)
    out.push_back({lhs.args()[i], inst.domains[i]});
  return out;
}

Term rule_type(const Theory& theory, const RewriteRule& rule) {
  const SymbolDecl& d = theory.decl(rule.head());
  return subst_apply(instantiate_products(d.type, rule.lhs.args()).codomain, rule.rho);
}

WellFormedResult check_well_formed(const Theory& theory, const RewriteRule& rule) {
  WellFormedResult res;
  auto pairs = lhs_pairs(theory, rule.lhs);
  for (const auto& b : rule.env.bindings()) {
    std::optional<WellFormedWitness> found;
    std::string reason = "does not occur in the left-hand side";
    for (unsigned i = 1; i <= pairs.size() && !found; ++i) {
      for (const Position& q : positions_of(pairs[i - 1].term, b.var)) {
        AccPair cur = pairs[i - 1];
        std::vector<AccPair> chain{cur};
        bool ok = true;
        for (unsigned j : q.path()) {
          auto next = acc_step_at(theory, cur.term, cur.type, j);
          if (!next) {
            reason = "occurrence at " + q.prefixed(i).to_string() + " is not accessible: argument " +
                     std::to_string(j) + " of " + to_string(cur.term) + " is not accessible";
            ok = false;
            break;
          }
          cur = *next;
          chain.push_back(cur);
        }
        if (!ok) continue;
        Term derived = cur.type;
        Term corrected = subst_apply(derived, rule.rho);
        if (!(corrected == b.type)) {
          reason = "derived type " + to_string(derived) + " at " + q.prefixed(i).to_string() +
                   " does not match the declared type " + to_string(b.type);
          continue;
        }
        found = WellFormedWitness{b.var, i, q, derived, std::move(chain)};
        break;
      }
    }
    if (found) {
      res.witnesses.push_back(std::move(*found));
    } else {
      res.ok = false;
      res.failures.push_back({b.var, b.var.name() + " " + reason});
    }
  }
  return res;
}

bool args_greater(const Theory& theory, std::span<const AccPair> lhs,
                  std::span<const AccPair> callee) {
  std::size_t n = std::min(lhs.size(), callee.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs[k] == callee[k]) continue;
    return strictly_accessible(theory, lhs[k], callee[k].term);
  }
  return false;
}

std::string describe_decrease(std::span<const AccPair> lhs, std::span<const AccPair> callee) {
  std::size_t n = std::min(lhs.size(), callee.size());
  for (std::size_t k = 0; k < n; ++k)
    if (!(lhs[k] == callee[k])) return to_string(lhs[k]) + " > " + to_string(callee[k]);
  return {};
}

ClosureReplayContext closure_context(const Theory& theory, const RewriteRule& rule) {
  return {rule.env, rule.head(), lhs_pairs(theory, rule.lhs)};
}

ClosureResult cc_check(const Theory& theory, const RewriteRule& rule, std::size_t fuel) {
  ClosureResult res;
  ClosureReplayContext ctx = closure_context(theory, rule);
  try {
    detail::Judge j(theory, fuel, &ctx);
    res.derivation = j.check(rule.env, rule.rhs, rule_type(theory, rule));
    res.ok = true;
  } catch (const Error& e) {
    res.error = e.what();
  }
  return res;
}

SchemaResult satisfies_general_schema(const Theory& theory, const RewriteRule& rule,
                                      std::size_t fuel) {
  SchemaResult res;
  res.well_formed = check_well_formed(theory, rule);
  res.closure = cc_check(theory, rule, fuel);
  res.satisfied = res.well_formed.ok && res.closure.ok;
  return res;
}

}  // namespace cac
