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

// Accessibility, derived types, well-formed rules and the computable
// closure check behind the General Schema.

#ifndef CAC_GENERAL_SCHEMA_HPP
#define CAC_GENERAL_SCHEMA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cac/rule.hpp"
#include "cac/term.hpp"
#include "cac/typing.hpp"

namespace cac {

class Theory;

/// One accessibility step: <c(u), C(v)gamma> |>1 <u_j, U_j gamma> for
/// j in Acc(c). Empty unless t is headed by a constructor of the predicate
/// heading T.
std::vector<AccPair> acc_step(const Theory& theory, const Term& t, const Term& type);

/// All pairs reachable in one or more steps, in breadth-first order.
std::vector<AccPair> acc_closure(const Theory& theory, const AccPair& from);

/// tau(l, p) for p a non-root position of the algebraic term l.
Term derived_type(const Theory& theory, const Term& lhs, const Position& p);

/// <l_i, T_i gamma> for the arguments of l = f(l1..ln).
std::vector<AccPair> lhs_pairs(const Theory& theory, const Term& lhs);

/// U gamma rho: the type both sides of the rule must have.
Term rule_type(const Theory& theory, const RewriteRule& rule);

struct WellFormedWitness {
  Variable var;
  unsigned argument = 0;
  /// Position of the variable inside l_i.
  Position path;
  Term derived;
  std::vector<AccPair> chain;
};

struct WellFormedFailure {
  Variable var;
  std::string reason;
};

struct WellFormedResult {
  bool ok = true;
  std::vector<WellFormedWitness> witnesses;
  std::vector<WellFormedFailure> failures;
};

WellFormedResult check_well_formed(const Theory& theory, const RewriteRule& rule);

/// Lexicographic extension of |>1+ (strict part compares term components)
/// with alpha-equality of pairs as the equality.
bool args_greater(const Theory& theory, std::span<const AccPair> lhs,
                  std::span<const AccPair> callee);

/// "<l_k, T_k> > <u_k, U_k>" for the first differing component, or empty.
std::string describe_decrease(std::span<const AccPair> lhs, std::span<const AccPair> callee);

struct ClosureResult {
  bool ok = false;
  Derivation derivation;
  std::string error;
};

/// Gamma |-c r : U gamma rho.
ClosureResult cc_check(const Theory& theory, const RewriteRule& rule, std::size_t fuel);

ClosureReplayContext closure_context(const Theory& theory, const RewriteRule& rule);

struct SchemaResult {
  bool satisfied = false;
  WellFormedResult well_formed;
  ClosureResult closure;
};

SchemaResult satisfies_general_schema(const Theory& theory, const RewriteRule& rule,
                                      std::size_t fuel);

}  // namespace cac

#endif  // CAC_GENERAL_SCHEMA_HPP
