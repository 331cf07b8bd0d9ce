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

#ifndef CAC_POSITIVITY_HPP
#define CAC_POSITIVITY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cac/term.hpp"

namespace cac {

class Theory;

struct PolarityReport {
  PositionSet positive;
  PositionSet negative;
  /// Positions placed in both sets by the abstraction-domain and
  /// object-argument clauses. positive and negative only meet here.
  PositionSet neutral;
  Term subject;
};

PolarityReport polarity(const Theory& theory, const Term& type);

/// Whether t lives at the predicate level (its type would be a kind).
/// Decided syntactically; `bound` gives the level of de Bruijn variables,
/// innermost last.
bool is_predicate_term(const Theory& theory, const Term& t,
                       const std::vector<bool>& bound = {});

struct InductiveViolation {
  std::string predicate;
  std::string constructor;  // empty for Ind-level conditions
  unsigned argument = 0;    // j in Acc(c), or i in Ind(C) for I1
  std::string condition;    // "I1" .. "I6", "Ind", "Acc"
  Position position;
  std::string detail;
};

struct InductiveCheck {
  bool ok = true;
  std::vector<InductiveViolation> violations;
};

InductiveCheck check_inductive_structure(const Theory& theory);

enum class PredicateClass { Primitive, Basic, StrictlyPositive, General };
const char* to_string(PredicateClass c);

/// Strongest class that holds for the free predicate C.
PredicateClass classify_predicate(const Theory& theory, std::string_view c);

/// Free predicate symbols in declaration order.
std::vector<std::string> free_predicates(const Theory& theory);

}  // namespace cac

#endif  // CAC_POSITIVITY_HPP
