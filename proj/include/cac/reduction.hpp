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

#ifndef CAC_REDUCTION_HPP
#define CAC_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cac/rpo.hpp"
#include "cac/rule.hpp"
#include "cac/term.hpp"

namespace cac {

class Theory;

/// First-order matching of an algebraic pattern. Repeated pattern variables
/// need alpha-equal images.
std::optional<Substitution> match_first_order(const Term& pattern,
                                              const Term& subject);

/// Most general unifier of two algebraic terms (with occurs check).
std::optional<Substitution> unify(const Term& a, const Term& b);

/// One contraction: the redex position, the rule name ("" for beta) and the
/// resulting term.
struct Step {
  Position position;
  std::string rule;
  Term result;
};

std::vector<Step> one_steps(const Term& t, const Theory& theory);
/// All distinct one-step reducts, in position order.
std::vector<Term> reduce_one(const Term& t, const Theory& theory);

/// Leftmost-outermost normal form; rules (in order) before beta at the
/// same position. Raises FuelExhausted after `fuel` steps.
Term normalize(const Term& t, const Theory& theory, std::size_t fuel);

/// Common reduct search. Raises FuelExhausted when neither a meet nor
/// exhaustion of both reduction graphs happens within fuel.
bool joinable(const Term& t, const Term& u, const Theory& theory,
              std::size_t fuel);

struct CriticalPair {
  Term peak;
  /// Reduct by the rule applied at the root of the peak.
  Term left_reduct;
  /// Reduct by the rule applied at `position`.
  Term right_reduct;
  Position position;
  std::string outer_rule;
  std::string inner_rule;
};

std::vector<CriticalPair> critical_pairs(const std::vector<RewriteRule>& rules);

enum class ConfluenceLevel { Orthogonal, Newman, Asserted, Unknown };
const char* to_string(ConfluenceLevel level);

struct CriticalPairOutcome {
  CriticalPair pair;
  /// Unset when fuel ran out.
  std::optional<bool> joinable;
  Term left_normal;
  Term right_normal;
};

struct ConfluenceVerdict {
  ConfluenceLevel level = ConfluenceLevel::Unknown;
  bool left_linear = true;
  std::vector<std::string> non_left_linear_rules;
  std::vector<CriticalPairOutcome> pairs;
  std::optional<RpoResult> termination;
  std::string note;

  bool positive() const { return level != ConfluenceLevel::Unknown; }
};

ConfluenceVerdict confluence_check(const Theory& theory, std::size_t fuel);

}  // namespace cac

#endif  // CAC_REDUCTION_HPP
