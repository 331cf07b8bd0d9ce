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

// Recursive path ordering with lexicographic status over the signature
// precedence, used as a sufficient termination check for algebraic rules.

#ifndef CAC_RPO_HPP
#define CAC_RPO_HPP

#include <string>
#include <vector>

#include "cac/rule.hpp"
#include "cac/signature.hpp"
#include "cac/term.hpp"

namespace cac {

/// s >_rpo t on algebraic terms.
bool rpo_greater(const Term& s, const Term& t, const Precedence& prec);

struct RpoResult {
  bool proved = false;
  /// One line per rule: "lhs > rhs (reason)".
  std::vector<std::string> trace;
  /// Name of the first rule without an ordering proof.
  std::string failed_rule;
};

RpoResult rpo_terminates(const std::vector<const RewriteRule*>& rules,
                         const Precedence& prec);

}  // namespace cac

#endif  // CAC_RPO_HPP
