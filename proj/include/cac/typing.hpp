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

// The typing judgment and its derivations. The same derivation type is used
// for the computable closure, which adds the acc, symb< and symb= tags.

#ifndef CAC_TYPING_HPP
#define CAC_TYPING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cac/rule.hpp"
#include "cac/term.hpp"

namespace cac {

class Theory;

enum class RuleTag { Ax, Symb, Var, Weak, Prod, Abs, App, Conv, Acc, SymbLt, SymbEq };
const char* to_string(RuleTag tag);

struct DerivationNode;
using Derivation = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
  Environment env;
  Term subject;
  Term type;
  RuleTag tag = RuleTag::Ax;
  std::vector<Derivation> premises;
  /// Side conditions in words (declaration used, decreasing pair, ...).
  std::string note;
};

struct Typed {
  Term type;
  Derivation derivation;
};

/// Gamma |- t : T. Checks env_valid first.
Typed infer(const Theory& theory, const Environment& env, const Term& t,
            std::size_t fuel);

/// Gamma |- t : T with conversion at the root. Raises TypeMismatch carrying
/// both normal forms.
Derivation check(const Theory& theory, const Environment& env, const Term& t,
                 const Term& type, std::size_t fuel);

/// Every binding's type is sorted in its prefix, with a matching sort class.
void env_valid(const Theory& theory, const Environment& env, std::size_t fuel);

/// Conversion used by (conv): alpha-equality, then joinability.
bool convertible(const Theory& theory, const Term& a, const Term& b,
                 std::size_t fuel);

struct SubstitutionFailure {
  Variable var;
  std::string message;
};
/// theta : Gamma -> Delta. Empty result means ok.
std::vector<SubstitutionFailure> check_substitution(const Theory& theory,
                                                    const Substitution& theta,
                                                    const Environment& gamma,
                                                    const Environment& delta,
                                                    std::size_t fuel);

/// Closure context needed to replay acc / symb< / symb= nodes.
struct ClosureReplayContext {
  Environment gamma0;
  std::string head;
  std::vector<AccPair> lhs_pairs;
};

/// Re-validates every node against its rule. Returns an explanation of the
/// first bad node, or nullopt when the derivation is valid.
std::optional<std::string> replay(const Theory& theory, const Derivation& d,
                                  std::size_t fuel,
                                  const ClosureReplayContext* closure = nullptr);

std::size_t derivation_size(const Derivation& d);

}  // namespace cac

#endif  // CAC_TYPING_HPP
