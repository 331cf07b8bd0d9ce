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

// Syntax-directed engine shared by the typing judgment and the computable
// closure. With a closure context, variables of Gamma0 are typed by (acc)
// and symbol applications by (symb<) / (symb=).

#ifndef CAC_SRC_JUDGE_HPP
#define CAC_SRC_JUDGE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "cac/theory.hpp"
#include "cac/typing.hpp"

namespace cac::detail {

class Judge {
 public:
  Judge(const Theory& theory, std::size_t fuel, const ClosureReplayContext* closure = nullptr)
      : theory_(theory), fuel_(fuel), closure_(closure) {}

  Typed infer(const Environment& env, const Term& t);
  Derivation check(const Environment& env, const Term& t, const Term& type);
  /// Gamma |- T : s, converting the inferred type to a sort if needed.
  std::pair<Sort, Derivation> sort_of(const Environment& env, const Term& type);
  void env_valid(const Environment& env);

 private:
  Derivation node(const Environment& env, const Term& subject, const Term& type, RuleTag tag,
                  std::vector<Derivation> premises, std::string note = {});
  Typed infer_variable(const Environment& env, const Term& t);
  Typed infer_symbol(const Environment& env, const Term& t);
  Typed infer_app(const Environment& env, const Term& t);
  Derivation type_premise(const Environment& env, const Variable& x, const Term& type,
                          bool acc);

  const Theory& theory_;
  std::size_t fuel_;
  const ClosureReplayContext* closure_;
  std::map<std::uint64_t, Derivation> premise_cache_;
  std::set<std::uint64_t> in_progress_;
};

}  // namespace cac::detail

#endif  // CAC_SRC_JUDGE_HPP
