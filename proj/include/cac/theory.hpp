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

// A theory bundles the signature, the rewrite rules and the user's
// assumptions. Everything downstream (typing, reduction, the admissibility
// pipeline) reads a Theory; after seal() it is immutable and may be shared
// between threads.

#ifndef CAC_THEORY_HPP
#define CAC_THEORY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cac/rule.hpp"
#include "cac/signature.hpp"

namespace cac {

struct ConfluenceVerdict;

inline constexpr std::size_t kDefaultFuel = 10000;

class Theory {
 public:
  Theory();

  Signature& signature() { return sig_; }
  const Signature& signature() const { return sig_; }
  const SymbolDecl& decl(std::string_view name) const { return sig_.at(name); }
  const Precedence& precedence() const { return sig_.precedence(); }
  const InductiveStructure& structure() const { return sig_.structure(); }

  /// Validates the rule shape and appends it. Raises Sealed after seal().
  void add_rule(RewriteRule rule);
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::vector<const RewriteRule*> rules_for(std::string_view f) const;
  const RewriteRule* find_rule(std::string_view name) const;

  bool assume_confluent = false;
  bool assume_terminating = false;
  /// partition_defined overrides.
  std::set<std::string> force_algebraic;
  std::set<std::string> force_nonalgebraic;
  /// Extra names resolving to an existing symbol (deduplicated motives).
  std::map<std::string, std::string> aliases;
  std::size_t fuel = kDefaultFuel;

  /// Computes the precedence (pragmas plus defaults) and freezes the theory.
  void seal();
  bool sealed() const { return sig_.sealed(); }

  bool is_defined(std::string_view f) const;
  bool is_free(std::string_view f) const { return !is_defined(f); }
  bool is_predicate_symbol(std::string_view f) const;
  bool is_free_predicate(std::string_view f) const {
    return is_predicate_symbol(f) && is_free(f);
  }
  /// C when c belongs to Co(C) for a free predicate symbol C.
  std::optional<std::string> constructor_output(std::string_view c) const;

  /// A1 verdict, computed once on first use (sealed theories only).
  const ConfluenceVerdict& confluence() const;
  /// True when the verdict lets conversion use normalize-and-compare.
  bool confluent() const;

 private:
  struct Cache;
  void invalidate();

  Signature sig_;
  std::vector<RewriteRule> rules_;
  std::set<std::string, std::less<>> defined_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace cac

#endif  // CAC_THEORY_HPP
