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

#ifndef CAC_RULE_HPP
#define CAC_RULE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cac/term.hpp"

namespace cac {

/// Ordered list of typed variable bindings.
class Environment {
 public:
  struct Binding {
    Variable var;
    Term type;
  };

  Environment() = default;
  Environment(std::initializer_list<Binding> init) : bindings_(init) {}

  /// Raises InvalidArgument when x is already bound.
  void push(const Variable& x, Term type);
  Environment extended(const Variable& x, Term type) const;

  const Term* find(const Variable& x) const;
  bool contains(const Variable& x) const { return find(x) != nullptr; }
  /// Index of x, or size() when absent.
  std::size_t index_of(const Variable& x) const;
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::vector<Binding>& bindings() const { return bindings_; }
  const Binding& operator[](std::size_t i) const { return bindings_[i]; }
  Environment prefix(std::size_t n) const;
  std::vector<Variable> domain() const;

  friend bool operator==(const Environment& a, const Environment& b);

 private:
  std::vector<Binding> bindings_;
};

std::string to_string(const Environment& env);

/// A term with its formally assigned type, as used by accessibility.
struct AccPair {
  Term term;
  Term type;

  friend bool operator==(const AccPair&, const AccPair&) = default;
};

std::string to_string(const AccPair& p);

/// (l -> r, Gamma, rho). `annotated` records whether Gamma came from the
/// source or was inferred.
struct RewriteRule {
  std::string name;
  Term lhs;
  Term rhs;
  Environment env;
  Substitution rho;
  bool annotated = false;

  const std::string& head() const { return lhs.symbol_name(); }
};

/// Shape conditions: algebraic lhs headed by a symbol, FV(r) within FV(l).
/// Raises IllFormedRule.
void validate_rule_shape(const RewriteRule& rule);

bool is_left_linear(const Term& lhs);

}  // namespace cac

#endif  // CAC_RULE_HPP
