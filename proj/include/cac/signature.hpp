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

#ifndef CAC_SIGNATURE_HPP
#define CAC_SIGNATURE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cac/term.hpp"

namespace cac {

class Theory;

struct SymbolDecl {
  std::string name;
  /// s such that |- tau_f : s. Box means a predicate symbol.
  Sort sort = Sort::Star;
  std::size_t arity = 0;
  Term type;
};

/// Quasi-ordering on symbols, given as user pragmas plus default edges.
/// Queries are only meaningful after finalize().
class Precedence {
 public:
  void add_symbol(const std::string& name);
  void declare_greater(const std::string& a, const std::string& b);
  void declare_equivalent(const std::string& a, const std::string& b);
  /// A default edge; dropped when a pragma mentions the pair or when it
  /// would close a cycle.
  void add_default(const std::string& greater, const std::string& lesser);

  void finalize();
  bool finalized() const { return finalized_; }

  bool greater(std::string_view a, std::string_view b) const;
  bool equivalent(std::string_view a, std::string_view b) const;
  bool greater_or_equivalent(std::string_view a, std::string_view b) const {
    return greater(a, b) || equivalent(a, b);
  }

  /// Symbols around a cycle of user pragmas (first repeated at the end), or
  /// empty when the strict part is acyclic.
  const std::vector<std::string>& cycle() const { return cycle_; }
  /// Equivalence classes with more than one member, in declaration order.
  std::vector<std::vector<std::string>> nontrivial_classes() const;
  /// All pairs (a, b) with a > b, sorted by name.
  std::vector<std::pair<std::string, std::string>> strict_pairs() const;

 private:
  std::size_t index(std::string_view name) const;
  std::size_t find(std::size_t i) const;

  std::vector<std::string> symbols_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::pair<std::size_t, std::size_t>> user_greater_;
  std::vector<std::pair<std::size_t, std::size_t>> defaults_;
  std::set<std::pair<std::size_t, std::size_t>> mentioned_;

  bool finalized_ = false;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<bool>> reach_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::string> cycle_;
};

/// Ind(C) for free predicate symbols and Acc(c) for constructors. Missing
/// entries mean the empty set.
struct InductiveStructure {
  std::map<std::string, std::set<unsigned>, std::less<>> ind;
  std::map<std::string, std::set<unsigned>, std::less<>> acc;

  const std::set<unsigned>& ind_of(std::string_view c) const;
  const std::set<unsigned>& acc_of(std::string_view c) const;
};

class Signature {
 public:
  /// Raw insertion: shape and duplicate checks only, no kind checking.
  void add(SymbolDecl d);

  const SymbolDecl* find(std::string_view name) const;
  const SymbolDecl& at(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  /// Symbol names in declaration order.
  const std::vector<std::string>& names() const { return order_; }

  Precedence& precedence() { return precedence_; }
  const Precedence& precedence() const { return precedence_; }
  InductiveStructure& structure() { return structure_; }
  const InductiveStructure& structure() const { return structure_; }

  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

 private:
  std::map<std::string, SymbolDecl, std::less<>> decls_;
  std::vector<std::string> order_;
  Precedence precedence_;
  InductiveStructure structure_;
  bool sealed_ = false;
};

/// Kind-checks tau_f in the empty environment and adds f to the theory's
/// signature. Fills in d.sort.
const SymbolDecl& declare_symbol(Theory& theory, SymbolDecl d);

struct SymbolClasses {
  std::set<std::string> free;
  std::set<std::string> defined;
};
SymbolClasses classify_symbols(const Theory& theory);

/// Co(C): object symbols whose type is exactly alpha_c products ending in
/// C(v).
std::vector<std::string> constructors_of(const Theory& theory,
                                         std::string_view c);

struct PrecedenceCheck {
  bool ok = true;
  std::vector<std::string> cycle;
};
PrecedenceCheck check_precedence(const Theory& theory);

}  // namespace cac

#endif  // CAC_SIGNATURE_HPP
