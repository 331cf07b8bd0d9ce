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

// Terms of the calculus in a locally nameless encoding: bound variables are
// de Bruijn indices, free variables are named `Variable`s with a unique id.
// Binder display names are kept only for printing, so structural equality
// of two terms is alpha-equivalence.

#ifndef CAC_TERM_HPP
#define CAC_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cac {

enum class Sort : std::uint8_t { Star, Box };

const char* to_string(Sort s);

/// A free variable. Identity is the id; the display name is cosmetic and the
/// sort class (X^* or X^box) is fixed at creation.
class Variable {
 public:
  Variable() = default;

  static Variable fresh(std::string name, Sort sort_class);

  std::uint64_t id() const { return data_ ? data_->id : 0; }
  const std::string& name() const;
  Sort sort_class() const { return data_ ? data_->sort_class : Sort::Star; }
  explicit operator bool() const { return data_ != nullptr; }

  /// Same display name, new identity, given sort class.
  Variable renamed(std::string name) const;
  Variable with_sort(Sort sort_class) const;

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.id() == b.id();
  }
  friend std::strong_ordering operator<=>(const Variable& a,
                                          const Variable& b) {
    return a.id() <=> b.id();
  }

 private:
  struct Data {
    std::uint64_t id;
    std::string name;
    Sort sort_class;
  };
  explicit Variable(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

enum class TermKind : std::uint8_t { Sort, Bound, Free, Symbol, Abs, Prod, App };

/// Immutable, shareable term handle. Children are numbered from 1 in
/// positions: symbol arguments in order, (domain, body) for binders and
/// (head, argument) for applications.
class Term {
 public:
  Term() = default;

  static Term sort(Sort s);
  static Term star() { return sort(Sort::Star); }
  static Term box() { return sort(Sort::Box); }
  static Term bound(std::uint32_t index);
  static Term var(const Variable& x);
  static Term symbol(std::string name, std::vector<Term> args = {});
  /// Raw binder constructors: `body` refers to the binder as index 0.
  static Term abs(std::string binder, Term domain, Term body);
  static Term prod(std::string binder, Term domain, Term body);
  static Term app(Term head, Term arg);
  /// Binder constructors over a free variable: `x` is abstracted in `body`.
  static Term lambda(const Variable& x, Term domain, const Term& body);
  static Term pi(const Variable& x, Term domain, const Term& body);
  static Term arrow(Term domain, const Term& codomain);
  /// head a1 ... an
  static Term apply(Term head, std::span<const Term> args);

  explicit operator bool() const { return node_ != nullptr; }

  TermKind kind() const;
  bool is(TermKind k) const { return node_ && kind() == k; }
  bool is_sort(Sort s) const;
  bool is_binder() const { return is(TermKind::Abs) || is(TermKind::Prod); }

  Sort sort_value() const;
  std::uint32_t index() const;
  const Variable& variable() const;
  const std::string& symbol_name() const;
  const std::string& binder_name() const;
  std::span<const Term> children() const;
  std::span<const Term> args() const { return children(); }
  const Term& domain() const;
  const Term& body() const;
  const Term& head() const;
  const Term& arg() const;

  std::size_t hash() const;
  std::size_t size() const;
  /// One more than the largest dangling de Bruijn index, or 0.
  std::uint32_t loose_bound() const;
  bool locally_closed() const { return loose_bound() == 0; }
  bool has_free_vars() const;

  /// Alpha-equivalence (structural equality of the nameless encoding).
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Node n);
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// A path of 1-based child indices; the empty path is the root.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<unsigned> path) : path_(path) {}
  explicit Position(std::vector<unsigned> path) : path_(std::move(path)) {}

  static Position root() { return {}; }

  bool is_root() const { return path_.empty(); }
  std::size_t depth() const { return path_.size(); }
  const std::vector<unsigned>& path() const { return path_; }
  unsigned front() const { return path_.front(); }
  Position tail() const;
  Position child(unsigned i) const;
  Position prefixed(unsigned i) const;
  Position concat(const Position& rest) const;
  bool is_prefix_of(const Position& other) const;

  /// "ε" for the root, otherwise dot-separated indices.
  std::string to_string() const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<unsigned> path_;
};

using PositionSet = std::set<Position>;

/// Finite map from variables to terms, applied simultaneously and without
/// capture.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Variable, Term>> init)
      : map_(init) {}

  void bind(const Variable& x, Term t) { map_[x] = std::move(t); }
  const Term* find(const Variable& x) const;
  bool contains(const Variable& x) const { return map_.count(x) != 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  void erase(const Variable& x) { map_.erase(x); }

  std::vector<Variable> domain() const;
  std::vector<Variable> domain(Sort s) const;
  const std::map<Variable, Term>& entries() const { return map_; }

  /// theta;sigma : x -> (x theta) sigma, plus sigma on variables outside
  /// dom(theta).
  Substitution then(const Substitution& sigma) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Variable, Term> map_;
};

using VariableSet = std::set<Variable>;

/// FV(t), or FV^s(t) when a sort filter is given.
VariableSet free_vars(const Term& t, std::optional<Sort> filter = {});
/// Free variables in order of first occurrence (deterministic for output).
std::vector<Variable> free_vars_ordered(const Term& t);
bool occurs_free(const Variable& x, const Term& t);
/// Number of free occurrences of x in t.
std::size_t count_occurrences(const Variable& x, const Term& t);

Term subst_apply(const Term& t, const Substitution& theta);

/// Raises ErrorKind::InvalidPosition when p is not a position of t.
Term subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& u);
bool is_position_of(const Term& t, const Position& p);
std::vector<Position> all_positions(const Term& t);

std::vector<Position> positions_of(const Term& t, std::string_view symbol);
std::vector<Position> positions_of(const Term& t, const Variable& x);

bool alpha_eq(const Term& t, const Term& u);
bool is_algebraic(const Term& t);
/// Every symbol name occurring in t.
std::set<std::string> symbols_of(const Term& t);

// -- de Bruijn plumbing ------------------------------------------------------

/// Adds `amount` to every dangling index >= cutoff.
Term shift(const Term& t, std::uint32_t amount, std::uint32_t cutoff = 0);
/// body{0 := value}: substitutes the outermost dangling index.
Term instantiate(const Term& body, const Term& value);
/// Opens a binder body with a free variable.
Term open(const Term& body, const Variable& x);
/// Abstracts x into index 0 (inverse of open).
Term close(const Term& t, const Variable& x);

/// A product telescope opened with fresh variables.
struct Telescope {
  std::vector<Variable> vars;
  std::vector<Term> types;
  Term codomain;
};

/// Opens at most `max` leading products of `t` (all of them by default).
Telescope open_products(const Term& t,
                        std::size_t max = static_cast<std::size_t>(-1));
/// Number of leading products.
std::size_t product_count(const Term& t);
/// Domains T_i{x_<i := args} and the codomain U{x := args} of a product
/// instantiated by `args` (args.size() <= product_count).
struct Instantiated {
  std::vector<Term> domains;
  Term codomain;
};
Instantiated instantiate_products(const Term& t, std::span<const Term> args);

/// Syntactic kind test: a product telescope ending in `*`.
bool is_kind(const Term& t);
/// Sort class of a variable declared with type `type`.
Sort sort_class_of_type(const Term& type);

/// Splits an application spine: t = head a1 ... an.
std::pair<Term, std::vector<Term>> spine(const Term& t);

/// Surface-syntax rendering (parseable by the surface parser for locally
/// closed terms).
std::string to_string(const Term& t);

}  // namespace cac

#endif  // CAC_TERM_HPP
