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

#include "cac/term.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <unordered_set>

#include "cac/error.hpp"

namespace cac {

const char* to_string(Sort s) { return s == Sort::Star ? "*" : "□"; }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::InvalidPosition: return "invalid-position";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::DuplicateSymbol: return "duplicate-symbol";
    case ErrorKind::UnknownSymbol: return "unknown-symbol";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::SortError: return "sort-error";
    case ErrorKind::NotAProduct: return "not-a-product";
    case ErrorKind::TypeMismatch: return "type-mismatch";
    case ErrorKind::ConversionFailure: return "conversion-failure";
    case ErrorKind::FuelExhausted: return "fuel-exhausted";
    case ErrorKind::NoDerivation: return "no-derivation";
    case ErrorKind::IllFormedRule: return "ill-formed-rule";
    case ErrorKind::MissingAnnotation: return "missing-annotation";
    case ErrorKind::Inductive: return "inductive-error";
    case ErrorKind::Sealed: return "sealed";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "error";
}

// ---------------------------------------------------------------------------
// Variable

namespace {
std::atomic<std::uint64_t> next_variable_id{1};
const std::string kEmptyName;
}  // namespace

Variable Variable::fresh(std::string name, Sort sort_class) {
  auto d = std::make_shared<const Data>(
      Data{next_variable_id.fetch_add(1), std::move(name), sort_class});
  return Variable(std::move(d));
}

const std::string& Variable::name() const {
  return data_ ? data_->name : kEmptyName;
}

Variable Variable::renamed(std::string name) const {
  return fresh(std::move(name), sort_class());
}

Variable Variable::with_sort(Sort sort_class) const {
  return fresh(name(), sort_class);
}

// ---------------------------------------------------------------------------
// Term nodes

struct Term::Node {
  TermKind kind = TermKind::Sort;
  Sort sort = Sort::Star;
  std::uint32_t index = 0;
  Variable var;
  std::string name;  // symbol name, or binder display name
  std::vector<Term> kids;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::uint32_t loose = 0;
  bool has_free = false;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::make(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
  switch (n.kind) {
    case TermKind::Sort:
      h = mix(h, static_cast<std::size_t>(n.sort));
      break;
    case TermKind::Bound:
      h = mix(h, n.index);
      n.loose = n.index + 1;
      break;
    case TermKind::Free:
      h = mix(h, std::hash<std::uint64_t>{}(n.var.id()));
      n.has_free = true;
      break;
    case TermKind::Symbol:
      h = mix(h, std::hash<std::string>{}(n.name));
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    const Node& k = *n.kids[i].node_;
    h = mix(h, k.hash);
    n.size += k.size;
    n.has_free = n.has_free || k.has_free;
    bool under_binder = (n.kind == TermKind::Abs || n.kind == TermKind::Prod) && i == 1;
    std::uint32_t l = under_binder ? (k.loose > 0 ? k.loose - 1 : 0) : k.loose;
    n.loose = std::max(n.loose, l);
  }
  n.hash = h;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::sort(Sort s) {
  Node n;
  n.kind = TermKind::Sort;
  n.sort = s;
  return make(std::move(n));
}

Term Term::bound(std::uint32_t index) {
  Node n;
  n.kind = TermKind::Bound;
  n.index = index;
  return make(std::move(n));
}

Term Term::var(const Variable& x) {
  Node n;
  n.kind = TermKind::Free;
  n.var = x;
  return make(std::move(n));
}

Term Term::symbol(std::string name, std::vector<Term> args) {
  Node n;
  n.kind = TermKind::Symbol;
  n.name = std::move(name);
  n.kids = std::move(args);
  return make(std::move(n));
}

Term Term::abs(std::string binder, Term domain, Term body) {
  Node n;
  n.kind = TermKind::Abs;
  n.name = std::move(binder);
  n.kids = {std::move(domain), std::move(body)};
  return make(std::move(n));
}

Term Term::prod(std::string binder, Term domain, Term body) {
  Node n;
  n.kind = TermKind::Prod;
  n.name = std::move(binder);
  n.kids = {std::move(domain), std::move(body)};
  return make(std::move(n));
}

Term Term::app(Term head, Term arg) {
  Node n;
  n.kind = TermKind::App;
  n.kids = {std::move(head), std::move(arg)};
  return make(std::move(n));
}

Term Term::lambda(const Variable& x, Term domain, const Term& body) {
  return abs(x.name(), std::move(domain), close(body, x));
}

Term Term::pi(const Variable& x, Term domain, const Term& body) {
  return prod(x.name(), std::move(domain), close(body, x));
}

Term Term::arrow(Term domain, const Term& codomain) {
  return prod("_", std::move(domain), shift(codomain, 1));
}

Term Term::apply(Term head, std::span<const Term> args) {
  for (const Term& a : args) head = app(std::move(head), a);
  return head;
}

TermKind Term::kind() const { return node_->kind; }
bool Term::is_sort(Sort s) const { return is(TermKind::Sort) && node_->sort == s; }
Sort Term::sort_value() const { return node_->sort; }
std::uint32_t Term::index() const { return node_->index; }
const Variable& Term::variable() const { return node_->var; }
const std::string& Term::symbol_name() const { return node_->name; }
const std::string& Term::binder_name() const { return node_->name; }
std::span<const Term> Term::children() const {
  if (!node_) return {};
  return {node_->kids.data(), node_->kids.size()};
}
const Term& Term::domain() const { return node_->kids[0]; }
const Term& Term::body() const { return node_->kids[1]; }
const Term& Term::head() const { return node_->kids[0]; }
const Term& Term::arg() const { return node_->kids[1]; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }
std::size_t Term::size() const { return node_ ? node_->size : 0; }
std::uint32_t Term::loose_bound() const { return node_ ? node_->loose : 0; }
bool Term::has_free_vars() const { return node_ && node_->has_free; }

bool operator==(const Term& a, const Term& b) {
  const Term::Node* x = a.node_.get();
  const Term::Node* y = b.node_.get();
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  switch (x->kind) {
    case TermKind::Sort:
      return x->sort == y->sort;
    case TermKind::Bound:
      return x->index == y->index;
    case TermKind::Free:
      return x->var == y->var;
    case TermKind::Symbol:
      if (x->name != y->name) return false;
      break;
    default:
      break;
  }
  if (x->kids.size() != y->kids.size()) return false;
  for (std::size_t i = 0; i < x->kids.size(); ++i)
    if (!(x->kids[i] == y->kids[i])) return false;
  return true;
}

bool alpha_eq(const Term& t, const Term& u) { return t == u; }

// ---------------------------------------------------------------------------
// Positions

Position Position::tail() const {
  return Position(std::vector<unsigned>(path_.begin() + 1, path_.end()));
}

Position Position::child(unsigned i) const {
  auto p = path_;
  p.push_back(i);
  return Position(std::move(p));
}

Position Position::prefixed(unsigned i) const {
  std::vector<unsigned> p;
  p.reserve(path_.size() + 1);
  p.push_back(i);
  p.insert(p.end(), path_.begin(), path_.end());
  return Position(std::move(p));
}

Position Position::concat(const Position& rest) const {
  auto p = path_;
  p.insert(p.end(), rest.path_.begin(), rest.path_.end());
  return Position(std::move(p));
}

bool Position::is_prefix_of(const Position& other) const {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::string Position::to_string() const {
  if (path_.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(path_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Substitution

const Term* Substitution::find(const Variable& x) const {
  auto it = map_.find(x);
  return it == map_.end() ? nullptr : &it->second;
}

std::vector<Variable> Substitution::domain() const {
  std::vector<Variable> d;
  for (const auto& [x, _] : map_) d.push_back(x);
  return d;
}

std::vector<Variable> Substitution::domain(Sort s) const {
  std::vector<Variable> d;
  for (const auto& [x, _] : map_)
    if (x.sort_class() == s) d.push_back(x);
  return d;
}

Substitution Substitution::then(const Substitution& sigma) const {
  Substitution out;
  for (const auto& [x, t] : map_) out.bind(x, subst_apply(t, sigma));
  for (const auto& [x, t] : sigma.map_)
    if (!contains(x)) out.bind(x, t);
  return out;
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void collect_free(const Term& t, std::optional<Sort> filter, VariableSet& out) {
  if (!t.has_free_vars()) return;
  if (t.is(TermKind::Free)) {
    if (!filter || t.variable().sort_class() == *filter) out.insert(t.variable());
    return;
  }
  for (const Term& k : t.children()) collect_free(k, filter, out);
}

void collect_ordered(const Term& t, std::vector<Variable>& out,
                     std::unordered_set<std::uint64_t>& seen) {
  if (!t.has_free_vars()) return;
  if (t.is(TermKind::Free)) {
    if (seen.insert(t.variable().id()).second) out.push_back(t.variable());
    return;
  }
  for (const Term& k : t.children()) collect_ordered(k, out, seen);
}

}  // namespace

VariableSet free_vars(const Term& t, std::optional<Sort> filter) {
  VariableSet out;
  collect_free(t, filter, out);
  return out;
}

std::vector<Variable> free_vars_ordered(const Term& t) {
  std::vector<Variable> out;
  std::unordered_set<std::uint64_t> seen;
  collect_ordered(t, out, seen);
  return out;
}

bool occurs_free(const Variable& x, const Term& t) {
  if (!t.has_free_vars()) return false;
  if (t.is(TermKind::Free)) return t.variable() == x;
  for (const Term& k : t.children())
    if (occurs_free(x, k)) return true;
  return false;
}

std::size_t count_occurrences(const Variable& x, const Term& t) {
  if (!t.has_free_vars()) return 0;
  if (t.is(TermKind::Free)) return t.variable() == x ? 1 : 0;
  std::size_t n = 0;
  for (const Term& k : t.children()) n += count_occurrences(x, k);
  return n;
}

std::set<std::string> symbols_of(const Term& t) {
  std::set<std::string> out;
  std::function<void(const Term&)> go = [&](const Term& u) {
    if (u.is(TermKind::Symbol)) out.insert(u.symbol_name());
    for (const Term& k : u.children()) go(k);
  };
  go(t);
  return out;
}

// ---------------------------------------------------------------------------
// Rebuilding helpers

namespace {

Term rebuild(const Term& t, std::vector<Term> kids) {
  switch (t.kind()) {
    case TermKind::Symbol: return Term::symbol(t.symbol_name(), std::move(kids));
    case TermKind::Abs: return Term::abs(t.binder_name(), std::move(kids[0]), std::move(kids[1]));
    case TermKind::Prod: return Term::prod(t.binder_name(), std::move(kids[0]), std::move(kids[1]));
    case TermKind::App: return Term::app(std::move(kids[0]), std::move(kids[1]));
    default: return t;
  }
}

/// Applies f to every child, passing the binder depth of that child.
template <typename F>
Term map_children(const Term& t, std::uint32_t depth, F&& f) {
  auto kids = t.children();
  std::vector<Term> out;
  out.reserve(kids.size());
  bool changed = false;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::uint32_t d = (t.is_binder() && i == 1) ? depth + 1 : depth;
    out.push_back(f(kids[i], d));
    changed = changed || !(out.back().hash() == kids[i].hash() && out.back() == kids[i]);
  }
  if (!changed) return t;
  return rebuild(t, std::move(out));
}

Term shift_rec(const Term& t, std::uint32_t amount, std::uint32_t cutoff) {
  if (t.loose_bound() <= cutoff) return t;
  if (t.is(TermKind::Bound)) return Term::bound(t.index() + amount);
  return map_children(t, cutoff, [&](const Term& k, std::uint32_t c) {
    return shift_rec(k, amount, c);
  });
}

Term instantiate_rec(const Term& t, const Term& value, std::uint32_t depth) {
  if (t.loose_bound() <= depth) return t;
  if (t.is(TermKind::Bound)) {
    if (t.index() == depth) return shift_rec(value, depth, 0);
    return Term::bound(t.index() - 1);
  }
  return map_children(t, depth, [&](const Term& k, std::uint32_t d) {
    return instantiate_rec(k, value, d);
  });
}

Term close_rec(const Term& t, const Variable& x, std::uint32_t depth) {
  if (!t.has_free_vars() && t.loose_bound() <= depth) return t;
  if (t.is(TermKind::Free)) return t.variable() == x ? Term::bound(depth) : t;
  if (t.is(TermKind::Bound)) return t.index() >= depth ? Term::bound(t.index() + 1) : t;
  return map_children(t, depth, [&](const Term& k, std::uint32_t d) {
    return close_rec(k, x, d);
  });
}

Term subst_rec(const Term& t, const Substitution& theta, std::uint32_t depth) {
  if (!t.has_free_vars()) return t;
  if (t.is(TermKind::Free)) {
    const Term* r = theta.find(t.variable());
    return r ? shift_rec(*r, depth, 0) : t;
  }
  return map_children(t, depth, [&](const Term& k, std::uint32_t d) {
    return subst_rec(k, theta, d);
  });
}

}  // namespace

Term shift(const Term& t, std::uint32_t amount, std::uint32_t cutoff) {
  if (amount == 0) return t;
  return shift_rec(t, amount, cutoff);
}

Term instantiate(const Term& body, const Term& value) {
  return instantiate_rec(body, value, 0);
}

Term open(const Term& body, const Variable& x) {
  return instantiate(body, Term::var(x));
}

Term close(const Term& t, const Variable& x) { return close_rec(t, x, 0); }

Term subst_apply(const Term& t, const Substitution& theta) {
  if (theta.empty()) return t;
  return subst_rec(t, theta, 0);
}

// ---------------------------------------------------------------------------
// Positions in terms

bool is_position_of(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (unsigned i : p.path()) {
    auto kids = cur->children();
    if (i == 0 || i > kids.size()) return false;
    cur = &kids[i - 1];
  }
  return true;
}

Term subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (unsigned i : p.path()) {
    auto kids = cur->children();
    if (i == 0 || i > kids.size())
      throw Error(ErrorKind::InvalidPosition,
                  "position " + p.to_string() + " is not a position of " + to_string(t));
    cur = &kids[i - 1];
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const std::vector<unsigned>& path, std::size_t at,
                 const Term& u, const Position& full, const Term& whole) {
  if (at == path.size()) return u;
  auto kids = t.children();
  unsigned i = path[at];
  if (i == 0 || i > kids.size())
    throw Error(ErrorKind::InvalidPosition,
                "position " + full.to_string() + " is not a position of " + to_string(whole));
  std::vector<Term> out(kids.begin(), kids.end());
  out[i - 1] = replace_rec(kids[i - 1], path, at + 1, u, full, whole);
  return rebuild(t, std::move(out));
}

void positions_rec(const Term& t, Position& here, std::vector<Position>& out) {
  out.push_back(here);
  auto kids = t.children();
  for (unsigned i = 0; i < kids.size(); ++i) {
    Position next = here.child(i + 1);
    positions_rec(kids[i], next, out);
  }
}

template <typename Pred>
void find_rec(const Term& t, const Position& here, Pred&& pred, std::vector<Position>& out) {
  if (pred(t)) out.push_back(here);
  auto kids = t.children();
  for (unsigned i = 0; i < kids.size(); ++i) find_rec(kids[i], here.child(i + 1), pred, out);
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& u) {
  return replace_rec(t, p.path(), 0, u, p, t);
}

std::vector<Position> all_positions(const Term& t) {
  std::vector<Position> out;
  Position root;
  positions_rec(t, root, out);
  return out;
}

std::vector<Position> positions_of(const Term& t, std::string_view symbol) {
  std::vector<Position> out;
  find_rec(t, Position{}, [&](const Term& u) {
    return u.is(TermKind::Symbol) && u.symbol_name() == symbol;
  }, out);
  return out;
}

std::vector<Position> positions_of(const Term& t, const Variable& x) {
  std::vector<Position> out;
  find_rec(t, Position{}, [&](const Term& u) {
    return u.is(TermKind::Free) && u.variable() == x;
  }, out);
  return out;
}

bool is_algebraic(const Term& t) {
  if (t.is(TermKind::Free)) return true;
  if (!t.is(TermKind::Symbol)) return false;
  for (const Term& a : t.args())
    if (!is_algebraic(a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Telescopes

Telescope open_products(const Term& t, std::size_t max) {
  Telescope tel;
  Term cur = t;
  while (tel.vars.size() < max && cur.is(TermKind::Prod)) {
    Term dom = cur.domain();
    Variable x = Variable::fresh(cur.binder_name(), sort_class_of_type(dom));
    tel.vars.push_back(x);
    tel.types.push_back(dom);
    cur = open(cur.body(), x);
  }
  tel.codomain = cur;
  return tel;
}

std::size_t product_count(const Term& t) {
  std::size_t n = 0;
  const Term* cur = &t;
  while (cur->is(TermKind::Prod)) {
    ++n;
    cur = &cur->body();
  }
  return n;
}

Instantiated instantiate_products(const Term& t, std::span<const Term> args) {
  Instantiated out;
  Term cur = t;
  for (const Term& a : args) {
    if (!cur.is(TermKind::Prod))
      throw Error(ErrorKind::ArityMismatch,
                  "type " + to_string(t) + " has fewer products than arguments");
    out.domains.push_back(cur.domain());
    cur = instantiate(cur.body(), a);
  }
  out.codomain = cur;
  return out;
}

bool is_kind(const Term& t) {
  const Term* cur = &t;
  while (cur->is(TermKind::Prod)) cur = &cur->body();
  return cur->is_sort(Sort::Star);
}

Sort sort_class_of_type(const Term& type) {
  return is_kind(type) ? Sort::Box : Sort::Star;
}

std::pair<Term, std::vector<Term>> spine(const Term& t) {
  std::vector<Term> args;
  Term cur = t;
  while (cur.is(TermKind::App)) {
    args.push_back(cur.arg());
    cur = cur.head();
  }
  std::reverse(args.begin(), args.end());
  return {cur, std::move(args)};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool refers_to(const Term& t, std::uint32_t index) {
  if (t.loose_bound() <= index) return false;
  if (t.is(TermKind::Bound)) return t.index() == index;
  auto kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::uint32_t d = (t.is_binder() && i == 1) ? index + 1 : index;
    if (refers_to(kids[i], d)) return true;
  }
  return false;
}

void names_in(const Term& t, std::set<std::string>& out) {
  if (t.is(TermKind::Free)) out.insert(t.variable().name());
  if (t.is(TermKind::Symbol)) out.insert(t.symbol_name());
  for (const Term& k : t.children()) names_in(k, out);
}

class Printer {
 public:
  std::string out;

  void print(const Term& t, int level) {
    switch (t.kind()) {
      case TermKind::Sort:
        out += to_string(t.sort_value());
        return;
      case TermKind::Bound:
        if (t.index() < names_.size())
          out += names_[names_.size() - 1 - t.index()];
        else
          out += "#" + std::to_string(t.index() - names_.size());
        return;
      case TermKind::Free:
        out += t.variable().name().empty() ? "_" : t.variable().name();
        return;
      case TermKind::Symbol: {
        out += t.symbol_name();
        if (t.args().empty()) return;
        out += '(';
        bool first = true;
        for (const Term& a : t.args()) {
          if (!first) out += ", ";
          first = false;
          print(a, 0);
        }
        out += ')';
        return;
      }
      case TermKind::App:
        if (level > 1) out += '(';
        print(t.head(), 1);
        out += ' ';
        print(t.arg(), 2);
        if (level > 1) out += ')';
        return;
      case TermKind::Prod:
      case TermKind::Abs:
        print_binder(t, level);
        return;
    }
  }

 private:
  std::vector<std::string> names_;

  std::string choose_name(const Term& t) {
    std::string base = t.binder_name();
    if (base.empty() || base == "_") base = t.is(TermKind::Abs) ? "x" : "x";
    std::set<std::string> avoid;
    names_in(t.body(), avoid);
    avoid.insert(names_.begin(), names_.end());
    if (!avoid.count(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!avoid.count(cand)) return cand;
    }
  }

  void print_binder(const Term& t, int level) {
    bool dependent = t.is(TermKind::Abs) || refers_to(t.body(), 0);
    if (level > 0) out += '(';
    if (t.is(TermKind::Prod) && !dependent) {
      print(t.domain(), 1);
      out += " -> ";
      names_.push_back("_");
      print(t.body(), 0);
      names_.pop_back();
    } else {
      std::string name = choose_name(t);
      out += t.is(TermKind::Abs) ? "fun (" : "(";
      out += name;
      out += " : ";
      print(t.domain(), 0);
      out += t.is(TermKind::Abs) ? ") => " : ") -> ";
      names_.push_back(name);
      print(t.body(), 0);
      names_.pop_back();
    }
    if (level > 0) out += ')';
  }
};

}  // namespace

std::string to_string(const Term& t) {
  if (!t) return "<null>";
  Printer p;
  p.print(t, 0);
  return p.out;
}

}  // namespace cac
