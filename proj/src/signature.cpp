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

#include "cac/signature.hpp"

#include <algorithm>
#include <deque>

#include "cac/error.hpp"
#include "cac/reduction.hpp"
#include "cac/theory.hpp"
#include "cac/typing.hpp"

namespace cac {

// ---------------------------------------------------------------------------
// Precedence

void Precedence::add_symbol(const std::string& name) {
  if (index_.count(name)) return;
  index_.emplace(name, symbols_.size());
  parent_.push_back(symbols_.size());
  symbols_.push_back(name);
  finalized_ = false;
}

std::size_t Precedence::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw Error(ErrorKind::UnknownSymbol, "unknown symbol in precedence: " + std::string(name));
  return it->second;
}

std::size_t Precedence::find(std::size_t i) const {
  while (parent_[i] != i) i = parent_[i];
  return i;
}

void Precedence::declare_greater(const std::string& a, const std::string& b) {
  std::size_t i = index(a), j = index(b);
  user_greater_.emplace_back(i, j);
  mentioned_.emplace(std::min(i, j), std::max(i, j));
  finalized_ = false;
}

void Precedence::declare_equivalent(const std::string& a, const std::string& b) {
  std::size_t i = index(a), j = index(b);
  parent_[find(i)] = find(j);
  mentioned_.emplace(std::min(i, j), std::max(i, j));
  finalized_ = false;
}

void Precedence::add_default(const std::string& greater, const std::string& lesser) {
  defaults_.emplace_back(index(greater), index(lesser));
  finalized_ = false;
}

void Precedence::finalize() {
  std::size_t n = symbols_.size();
  std::map<std::size_t, std::size_t> root_to_class;
  class_of_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, _] = root_to_class.emplace(find(i), root_to_class.size());
    class_of_[i] = it->second;
  }
  std::size_t k = root_to_class.size();
  reach_.assign(k, std::vector<bool>(k, false));
  edges_.clear();
  cycle_.clear();

  auto add_edge = [&](std::size_t u, std::size_t v) {
    edges_.emplace_back(u, v);
    for (std::size_t a = 0; a < k; ++a) {
      if (a != u && !reach_[a][u]) continue;
      for (std::size_t b = 0; b < k; ++b)
        if (b == v || reach_[v][b]) reach_[a][b] = true;
    }
  };
  // Path of symbols from class `from` to class `to` along edges_, for
  // cycle evidence.
  auto path = [&](std::size_t from, std::size_t to) {
    std::vector<std::size_t> prev(k, k);
    std::deque<std::size_t> queue{from};
    prev[from] = from;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (u == to) break;
      for (auto [a, b] : edges_) {
        if (a == u && prev[b] == k) {
          prev[b] = u;
          queue.push_back(b);
        }
      }
    }
    std::vector<std::size_t> classes;
    for (std::size_t c = to; c != from; c = prev[c]) classes.push_back(c);
    classes.push_back(from);
    std::reverse(classes.begin(), classes.end());
    return classes;
  };
  auto representative = [&](std::size_t cls) {
    for (std::size_t i = 0; i < n; ++i)
      if (class_of_[i] == cls) return symbols_[i];
    return std::string();
  };

  for (auto [i, j] : user_greater_) {
    std::size_t u = class_of_[i], v = class_of_[j];
    if (u == v) {
      if (cycle_.empty()) cycle_ = {symbols_[i], symbols_[j], symbols_[i]};
      continue;
    }
    if (reach_[v][u]) {
      if (cycle_.empty()) {
        cycle_ = {symbols_[i], symbols_[j]};
        auto back = path(v, u);
        for (std::size_t c = 1; c + 1 < back.size(); ++c) cycle_.push_back(representative(back[c]));
        cycle_.push_back(symbols_[i]);
      }
      continue;
    }
    add_edge(u, v);
  }
  for (auto [i, j] : defaults_) {
    if (mentioned_.count({std::min(i, j), std::max(i, j)})) continue;
    std::size_t u = class_of_[i], v = class_of_[j];
    if (u == v || reach_[v][u] || reach_[u][v]) continue;
    add_edge(u, v);
  }
  finalized_ = true;
}

bool Precedence::greater(std::string_view a, std::string_view b) const {
  auto ia = index_.find(a), ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end() || !finalized_) return false;
  return reach_[class_of_[ia->second]][class_of_[ib->second]];
}

bool Precedence::equivalent(std::string_view a, std::string_view b) const {
  if (a == b) return true;
  auto ia = index_.find(a), ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) return false;
  return find(ia->second) == find(ib->second);
}

std::vector<std::vector<std::string>> Precedence::nontrivial_classes() const {
  std::map<std::size_t, std::vector<std::string>> by_root;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    std::size_t r = find(i);
    if (!by_root.count(r)) order.push_back(r);
    by_root[r].push_back(symbols_[i]);
  }
  std::vector<std::vector<std::string>> out;
  for (std::size_t r : order)
    if (by_root[r].size() > 1) out.push_back(by_root[r]);
  return out;
}

std::vector<std::pair<std::string, std::string>> Precedence::strict_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  if (!finalized_) return out;
  for (const auto& a : symbols_)
    for (const auto& b : symbols_)
      if (greater(a, b)) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Inductive structure and signature

namespace {
const std::set<unsigned> kNoPositions;
}

const std::set<unsigned>& InductiveStructure::ind_of(std::string_view c) const {
  auto it = ind.find(c);
  return it == ind.end() ? kNoPositions : it->second;
}

const std::set<unsigned>& InductiveStructure::acc_of(std::string_view c) const {
  auto it = acc.find(c);
  return it == acc.end() ? kNoPositions : it->second;
}

void Signature::add(SymbolDecl d) {
  if (sealed_) throw Error(ErrorKind::Sealed, "signature is sealed; cannot declare " + d.name);
  if (decls_.count(d.name))
    throw Error(ErrorKind::DuplicateSymbol, "symbol " + d.name + " is already declared");
  if (!d.type || !d.type.locally_closed() || d.type.has_free_vars())
    throw Error(ErrorKind::IllFormedRule, "type of " + d.name + " must be closed");
  if (product_count(d.type) < d.arity)
    throw Error(ErrorKind::ArityMismatch,
                "type of " + d.name + " has " + std::to_string(product_count(d.type)) +
                    " products but arity is " + std::to_string(d.arity));
  precedence_.add_symbol(d.name);
  order_.push_back(d.name);
  std::string name = d.name;
  decls_.emplace(std::move(name), std::move(d));
}

const SymbolDecl* Signature::find(std::string_view name) const {
  auto it = decls_.find(name);
  return it == decls_.end() ? nullptr : &it->second;
}

const SymbolDecl& Signature::at(std::string_view name) const {
  const SymbolDecl* d = find(name);
  if (!d) throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + std::string(name));
  return *d;
}

const SymbolDecl& declare_symbol(Theory& theory, SymbolDecl d) {
  if (theory.sealed())
    throw Error(ErrorKind::Sealed, "theory is sealed; cannot declare " + d.name);
  if (theory.signature().contains(d.name))
    throw Error(ErrorKind::DuplicateSymbol, "symbol " + d.name + " is already declared");
  if (product_count(d.type) < d.arity)
    throw Error(ErrorKind::ArityMismatch,
                "type of " + d.name + " has " + std::to_string(product_count(d.type)) +
                    " products but arity is " + std::to_string(d.arity));
  Typed typed = infer(theory, Environment{}, d.type, theory.fuel);
  Term s = typed.type;
  if (!s.is(TermKind::Sort)) s = normalize(s, theory, theory.fuel);
  if (!s.is(TermKind::Sort))
    throw Error(ErrorKind::SortError,
                "type of " + d.name + " is not a type: it has type " + to_string(typed.type));
  d.sort = s.sort_value();
  theory.signature().add(d);
  return theory.signature().at(d.name);
}

SymbolClasses classify_symbols(const Theory& theory) {
  SymbolClasses out;
  for (const auto& f : theory.signature().names())
    (theory.is_defined(f) ? out.defined : out.free).insert(f);
  return out;
}

std::vector<std::string> constructors_of(const Theory& theory, std::string_view c) {
  std::vector<std::string> out;
  for (const auto& f : theory.signature().names()) {
    const SymbolDecl& d = theory.decl(f);
    if (d.sort != Sort::Star || product_count(d.type) != d.arity) continue;
    const Term* cod = &d.type;
    while (cod->is(TermKind::Prod)) cod = &cod->body();
    if (cod->is(TermKind::Symbol) && cod->symbol_name() == c) out.push_back(f);
  }
  return out;
}

PrecedenceCheck check_precedence(const Theory& theory) {
  PrecedenceCheck out;
  out.cycle = theory.precedence().cycle();
  out.ok = out.cycle.empty();
  return out;
}

}  // namespace cac
