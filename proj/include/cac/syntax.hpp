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

// The .cac surface language. Parsing and elaboration happen in one pass:
// each item is elaborated against the theory built from the items before it,
// so forward references are errors.

#ifndef CAC_SYNTAX_HPP
#define CAC_SYNTAX_HPP

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cac/cic_bridge.hpp"
#include "cac/rule.hpp"
#include "cac/signature.hpp"
#include "cac/term.hpp"
#include "cac/theory.hpp"

namespace cac {

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SymbolItem {
  SymbolDecl decl;
  bool explicit_arity = false;
};

struct RuleItem {
  RewriteRule rule;
  bool explicit_name = false;
};

struct InductiveItem {
  InductiveDecl decl;
};

struct PragmaItem {
  enum class Kind { Ind, Acc, PrecGreater, PrecEqual, AssumeConfluent, AssumeTerminating,
                    Selim, Algebraic, NonAlgebraic };
  Kind kind = Kind::Ind;
  /// Ind/Acc/Selim: the symbol; Prec: the chain; Algebraic: the symbol.
  std::vector<std::string> names;
  std::set<unsigned> positions;
  /// Selim only.
  std::string eliminator;
  Term motive;
};

struct Directive {
  enum class Kind { Check, Normalize, Convert };
  Kind kind = Kind::Check;
  Environment env;
  Term subject;
  /// The type for check, the right-hand term for convert.
  Term other;
  SourceLocation where;
};

using Item = std::variant<SymbolItem, RuleItem, InductiveItem, PragmaItem, Directive>;

/// A parsed and elaborated file. The theory is sealed.
struct Document {
  std::string file;
  std::vector<Item> items;
  std::unique_ptr<Theory> theory;
  std::vector<GeneratedBundle> bundles;

  std::vector<const Directive*> directives() const;
};

/// Raises Error(Parse) with "file:line:col: message" on syntax errors and
/// the kernel's errors (with the same prefix) on ill-typed declarations.
Document parse_document(std::string_view source, std::string file = "<input>");

/// Elaborates a standalone term against a sealed theory. `scope` supplies
/// variables by name.
Term parse_term(const Theory& theory, std::string_view source,
                const Environment& scope = {});

/// Prints items back in surface syntax; parse_document of the result gives
/// alpha-equivalent items.
std::string print_items(const std::vector<Item>& items);
std::string print_item(const Item& item);

}  // namespace cac

#endif  // CAC_SYNTAX_HPP
