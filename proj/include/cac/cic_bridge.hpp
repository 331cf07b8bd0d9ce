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

// Basic inductive types compiled to symbols and recursor rules.

#ifndef CAC_CIC_BRIDGE_HPP
#define CAC_CIC_BRIDGE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cac/admissibility.hpp"
#include "cac/reduction.hpp"
#include "cac/rule.hpp"
#include "cac/signature.hpp"
#include "cac/term.hpp"

namespace cac {

class Theory;

/// Ind(X : A){C1 | ... | Cn}. Constructor types mention the self reference
/// as the free variable `self` (of the box class).
struct InductiveDecl {
  std::string name;
  Term arity_type;
  Variable self;
  std::vector<std::pair<std::string, Term>> constructors;
};

struct BridgeOptions {
  /// Accept constructor arguments mentioning the type under a product
  /// (passed through unchanged by the recursors).
  bool allow_non_basic = false;
};

struct Provenance {
  std::string inductive;
  std::size_t constructor = 0;  // 1-based
  std::string eliminator;       // "WElim" or "SElim"
};

struct GeneratedBundle {
  std::string inductive;
  std::vector<std::string> constructors;
  std::string welim;
  std::vector<std::string> selims;
  std::vector<SymbolDecl> symbols;
  std::vector<RewriteRule> rules;
  std::map<std::string, Provenance> provenance;

  // Kept for later strong eliminations.
  InductiveDecl decl;
  BridgeOptions options;
  std::vector<std::pair<Term, std::string>> motives;
};

/// Declares Ind_I (named I), the constructors and WElim_I, sets Ind/Acc and
/// adds the weak recursor rules. Raises Inductive on out-of-fragment input.
GeneratedBundle translate_inductive(Theory& theory, const InductiveDecl& decl,
                                    const BridgeOptions& options = {});

/// Strong eliminator for the closed motive [x:A]K under `name`. An
/// alpha-equal motive already compiled is reused through an alias; returns
/// the symbol actually used.
std::string add_strong_elimination(Theory& theory, GeneratedBundle& bundle,
                                   const std::string& name, const Term& motive);

struct BundleCertificate {
  ConfluenceLevel confluence = ConfluenceLevel::Unknown;
  Property welim_safe;
  Property welim_recursive;
  Property selim_simple;
  Property selim_recursive;
  bool ok = false;
};

/// Expects a sealed theory containing the bundle.
BundleCertificate certify_bundle(const Theory& theory, const GeneratedBundle& bundle,
                                 std::size_t fuel);

/// Beta normal form, ignoring rewrite rules.
Term beta_normalize(const Term& t);

}  // namespace cac

#endif  // CAC_CIC_BRIDGE_HPP
