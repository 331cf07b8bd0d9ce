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

// Type preservation (S1-S5), rewrite-system properties and the A1-A4
// admissibility verdict.

#ifndef CAC_ADMISSIBILITY_HPP
#define CAC_ADMISSIBILITY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cac/general_schema.hpp"
#include "cac/positivity.hpp"
#include "cac/reduction.hpp"
#include "cac/rpo.hpp"
#include "cac/rule.hpp"
#include "cac/signature.hpp"

namespace cac {

class Theory;

enum class Outcome { Pass, PassSufficient, Asserted, Fail, NotChecked };
const char* to_string(Outcome o);

struct ConditionResult {
  Outcome outcome = Outcome::NotChecked;
  std::string detail;
};

/// S1..S5 in order.
using TypePreservation = std::array<ConditionResult, 5>;

TypePreservation check_type_preservation(const Theory& theory, const RewriteRule& rule,
                                         std::size_t fuel);

enum class Tri { Holds, Fails, NotChecked };
const char* to_string(Tri t);

struct Property {
  Tri state = Tri::NotChecked;
  /// Rule name plus the offending variable, symbol or position.
  std::string witness;

  bool holds() const { return state == Tri::Holds; }
};

struct SystemProperties {
  Property algebraic;
  Property non_duplicating;
  Property primitive;
  Property simple;
  Property positive;
  Property recursive;
  Property safe;
};

/// Names and values in report order.
std::vector<std::pair<const char*, const Property*>> property_list(const SystemProperties& p);

using SchemaCache = std::map<std::string, SchemaResult>;

/// Properties of (G, R_G). `schemas` may hold precomputed General Schema
/// results by rule name.
SystemProperties system_properties(const Theory& theory, const std::set<std::string>& g,
                                   std::size_t fuel, const SchemaCache* schemas = nullptr);

struct Partition {
  std::vector<std::string> fa;
  std::vector<std::string> fna;
};

/// Greatest fixpoint over DF: start from the symbols eligible for F_a and
/// drop any whose rules mention a symbol outside it. Pragmas override.
Partition partition_defined(const Theory& theory);

struct RuleReport {
  std::string name;
  TypePreservation s;
  SchemaResult schema;
};

enum class Overall { Admissible, AdmissibleWithAssertions, Rejected };
const char* to_string(Overall o);

struct AdmissibilityReport {
  // A1
  ConfluenceVerdict confluence;
  Outcome a1 = Outcome::NotChecked;
  // A2
  PrecedenceCheck precedence;
  InductiveCheck structure;
  std::vector<std::pair<std::string, PredicateClass>> predicate_classes;
  Outcome a2 = Outcome::NotChecked;
  // A3
  std::vector<std::string> defined_predicates;
  SystemProperties a3_properties;
  std::string a3_branch;
  Outcome a3 = Outcome::NotChecked;
  // A4
  Partition partition;
  SystemProperties fa_properties;
  SystemProperties fna_properties;
  RpoResult termination;
  Outcome fa_terminating = Outcome::NotChecked;
  Property fa_isolated;
  Outcome a4 = Outcome::NotChecked;

  std::vector<RuleReport> rules;
  SystemProperties properties;  // over all defined symbols
  std::vector<std::string> assertions;
  std::vector<std::string> sufficient;
  std::vector<std::string> failures;
  Overall overall = Overall::Rejected;
};

/// Runs the whole pipeline on a sealed theory. `strict` makes ASSERTED and
/// PASS_SUFFICIENT count as failures.
AdmissibilityReport check_admissible(const Theory& theory, std::size_t fuel,
                                     bool strict = false);

}  // namespace cac

#endif  // CAC_ADMISSIBILITY_HPP
