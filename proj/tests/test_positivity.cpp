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

#include <gtest/gtest.h>

#include "cac/positivity.hpp"
#include "cac/signature.hpp"
#include "cac/theory.hpp"
#include "support.hpp"

namespace cac {
namespace {

using testing::load;
using testing::term;

TEST(Polarity, ProductDomainFlips) {
  Session s = load("predicates.cac");
  Variable x = Variable::fresh("X", Sort::Box);
  Environment env{{x, Term::star()}};
  // (X -> nat) -> X
  PolarityReport r = polarity(s.theory(), term(s.theory(), "(X -> nat) -> X", env));
  EXPECT_TRUE(r.positive.count(Position{2}));
  EXPECT_TRUE(r.positive.count(Position{1, 1}));
  EXPECT_TRUE(r.negative.count(Position{1, 2}));
  EXPECT_TRUE(r.neutral.empty());
  for (const auto& p : r.positive) EXPECT_FALSE(r.negative.count(p)) << p.to_string();
}

TEST(Polarity, InductivePositionsOfFreePredicates) {
  Session s = load("predicates.cac");
  Variable x = Variable::fresh("X", Sort::Box);
  Environment env{{x, Term::star()}};
  PolarityReport r = polarity(s.theory(), term(s.theory(), "list(X)", env));
  EXPECT_TRUE(r.positive.count(Position::root()));
  EXPECT_TRUE(r.positive.count(Position{1}));
  PolarityReport neg = polarity(s.theory(), term(s.theory(), "list(X) -> nat", env));
  EXPECT_TRUE(neg.negative.count(Position{1, 1}));
}

TEST(Polarity, ObjectArgumentsAreNeutral) {
  Session s = load("nat_bundle.cac");
  Variable p = Variable::fresh("P", Sort::Box);
  Environment env{{p, term(s.theory(), "nat -> *")}};
  PolarityReport r = polarity(s.theory(), term(s.theory(), "P zero", env));
  EXPECT_TRUE(r.neutral.count(Position{2}));
  EXPECT_TRUE(r.positive.count(Position{2}));
  EXPECT_TRUE(r.negative.count(Position{2}));
}

TEST(Predicates, Classes) {
  Session s = load("predicates.cac");
  const Theory& th = s.theory();
  EXPECT_EQ(classify_predicate(th, "listint"), PredicateClass::Primitive);
  EXPECT_EQ(classify_predicate(th, "nat"), PredicateClass::Primitive);
  EXPECT_EQ(classify_predicate(th, "list"), PredicateClass::Basic);
  EXPECT_EQ(classify_predicate(th, "ord"), PredicateClass::StrictlyPositive);
  EXPECT_EQ(classify_predicate(th, "tree"), PredicateClass::General);
  auto frees = free_predicates(th);
  EXPECT_EQ(frees.size(), 6u);
}

TEST(Predicates, Constructors) {
  Session s = load("int.cac");
  auto cs = constructors_of(s.theory(), "int");
  std::set<std::string> got(cs.begin(), cs.end());
  for (const char* c : {"0", "s", "p", "plus", "times"}) EXPECT_TRUE(got.count(c)) << c;
}

TEST(InductiveStructure, ListStructureIsAdmissible) {
  EXPECT_TRUE(check_inductive_structure(load("app.cac").theory()).ok);
  EXPECT_TRUE(check_inductive_structure(load("predicates.cac").theory()).ok);
}

TEST(InductiveStructure, HeterogeneousListsBreakI6) {
  InductiveCheck c = check_inductive_structure(load("listh.cac").theory());
  ASSERT_FALSE(c.ok);
  bool i6 = false;
  for (const auto& v : c.violations) {
    if (v.condition != "I6") continue;
    i6 = true;
    EXPECT_EQ(v.predicate, "listh");
    EXPECT_NE(v.detail.find("A"), std::string::npos);
  }
  EXPECT_TRUE(i6);
}

TEST(InductiveStructure, NegativeOccurrenceBreaksI3) {
  Document d = testing::doc(R"(
    symbol bad : * .
    symbol mk : (bad -> bad) -> bad .
    pragma acc(mk) = {1} .
  )");
  InductiveCheck c = check_inductive_structure(*d.theory);
  ASSERT_FALSE(c.ok);
  EXPECT_EQ(c.violations.front().condition, "I3");
  EXPECT_EQ(c.violations.front().position.to_string(), "1");
}

TEST(InductiveStructure, IndPositionMustBePredicateArgument) {
  Document d = testing::doc(R"(
    symbol nat : * .
    symbol vec : nat -> * .
    pragma ind(vec) = {1} .
  )");
  InductiveCheck c = check_inductive_structure(*d.theory);
  ASSERT_FALSE(c.ok);
  EXPECT_EQ(c.violations.front().condition, "Ind");
}

TEST(Precedence, CycleIsRejected) {
  Document d = testing::doc(R"(
    symbol nat : * .
    symbol f : nat -> nat .
    symbol g : nat -> nat .
    pragma prec f > g .
    pragma prec g > f .
  )");
  PrecedenceCheck p = check_precedence(*d.theory);
  EXPECT_FALSE(p.ok);
  EXPECT_FALSE(p.cycle.empty());
}

TEST(Precedence, DefaultsFollowTypes) {
  Session s = load("app.cac");
  const Precedence& prec = s.theory().precedence();
  EXPECT_TRUE(prec.greater("app", "list"));
  EXPECT_TRUE(prec.greater("app", "cons"));
  EXPECT_FALSE(prec.greater("list", "app"));
}

}  // namespace
}  // namespace cac
