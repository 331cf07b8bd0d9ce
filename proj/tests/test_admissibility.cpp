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

#include <algorithm>

#include "cac/admissibility.hpp"
#include "cac/theory.hpp"
#include "support.hpp"

namespace cac {
namespace {

using testing::load;

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

TEST(TypePreservation, AppRules) {
  Session s = load("app.cac");
  for (const auto& r : s.theory().rules()) {
    TypePreservation tp = check_type_preservation(s.theory(), r, 1000);
    EXPECT_EQ(tp[0].outcome, Outcome::Pass) << r.name << " S1 " << tp[0].detail;
    EXPECT_EQ(tp[1].outcome, Outcome::Pass) << r.name << " S2 " << tp[1].detail;
    EXPECT_EQ(tp[2].outcome, Outcome::Pass) << r.name << " S3 " << tp[2].detail;
    EXPECT_EQ(tp[3].outcome, Outcome::PassSufficient) << r.name << " S4 " << tp[3].detail;
    EXPECT_EQ(tp[4].outcome, Outcome::PassSufficient) << r.name << " S5 " << tp[4].detail;
  }
}

TEST(TypePreservation, WrongRightHandSideFailsS3) {
  Document d = testing::doc(R"(
    symbol nat : * .
    symbol bool : * .
    symbol zero : nat .
    symbol tt : bool .
    symbol f : nat -> nat .
    rule f(x) -> tt .
  )");
  TypePreservation tp = check_type_preservation(*d.theory, d.theory->rules().front(), 100);
  EXPECT_EQ(tp[2].outcome, Outcome::Fail);
  EXPECT_NE(tp[2].detail.find("bool"), std::string::npos) << tp[2].detail;
}

TEST(TypePreservation, RhoOnEnvironmentVariableFailsS1) {
  Document d = testing::doc(R"(
    symbol nat : * .
    symbol f : nat -> nat -> nat .
    rule f(x, y) -> x with env [x : nat, y : nat] rho {y := x} .
  )");
  TypePreservation tp = check_type_preservation(*d.theory, d.theory->rules().front(), 100);
  EXPECT_EQ(tp[0].outcome, Outcome::Fail);
}

TEST(Properties, NdmSystem) {
  Session s = load("ndm_prop.cac");
  std::set<std::string> g{"not", "and", "or"};
  SystemProperties p = system_properties(s.theory(), g, 100);
  EXPECT_TRUE(p.algebraic.holds());
  EXPECT_TRUE(p.non_duplicating.holds());
  EXPECT_TRUE(p.primitive.holds());
  EXPECT_FALSE(p.simple.holds());
}

TEST(Properties, DuplicationWitness) {
  Session s = load("neg_duplicating.cac");
  SystemProperties p = system_properties(s.theory(), {"f"}, 100);
  EXPECT_EQ(p.non_duplicating.state, Tri::Fails);
  EXPECT_NE(p.non_duplicating.witness.find("f_1"), std::string::npos);
  EXPECT_NE(p.non_duplicating.witness.find("x"), std::string::npos);
}

TEST(Partition, AlgebraicAndNot) {
  Session s = load("nat_bundle.cac");
  Partition part = partition_defined(s.theory());
  EXPECT_TRUE(contains(part.fa, "plus"));
  EXPECT_TRUE(contains(part.fna, "WElim_nat"));
  EXPECT_TRUE(contains(part.fna, "nat_rec"));
}

TEST(Partition, PragmasOverride) {
  Document d = testing::doc(R"(
    symbol nat : * .
    symbol zero : nat .
    symbol f : nat -> nat .
    rule f(x) -> x .
    pragma nonalgebraic f .
  )");
  Partition part = partition_defined(*d.theory);
  EXPECT_TRUE(part.fa.empty());
  EXPECT_TRUE(contains(part.fna, "f"));
}

TEST(Pipeline, CorpusVerdicts) {
  struct Case {
    const char* file;
    Overall overall;
  };
  for (const Case& c : {Case{"app.cac", Overall::Admissible}, Case{"ndm_prop.cac", Overall::Admissible},
                        Case{"int.cac", Overall::Admissible}, Case{"nat_bundle.cac", Overall::Admissible},
                        Case{"predicates.cac", Overall::Admissible},
                        Case{"app_nonlinear.cac", Overall::Rejected},
                        Case{"listh.cac", Overall::Rejected}, Case{"neg_schema.cac", Overall::Rejected},
                        Case{"neg_duplicating.cac", Overall::Rejected}}) {
    Session s = load(c.file);
    AdmissibilityReport rep = s.admissibility(false);
    EXPECT_EQ(rep.overall, c.overall) << c.file;
  }
}

TEST(Pipeline, FailureNames) {
  EXPECT_TRUE(contains(load("app_nonlinear.cac").admissibility(false).failures, "A1"));
  EXPECT_TRUE(contains(load("listh.cac").admissibility(false).failures, "A2"));
  EXPECT_TRUE(contains(load("neg_schema.cac").admissibility(false).failures, "A4"));
}

TEST(Pipeline, StrictModeRejectsSufficientConditions) {
  Session s = load("app.cac");
  AdmissibilityReport rep = s.admissibility(true);
  EXPECT_EQ(rep.overall, Overall::Rejected);
  EXPECT_TRUE(contains(rep.sufficient, "app_cons S4"));
  // Nothing sufficient and nothing asserted: strict changes nothing.
  EXPECT_EQ(load("predicates.cac").admissibility(true).overall, Overall::Admissible);
}

TEST(Pipeline, AssertionsAreListed) {
  Document d = testing::doc(R"(
    symbol list : * -> * .
    symbol nil : (A : *) -> list(A) .
    symbol cons : (A : *) -> A -> list(A) -> list(A) .
    symbol app : (A : *) -> list(A) -> list(A) -> list(A) .
    pragma ind(list) = {1} .
    pragma acc(nil) = {1} .
    pragma acc(cons) = {1, 2, 3} .
    pragma prec app > cons .
    pragma assume_confluent .
    rule app(A, nil(A), l) -> l .
    rule app(A, cons(A, x, l), l') -> cons(A, x, app(A, l, l')) .
  )");
  AdmissibilityReport rep = check_admissible(*d.theory, 1000);
  EXPECT_EQ(rep.a1, Outcome::Asserted);
  EXPECT_EQ(rep.overall, Overall::AdmissibleWithAssertions);
  EXPECT_TRUE(contains(rep.assertions, "A1"));
  EXPECT_EQ(check_admissible(*d.theory, 1000, true).overall, Overall::Rejected);
}

TEST(Pipeline, NatBundleBranches) {
  AdmissibilityReport rep = load("nat_bundle.cac").admissibility(false);
  EXPECT_EQ(rep.confluence.level, ConfluenceLevel::Orthogonal);
  EXPECT_EQ(rep.a3_branch, "simple+recursive");
  EXPECT_TRUE(rep.fna_properties.safe.holds());
  EXPECT_TRUE(rep.fna_properties.recursive.holds());
  EXPECT_TRUE(rep.termination.proved);
}

}  // namespace
}  // namespace cac
