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

#include "cac/cic_bridge.hpp"
#include "cac/error.hpp"
#include "cac/reduction.hpp"
#include "cac/theory.hpp"
#include "cac/typing.hpp"
#include "support.hpp"

namespace cac {
namespace {

using testing::load;
using testing::term;

std::string numeral(int n) {
  std::string s = "zero";
  for (int i = 0; i < n; ++i) s = "succ(" + s + ")";
  return s;
}

TEST(Bridge, NatBundleShape) {
  Session s = load("nat_bundle.cac");
  const GeneratedBundle& b = s.document().bundles.front();
  EXPECT_EQ(b.inductive, "nat");
  EXPECT_EQ(b.constructors, (std::vector<std::string>{"zero", "succ"}));
  EXPECT_EQ(b.welim, "WElim_nat");
  EXPECT_EQ(b.selims, (std::vector<std::string>{"nat_rec"}));
  EXPECT_EQ(to_string(s.theory().decl("WElim_nat").type),
            "(Q : *) -> Q -> (nat -> Q -> Q) -> nat -> Q");
  EXPECT_EQ(to_string(s.theory().decl("nat_rec").type),
            "* -> (nat -> * -> *) -> nat -> *");
  ASSERT_EQ(b.rules.size(), 4u);
  EXPECT_EQ(b.provenance.at("WElim_nat_succ").constructor, 2u);
  EXPECT_EQ(b.provenance.at("nat_rec_zero").eliminator, "SElim");
}

TEST(Bridge, NatBundleCertifies) {
  Session s = load("nat_bundle.cac");
  BundleCertificate c = certify_bundle(s.theory(), s.document().bundles.front(), 1000);
  EXPECT_EQ(c.confluence, ConfluenceLevel::Orthogonal);
  EXPECT_TRUE(c.welim_safe.holds());
  EXPECT_TRUE(c.welim_recursive.holds());
  EXPECT_TRUE(c.selim_simple.holds());
  EXPECT_TRUE(c.selim_recursive.holds());
  EXPECT_TRUE(c.ok);
}

TEST(Bridge, WeakRecursorAddsNumerals) {
  Session s = load("nat_bundle.cac");
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      Term t = term(s.theory(), "WElim_nat(nat, " + numeral(n) +
                                    ", fun (k : nat) (r : nat) => succ(r), " + numeral(m) + ")");
      EXPECT_EQ(to_string(normalize(t, s.theory(), 1000)), numeral(n + m));
    }
  }
}

TEST(Bridge, ParameterisedListsUseRho) {
  Document d = testing::doc(R"(
    inductive list : * -> * :=
        nil : (A : *) -> list A
      | cons : (A : *) -> A -> list A -> list A .
  )");
  const GeneratedBundle& b = d.bundles.front();
  const RewriteRule* cons = d.theory->find_rule("WElim_list_cons");
  ASSERT_NE(cons, nullptr);
  EXPECT_FALSE(cons->rho.empty());
  EXPECT_EQ(d.theory->structure().acc_of("cons"), (std::set<unsigned>{1, 2, 3}));
  BundleCertificate c = certify_bundle(*d.theory, b, 1000);
  EXPECT_TRUE(c.ok);
  AdmissibilityReport rep = check_admissible(*d.theory, 1000);
  EXPECT_NE(rep.overall, Overall::Rejected);
}

TEST(Bridge, HeterogeneousListsAreRejected) {
  try {
    testing::doc(R"(
      inductive listh : * :=
          hnil : (A : *) -> A -> listh
        | hcons : (A : *) -> A -> listh -> listh .
    )");
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inductive);
    EXPECT_NE(std::string(e.what()).find("I6"), std::string::npos) << e.what();
  }
}

TEST(Bridge, NonBasicArgumentsNeedTheOption) {
  EXPECT_THROW(testing::doc(R"(
    symbol nat : * .
    inductive ord : * := o0 : ord | lim : (nat -> ord) -> ord .
  )"),
               Error);
  EXPECT_THROW(testing::doc(R"(
    inductive bad : * := mk : (bad -> bad) -> bad .
  )"),
               Error);
}

TEST(Bridge, MotivesAreDeduplicated) {
  Document d = testing::doc(R"(
    inductive nat : * := zero : nat | succ : nat -> nat .
    pragma selim(nat) rec1 := * .
    pragma selim(nat) rec2 := * .
  )");
  EXPECT_EQ(d.theory->aliases.at("rec2"), "rec1");
  EXPECT_FALSE(d.theory->signature().contains("rec2"));
  Term t = term(*d.theory, "rec2(nat, fun (k : nat) (T : *) => T, zero)");
  EXPECT_EQ(to_string(normalize(t, *d.theory, 100)), "nat");
}

TEST(Bridge, MotiveMustBeAKind) {
  EXPECT_THROW(testing::doc(R"(
    inductive nat : * := zero : nat | succ : nat -> nat .
    pragma selim(nat) bad := nat .
  )"),
               Error);
}

TEST(Bridge, BetaNormalizeIgnoresRules) {
  Session s = load("nat_bundle.cac");
  Term t = term(s.theory(), "(fun (n : nat) => plus(n, zero)) zero");
  EXPECT_EQ(to_string(beta_normalize(t)), "plus(zero, zero)");
}

}  // namespace
}  // namespace cac
