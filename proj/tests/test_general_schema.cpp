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

#include <functional>

#include "cac/general_schema.hpp"
#include "cac/report.hpp"
#include "cac/theory.hpp"
#include "support.hpp"

namespace cac {
namespace {

using testing::load;
using testing::term;

bool any_note(const Derivation& d, const std::string& needle) {
  if (!d) return false;
  if (d->note.find(needle) != std::string::npos) return true;
  for (const auto& p : d->premises)
    if (any_note(p, needle)) return true;
  return false;
}

TEST(Accessibility, ConsStepsToItsArguments) {
  Session s = load("app.cac");
  const RewriteRule& r = *s.theory().find_rule("app_cons");
  auto pairs = lhs_pairs(s.theory(), r.lhs);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(to_string(pairs[1]), "<cons(A', x, l), list(A)>");
  auto step = acc_step(s.theory(), pairs[1].term, pairs[1].type);
  ASSERT_EQ(step.size(), 3u);
  // Declared types are instantiated at the pattern's own parameter.
  EXPECT_EQ(to_string(step[1]), "<x, A'>");
  EXPECT_EQ(to_string(step[2]), "<l, list(A')>");
  // nil(A') only gives access to its parameter.
  auto nil_pairs = lhs_pairs(s.theory(), s.theory().find_rule("app_nil")->lhs);
  EXPECT_EQ(acc_closure(s.theory(), nil_pairs[1]).size(), 1u);
}

TEST(DerivedTypes, FromTheEnclosingSymbol) {
  Session s = load("app.cac");
  const RewriteRule& r = *s.theory().find_rule("app_cons");
  EXPECT_EQ(to_string(derived_type(s.theory(), r.lhs, Position{2, 1})), "*");
  EXPECT_EQ(to_string(derived_type(s.theory(), r.lhs, Position{2, 2})), "A'");
  EXPECT_EQ(to_string(derived_type(s.theory(), r.lhs, Position{2, 3})), "list(A')");
  EXPECT_EQ(to_string(derived_type(s.theory(), r.lhs, Position{3})), "list(A)");
  EXPECT_EQ(to_string(rule_type(s.theory(), r)), "list(A)");
}

TEST(WellFormed, AppRules) {
  Session s = load("app.cac");
  for (const auto& r : s.theory().rules()) {
    WellFormedResult wf = check_well_formed(s.theory(), r);
    EXPECT_TRUE(wf.ok) << r.name;
    EXPECT_TRUE(wf.failures.empty()) << r.name;
  }
  WellFormedResult wf = check_well_formed(s.theory(), *s.theory().find_rule("app_cons"));
  EXPECT_EQ(wf.witnesses.size(), 4u);
}

TEST(WellFormed, InaccessibleVariableIsReported) {
  Document d = testing::doc(R"(
    symbol nat : * .
    symbol zero : nat .
    symbol succ : nat -> nat .
    symbol f : nat -> nat .
    rule f(succ(x)) -> x .
  )");
  WellFormedResult wf = check_well_formed(*d.theory, d.theory->rules().front());
  EXPECT_FALSE(wf.ok);
  ASSERT_EQ(wf.failures.size(), 1u);
  EXPECT_EQ(wf.failures.front().var.name(), "x");
}

TEST(ComputableClosure, AppConsDecreasesOnTheList) {
  Session s = load("app.cac");
  const RewriteRule& r = *s.theory().find_rule("app_cons");
  ClosureResult cc = cc_check(s.theory(), r, 1000);
  ASSERT_TRUE(cc.ok) << cc.error;
  EXPECT_TRUE(any_note(cc.derivation, "<cons(A', x, l), list(A)> > <l, list(A)>"))
      << derivation_text(cc.derivation);
  ClosureReplayContext ctx = closure_context(s.theory(), r);
  EXPECT_FALSE(replay(s.theory(), cc.derivation, 1000, &ctx));
  // Without the context the closure-only tags are invalid.
  EXPECT_TRUE(replay(s.theory(), cc.derivation, 1000));
}

TEST(ComputableClosure, ArgumentOrdering) {
  Session s = load("app.cac");
  const RewriteRule& r = *s.theory().find_rule("app_cons");
  auto lhs = lhs_pairs(s.theory(), r.lhs);
  std::vector<AccPair> callee = lhs;
  // The recursive call types l at list(A), as the rhs does.
  callee[1] = {acc_step(s.theory(), lhs[1].term, lhs[1].type)[2].term, lhs[2].type};
  EXPECT_TRUE(args_greater(s.theory(), lhs, callee));
  EXPECT_FALSE(args_greater(s.theory(), lhs, lhs));
  EXPECT_FALSE(args_greater(s.theory(), callee, lhs));
  EXPECT_EQ(describe_decrease(lhs, callee), "<cons(A', x, l), list(A)> > <l, list(A)>");
}

TEST(GeneralSchema, SelfCallFails) {
  Session s = load("neg_schema.cac");
  SchemaResult gs = satisfies_general_schema(s.theory(), s.theory().rules().front(), 1000);
  EXPECT_TRUE(gs.well_formed.ok);
  EXPECT_FALSE(gs.satisfied);
  EXPECT_FALSE(gs.closure.error.empty());
}

TEST(GeneralSchema, RecursorRules) {
  Session s = load("nat_bundle.cac");
  for (const auto& r : s.theory().rules()) {
    SchemaResult gs = satisfies_general_schema(s.theory(), r, 1000);
    EXPECT_TRUE(gs.satisfied) << r.name << ": " << gs.closure.error;
  }
}

}  // namespace
}  // namespace cac
