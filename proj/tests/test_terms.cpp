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

#include "cac/error.hpp"
#include "cac/term.hpp"

namespace cac {
namespace {

class TermsTest : public ::testing::Test {
 protected:
  Variable a = Variable::fresh("A", Sort::Box);
  Variable x = Variable::fresh("x", Sort::Star);
  Variable y = Variable::fresh("y", Sort::Star);
  Term list(const Term& t) { return Term::symbol("list", {t}); }
};

TEST_F(TermsTest, BinderNamesDoNotMatter) {
  Term id1 = Term::lambda(x, Term::var(a), Term::var(x));
  Term id2 = Term::lambda(y, Term::var(a), Term::var(y));
  EXPECT_EQ(id1, id2);
  EXPECT_TRUE(alpha_eq(id1, id2));
  EXPECT_EQ(id1.hash(), id2.hash());
  EXPECT_NE(id1, Term::lambda(y, Term::var(a), Term::var(x)));
}

TEST_F(TermsTest, SubstitutionDoesNotCapture) {
  // (fun (y : A) => x){x := y} keeps the outer y free.
  Term t = Term::lambda(y, Term::var(a), Term::var(x));
  Term r = subst_apply(t, {{x, Term::var(y)}});
  ASSERT_TRUE(r.is(TermKind::Abs));
  EXPECT_TRUE(occurs_free(y, r));
  EXPECT_EQ(r.body(), Term::var(y));
}

TEST_F(TermsTest, SimultaneousSubstitution) {
  Term t = Term::symbol("pair", {Term::var(x), Term::var(y)});
  Term r = subst_apply(t, {{x, Term::var(y)}, {y, Term::var(x)}});
  EXPECT_EQ(r, Term::symbol("pair", {Term::var(y), Term::var(x)}));
}

TEST_F(TermsTest, ThenComposes) {
  Substitution theta{{x, Term::symbol("s", {Term::var(y)})}};
  Substitution sigma{{y, Term::symbol("0")}, {x, Term::symbol("1")}};
  Substitution both = theta.then(sigma);
  Term t = Term::symbol("f", {Term::var(x), Term::var(y)});
  EXPECT_EQ(subst_apply(t, both), subst_apply(subst_apply(t, theta), sigma));
}

TEST_F(TermsTest, PositionsAndReplacement) {
  Term t = Term::symbol("cons", {Term::var(a), Term::var(x), list(Term::var(a))});
  EXPECT_EQ(subterm_at(t, Position{3, 1}), Term::var(a));
  Term u = replace_at(t, Position{2}, Term::var(y));
  EXPECT_EQ(subterm_at(u, Position{2}), Term::var(y));
  EXPECT_EQ(replace_at(u, Position{2}, Term::var(x)), t);
  EXPECT_FALSE(is_position_of(t, Position{4}));
  EXPECT_THROW(subterm_at(t, Position{2, 1}), Error);
  auto ps = positions_of(t, a);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].to_string(), "1");
  EXPECT_EQ(ps[1].to_string(), "3.1");
  EXPECT_EQ(Position::root().to_string(), "ε");
  EXPECT_EQ(all_positions(t).size(), 5u);
}

TEST_F(TermsTest, OpenCloseAreInverse) {
  Term body = Term::app(Term::bound(0), Term::var(x));
  Term opened = open(body, y);
  EXPECT_EQ(opened, Term::app(Term::var(y), Term::var(x)));
  EXPECT_EQ(close(opened, y), body);
}

TEST_F(TermsTest, KindsAndSortClasses) {
  Term star_to_star = Term::arrow(Term::star(), Term::star());
  EXPECT_TRUE(is_kind(Term::star()));
  EXPECT_TRUE(is_kind(star_to_star));
  EXPECT_FALSE(is_kind(Term::var(a)));
  EXPECT_EQ(sort_class_of_type(star_to_star), Sort::Box);
  EXPECT_EQ(sort_class_of_type(list(Term::var(a))), Sort::Star);
}

TEST_F(TermsTest, SpineAndApply) {
  Term f = Term::var(Variable::fresh("f", Sort::Star));
  std::vector<Term> args{Term::var(x), Term::var(y)};
  Term t = Term::apply(f, args);
  auto [h, as] = spine(t);
  EXPECT_EQ(h, f);
  EXPECT_EQ(as, args);
}

TEST_F(TermsTest, FreeVariablesInOrder) {
  Term t = Term::symbol("g", {Term::var(y), Term::var(x), Term::var(y)});
  auto fv = free_vars_ordered(t);
  ASSERT_EQ(fv.size(), 2u);
  EXPECT_EQ(fv[0], y);
  EXPECT_EQ(count_occurrences(y, t), 2u);
  EXPECT_EQ(free_vars(t, Sort::Box).size(), 0u);
}

TEST_F(TermsTest, InstantiateProducts) {
  // (A : *) -> A -> list(A) at list(nat)
  Term ty = Term::pi(a, Term::star(), Term::arrow(Term::var(a), list(Term::var(a))));
  Term nat = Term::symbol("nat");
  std::vector<Term> args{nat};
  Instantiated in = instantiate_products(ty, args);
  EXPECT_EQ(in.domains[0], Term::star());
  EXPECT_EQ(in.codomain, Term::arrow(nat, list(nat)));
  EXPECT_EQ(product_count(ty), 2u);
}

TEST_F(TermsTest, PrinterNamesAndArrows) {
  Term ty = Term::pi(a, Term::star(), Term::arrow(Term::var(a), list(Term::var(a))));
  EXPECT_EQ(to_string(ty), "(A : *) -> A -> list(A)");
  Term lam = Term::lambda(y, Term::var(a), Term::var(y));
  EXPECT_EQ(to_string(lam), "fun (y : A) => y");
  EXPECT_EQ(to_string(Term::app(lam, Term::var(x))), "(fun (y : A) => y) x");
}

TEST_F(TermsTest, AlgebraicTest) {
  EXPECT_TRUE(is_algebraic(Term::symbol("f", {Term::var(x)})));
  EXPECT_FALSE(is_algebraic(Term::app(Term::var(x), Term::var(y))));
}

}  // namespace
}  // namespace cac
