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

#include <fstream>
#include <sstream>

#include "cac/error.hpp"
#include "cac/syntax.hpp"
#include "cac/theory.hpp"
#include "support.hpp"

namespace cac {
namespace {

using testing::doc;

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error(std::string_view src) {
  try {
    doc(src);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Parse, SymbolDeclaration) {
  Document d = doc("symbol list : (A : *) -> * .");
  ASSERT_EQ(d.items.size(), 1u);
  const auto& s = std::get<SymbolItem>(d.items[0]);
  EXPECT_EQ(s.decl.name, "list");
  EXPECT_EQ(s.decl.arity, 1u);
  EXPECT_EQ(s.decl.sort, Sort::Box);
}

TEST(Parse, ExplicitArity) {
  Document d = doc("symbol nat : * . symbol f/1 : nat -> nat -> nat . symbol z : nat .");
  EXPECT_EQ(d.theory->decl("f").arity, 1u);
  Term t = testing::term(*d.theory, "f(z) z");
  EXPECT_TRUE(t.is(TermKind::App));
  EXPECT_EQ(to_string(t), "f(z) z");
}

TEST(Parse, AnnotatedRule) {
  Document d = doc(read(testing::corpus("app.cac")));
  const RewriteRule* r = d.theory->find_rule("app_nil");
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->annotated);
  EXPECT_EQ(to_string(r->env), "[A : *, l : list(A)]");
  ASSERT_EQ(r->rho.size(), 1u);
  Variable a1 = r->rho.domain().front();
  EXPECT_EQ(a1.name(), "A'");
  EXPECT_EQ(a1.sort_class(), Sort::Box);
  EXPECT_EQ(to_string(*r->rho.find(a1)), "A");
}

TEST(Parse, DefaultEnvironmentFromDerivedTypes) {
  Document d = doc(read(testing::corpus("app_nonlinear.cac")));
  const RewriteRule& r = d.theory->rules()[1];
  EXPECT_FALSE(r.annotated);
  EXPECT_EQ(r.name, "app_2");
  EXPECT_EQ(to_string(r.env), "[A : *, x : A, l : list(A), l' : list(A)]");
}

TEST(Parse, ErrorsCarryLocations) {
  std::string e = parse_error("rule f( ->");
  EXPECT_NE(e.find("<test>:1:"), std::string::npos) << e;
  e = parse_error("symbol nat : * .\nsymbol f : nat -> nat .\nrule f(x) -> g(x) .");
  EXPECT_NE(e.find("<test>:3:"), std::string::npos) << e;
  EXPECT_NE(e.find("'g'"), std::string::npos) << e;
  e = parse_error("symbol a : * .\n  symbol b : a -> a\n");
  EXPECT_NE(e.find("<test>:3:"), std::string::npos) << e;
  EXPECT_NE(e.find("'.'"), std::string::npos) << e;
}

TEST(Parse, ForwardReferencesAreRejected) {
  EXPECT_THROW(doc("symbol f : nat -> nat . symbol nat : * ."), Error);
  EXPECT_THROW(doc("pragma prec f > g . symbol f : * ."), Error);
}

TEST(Parse, ArityIsEnforced) {
  std::string e = parse_error("symbol nat : * . symbol f : nat -> nat -> nat . check f(nat) : nat .");
  EXPECT_NE(e.find("expects 2 arguments"), std::string::npos) << e;
}

TEST(Parse, UnicodeAndAsciiAgree) {
  const char* decls =
      "symbol top : * . symbol bot : * . symbol not : * -> * . "
      "symbol and : * -> * -> * . symbol or : * -> * -> * . ";
  Document a = doc(std::string(decls) + "check not (top /\\ bot) \\/ top : * .");
  Document b = doc(std::string(decls) + "check ¬(⊤ ∧ ⊥) ∨ ⊤ : ★ .");
  const auto* da = a.directives().front();
  const auto* db = b.directives().front();
  EXPECT_EQ(da->subject, db->subject);
  EXPECT_EQ(to_string(da->subject), "or(not(and(top, bot)), top)");
}

TEST(Parse, ConnectivesAssociateToTheRight) {
  Document d = doc(
      "symbol a : * . symbol b : * . symbol c : * . "
      "symbol and : * -> * -> * . symbol or : * -> * -> * . "
      "check a /\\ b /\\ c \\/ a : * .");
  EXPECT_EQ(to_string(d.directives().front()->subject), "or(and(a, and(b, c)), a)");
}

TEST(Parse, BinderGroups) {
  Document d = doc("check fun (A B : *) (x : A) => x : (A B : *) -> A -> A .");
  EXPECT_EQ(to_string(d.directives().front()->other), "(A : *) -> * -> A -> A");
}

TEST(Parse, Comments) {
  Document d = doc("// leading\nsymbol nat : * . // trailing\n// end");
  EXPECT_EQ(d.items.size(), 1u);
}

TEST(Parse, UnknownPragma) {
  EXPECT_NE(parse_error("pragma frobnicate .").find("unknown pragma"), std::string::npos);
}

class RoundTrip : public ::testing::TestWithParam<const char*> {};

TEST_P(RoundTrip, PrintThenParse) {
  Document a = doc(read(testing::corpus(GetParam())));
  std::string printed = print_items(a.items);
  Document b = doc(printed);
  ASSERT_EQ(a.items.size(), b.items.size()) << printed;
  EXPECT_EQ(print_items(b.items), printed);
  ASSERT_EQ(a.theory->rules().size(), b.theory->rules().size());
  for (std::size_t i = 0; i < a.theory->rules().size(); ++i) {
    const RewriteRule& r = a.theory->rules()[i];
    const RewriteRule& q = b.theory->rules()[i];
    EXPECT_EQ(r.name, q.name);
    // Rule variables are fresh per parse; compare through names.
    EXPECT_EQ(to_string(r.lhs), to_string(q.lhs));
    EXPECT_EQ(to_string(r.rhs), to_string(q.rhs));
    EXPECT_EQ(to_string(r.env), to_string(q.env));
  }
  for (const auto& n : a.theory->signature().names())
    EXPECT_EQ(a.theory->decl(n).type, b.theory->decl(n).type) << n;
  auto da = a.directives();
  auto db = b.directives();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (!da[i]->env.empty()) continue;  // free variables differ by identity
    EXPECT_EQ(da[i]->subject, db[i]->subject);
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, RoundTrip,
                         ::testing::Values("app.cac", "app_nonlinear.cac", "int.cac", "listh.cac",
                                           "nat_bundle.cac", "ndm_prop.cac", "neg_duplicating.cac",
                                           "neg_schema.cac", "predicates.cac"));

}  // namespace
}  // namespace cac
