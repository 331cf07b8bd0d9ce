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

// Exercises the shared library through its C header only.

#include "cac/cac.h"

#include <gtest/gtest.h>

#include <memory>
#include <string>

namespace {

std::string corpus(const char* name) { return std::string(CAC_CORPUS_DIR) + "/" + name; }

struct Session {
  std::unique_ptr<cac_session, decltype(&cac_session_destroy)> p{cac_session_create(),
                                                                  &cac_session_destroy};
  cac_session* get() { return p.get(); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  cac_string_free(s);
  return out;
}

TEST(CApi, Version) {
  EXPECT_STREQ(cac_version(), "0.1.0");
  EXPECT_STREQ(cac_status_string(CAC_ERR_FUEL), "fuel exhausted");
}

TEST(CApi, NormalizeAndConvert) {
  Session s;
  ASSERT_EQ(cac_load_file(s.get(), corpus("int.cac").c_str()), CAC_OK) << cac_last_error(s.get());
  char* nf = nullptr;
  ASSERT_EQ(cac_normalize(s.get(), "p(s(p(s(0))))", &nf), CAC_OK);
  EXPECT_EQ(take(nf), "0");
  int same = -1;
  ASSERT_EQ(cac_convert(s.get(), "s(p(0))", "p(s(0))", &same), CAC_OK);
  EXPECT_EQ(same, 1);
  ASSERT_EQ(cac_convert(s.get(), "s(0)", "0", &same), CAC_OK);
  EXPECT_EQ(same, 0);
}

TEST(CApi, Admissibility) {
  Session s;
  ASSERT_EQ(cac_load_file(s.get(), corpus("ndm_prop.cac").c_str()), CAC_OK);
  cac_verdict v = CAC_REJECTED;
  char* report = nullptr;
  ASSERT_EQ(cac_admissibility(s.get(), CAC_REPORT_STRUCTURED, 0, &v, &report), CAC_OK);
  EXPECT_EQ(v, CAC_ADMISSIBLE);
  std::string r = take(report);
  EXPECT_NE(r.find("\"overall\": \"ADMISSIBLE\""), std::string::npos);

  Session neg;
  ASSERT_EQ(cac_load_file(neg.get(), corpus("listh.cac").c_str()), CAC_OK);
  EXPECT_EQ(cac_admissibility(neg.get(), CAC_REPORT_TEXT, 0, &v, nullptr), CAC_CHECK_FAILED);
  EXPECT_EQ(v, CAC_REJECTED);
}

TEST(CApi, StrictMode) {
  Session s;
  ASSERT_EQ(cac_load_file(s.get(), corpus("app.cac").c_str()), CAC_OK);
  cac_verdict v;
  EXPECT_EQ(cac_admissibility(s.get(), CAC_REPORT_TEXT, 0, &v, nullptr), CAC_OK);
  EXPECT_EQ(cac_admissibility(s.get(), CAC_REPORT_TEXT, 1, &v, nullptr), CAC_CHECK_FAILED);
}

TEST(CApi, CheckDirectives) {
  Session s;
  ASSERT_EQ(cac_load_source(s.get(),
                            "symbol nat : * . symbol zero : nat .\n"
                            "check zero : nat .\n"
                            "check nat : nat .\n",
                            "inline.cac"),
            CAC_OK);
  char* report = nullptr;
  EXPECT_EQ(cac_check(s.get(), CAC_REPORT_TEXT, &report), CAC_CHECK_FAILED);
  std::string r = take(report);
  EXPECT_NE(r.find("inline.cac:2: check ok"), std::string::npos) << r;
  EXPECT_NE(r.find("inline.cac:3: check FAILED"), std::string::npos) << r;
  EXPECT_STRNE(cac_last_error(s.get()), "");
}

TEST(CApi, ErrorCodes) {
  Session s;
  EXPECT_EQ(cac_load_file(s.get(), "/nonexistent/file.cac"), CAC_ERR_IO);
  EXPECT_EQ(cac_load_source(s.get(), "rule f( ->", "bad.cac"), CAC_ERR_PARSE);
  EXPECT_NE(std::string(cac_last_error(s.get())).find("bad.cac:1:"), std::string::npos);
  EXPECT_EQ(cac_load_source(s.get(), "symbol nat : * . symbol z : nat . symbol w : z .", "t.cac"),
            CAC_ERR_TYPE);
  EXPECT_EQ(cac_load_source(s.get(), nullptr, nullptr), CAC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cac_session_set_fuel(s.get(), 0), CAC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cac_session_set_fuel(nullptr, 10), CAC_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  EXPECT_EQ(cac_normalize(s.get(), "x", &out), CAC_ERR_INVALID_ARGUMENT);  // nothing loaded
}

TEST(CApi, FuelExhaustion) {
  Session s;
  ASSERT_EQ(cac_session_set_fuel(s.get(), 50), CAC_OK);
  ASSERT_EQ(cac_load_file(s.get(), corpus("neg_schema.cac").c_str()), CAC_OK);
  char* nf = nullptr;
  EXPECT_EQ(cac_normalize(s.get(), "f(zero)", &nf), CAC_ERR_FUEL);
  EXPECT_EQ(nf, nullptr);
}

}  // namespace
