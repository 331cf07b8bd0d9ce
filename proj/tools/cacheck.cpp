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

// cacheck: command-line driver over the C API.
//
// Exit codes: 0 everything passed, 1 a check failed (including type errors
// and exhausted fuel), 2 usage, parse or i/o error.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "cac/cac.h"

namespace {

constexpr int kPass = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

using SessionPtr = std::unique_ptr<cac_session, decltype(&cac_session_destroy)>;

int exit_code(cac_status st) {
  switch (st) {
    case CAC_OK: return kPass;
    case CAC_ERR_PARSE:
    case CAC_ERR_IO:
    case CAC_ERR_INVALID_ARGUMENT: return kUsage;
    default: return kFailed;
  }
}

int fail(const cac_session* s, cac_status st) {
  std::fprintf(stderr, "cacheck: %s: %s\n", cac_status_string(st), cac_last_error(s));
  return exit_code(st);
}

void emit(char* text) {
  if (!text) return;
  std::fputs(text, stdout);
  cac_string_free(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker for algebraic constructions: typing, rewriting and admissibility"};
  app.require_subcommand(1);

  std::size_t fuel = 10000;
  std::string format = "text";
  bool strict = false;
  std::string file;
  std::vector<std::string> exprs;

  app.add_option("--fuel", fuel, "Reduction budget per check")->check(CLI::PositiveNumber);
  app.add_option("--report", format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--strict", strict, "Count ASSERTED and PASS_SUFFICIENT outcomes as failures");

  auto* check = app.add_subcommand("check", "Typecheck every directive of FILE");
  auto* adm = app.add_subcommand("admissibility", "Run the admissibility pipeline on FILE");
  auto* norm = app.add_subcommand("normalize", "Print the normal form of a term");
  auto* conv = app.add_subcommand("convert", "Decide whether two terms are convertible");
  for (auto* sub : {check, adm, norm, conv}) {
    sub->add_option("FILE", file, "Declaration file (.cac)")->required();
    sub->fallthrough();
  }
  norm->add_option("-e,--expr", exprs, "Term to normalize")->required()->expected(1);
  conv->add_option("-e,--expr", exprs, "Terms to compare")->required()->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  cac_report_format fmt = format == "structured" ? CAC_REPORT_STRUCTURED : CAC_REPORT_TEXT;
  SessionPtr session(cac_session_create(), &cac_session_destroy);
  if (!session) {
    std::fputs("cacheck: out of memory\n", stderr);
    return kFailed;
  }
  cac_session* s = session.get();
  if (cac_status st = cac_session_set_fuel(s, fuel); st != CAC_OK) return fail(s, st);
  if (cac_status st = cac_load_file(s, file.c_str()); st != CAC_OK) return fail(s, st);

  if (*check) {
    char* report = nullptr;
    cac_status st = cac_check(s, fmt, &report);
    emit(report);
    if (st == CAC_CHECK_FAILED) return kFailed;
    return st == CAC_OK ? kPass : fail(s, st);
  }
  if (*adm) {
    char* report = nullptr;
    cac_verdict verdict = CAC_REJECTED;
    cac_status st = cac_admissibility(s, fmt, strict ? 1 : 0, &verdict, &report);
    emit(report);
    if (st == CAC_CHECK_FAILED) return kFailed;
    return st == CAC_OK ? kPass : fail(s, st);
  }
  if (*norm) {
    char* nf = nullptr;
    cac_status st = cac_normalize(s, exprs.front().c_str(), &nf);
    if (st != CAC_OK) return fail(s, st);
    emit(nf);
    std::fputs("\n", stdout);
    return kPass;
  }
  int same = 0;
  cac_status st = cac_convert(s, exprs[0].c_str(), exprs[1].c_str(), &same);
  if (st != CAC_OK) return fail(s, st);
  std::puts(same ? "convertible" : "not convertible");
  return same ? kPass : kFailed;
}
