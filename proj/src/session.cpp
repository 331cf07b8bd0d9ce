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

#include "cac/session.hpp"

#include <fstream>
#include <sstream>

#include "cac/reduction.hpp"

namespace cac {

const char* to_string(Directive::Kind k) {
  switch (k) {
    case Directive::Kind::Check: return "check";
    case Directive::Kind::Normalize: return "normalize";
    case Directive::Kind::Convert: return "convert";
  }
  return "?";
}

void Session::set_fuel(std::size_t fuel) {
  fuel_ = fuel;
  if (doc_.theory) doc_.theory->fuel = fuel;
}

void Session::load_source(std::string_view source, std::string file) {
  Document d = parse_document(source, std::move(file));
  d.theory->fuel = fuel_;
  doc_ = std::move(d);
}

void Session::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "io: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  load_source(ss.str(), path);
}

const Document& Session::document() const {
  if (!loaded()) throw Error(ErrorKind::InvalidArgument, "no file loaded");
  return doc_;
}

std::vector<DirectiveResult> Session::run_directives() const {
  const Theory& th = theory();
  std::vector<DirectiveResult> out;
  std::size_t i = 0;
  for (const Directive* d : document().directives()) {
    DirectiveResult r;
    r.index = i++;
    r.kind = d->kind;
    r.where = d->where;
    try {
      switch (d->kind) {
        case Directive::Kind::Check:
          r.derivation = check(th, d->env, d->subject, d->other, fuel_);
          r.result = to_string(d->other);
          break;
        case Directive::Kind::Normalize: {
          Typed t = infer(th, d->env, d->subject, fuel_);
          r.derivation = t.derivation;
          r.result = to_string(cac::normalize(d->subject, th, fuel_));
          break;
        }
        case Directive::Kind::Convert: {
          infer(th, d->env, d->subject, fuel_);
          infer(th, d->env, d->other, fuel_);
          if (!convertible(th, d->subject, d->other, fuel_))
            throw Error(ErrorKind::ConversionFailure,
                        to_string(d->subject) + " and " + to_string(d->other) +
                            " are not convertible");
          r.result = "convertible";
          break;
        }
      }
      r.ok = true;
    } catch (const Error& e) {
      r.ok = false;
      r.error_kind = e.kind();
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

Term Session::normalize(std::string_view expr) const {
  Term t = parse_term(theory(), expr);
  infer(theory(), {}, t, fuel_);
  return cac::normalize(t, theory(), fuel_);
}

bool Session::convert(std::string_view a, std::string_view b) const {
  Term t = parse_term(theory(), a);
  Term u = parse_term(theory(), b);
  infer(theory(), {}, t, fuel_);
  infer(theory(), {}, u, fuel_);
  return convertible(theory(), t, u, fuel_);
}

AdmissibilityReport Session::admissibility(bool strict) const {
  return check_admissible(theory(), fuel_, strict);
}

}  // namespace cac
