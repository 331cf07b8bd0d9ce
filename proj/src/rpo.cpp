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

#include "cac/rpo.hpp"

#include <algorithm>

namespace cac {

namespace {

class Rpo {
 public:
  explicit Rpo(const Precedence& prec) : prec_(prec) {}

  bool ge(const Term& s, const Term& t) { return s == t || gt(s, t); }

  bool gt(const Term& s, const Term& t, std::string* why = nullptr) {
    if (!s.is(TermKind::Symbol)) return false;
    if (t.is(TermKind::Free)) {
      bool ok = occurs_free(t.variable(), s);
      if (ok && why) *why = "variable " + t.variable().name() + " occurs in the left-hand side";
      return ok;
    }
    if (!t.is(TermKind::Symbol)) return false;
    auto ss = s.args();
    auto ts = t.args();
    for (std::size_t i = 0; i < ss.size(); ++i) {
      if (ge(ss[i], t)) {
        if (why) *why = "subterm at argument " + std::to_string(i + 1);
        return true;
      }
    }
    const std::string& f = s.symbol_name();
    const std::string& g = t.symbol_name();
    auto dominates_args = [&] {
      return std::all_of(ts.begin(), ts.end(), [&](const Term& tj) { return gt(s, tj); });
    };
    if (prec_.greater(f, g)) {
      bool ok = dominates_args();
      if (ok && why) *why = "precedence " + f + " > " + g;
      return ok;
    }
    if (prec_.equivalent(f, g)) {
      bool ok = dominates_args() && lex(ss, ts);
      if (ok && why)
        *why = f == g ? "lexicographic on " + f : "lexicographic, " + f + " = " + g;
      return ok;
    }
    return false;
  }

 private:
  bool lex(std::span<const Term> ss, std::span<const Term> ts) {
    std::size_t n = std::min(ss.size(), ts.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (ss[k] == ts[k]) continue;
      return gt(ss[k], ts[k]);
    }
    return ss.size() > ts.size();
  }

  const Precedence& prec_;
};

}  // namespace

bool rpo_greater(const Term& s, const Term& t, const Precedence& prec) {
  return Rpo(prec).gt(s, t);
}

RpoResult rpo_terminates(const std::vector<const RewriteRule*>& rules, const Precedence& prec) {
  RpoResult out;
  Rpo rpo(prec);
  for (const RewriteRule* r : rules) {
    std::string why;
    if (!is_algebraic(r->rhs)) {
      out.failed_rule = r->name;
      out.trace.push_back(r->name + ": right-hand side is not algebraic");
      return out;
    }
    if (!rpo.gt(r->lhs, r->rhs, &why)) {
      out.failed_rule = r->name;
      out.trace.push_back(r->name + ": no ordering proof for " + to_string(r->lhs) + " > " +
                          to_string(r->rhs));
      return out;
    }
    out.trace.push_back(r->name + ": " + to_string(r->lhs) + " > " + to_string(r->rhs) + " (" +
                        why + ")");
  }
  out.proved = true;
  return out;
}

}  // namespace cac
