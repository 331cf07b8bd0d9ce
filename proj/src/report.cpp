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

#include "cac/report.hpp"

#include <json.hpp>

#include "cac/theory.hpp"

namespace cac {

namespace {

using json = nlohmann::ordered_json;

json env_json(const Environment& env) {
  json a = json::array();
  for (const auto& b : env.bindings()) a.push_back({{"var", b.var.name()}, {"type", to_string(b.type)}});
  return a;
}

json node_json(const Derivation& d, bool root) {
  json j;
  j["rule"] = to_string(d->tag);
  if (root) j["env"] = env_json(d->env);
  j["subject"] = to_string(d->subject);
  j["type"] = to_string(d->type);
  if (!d->note.empty()) j["note"] = d->note;
  json ps = json::array();
  for (const auto& p : d->premises) ps.push_back(node_json(p, false));
  j["premises"] = std::move(ps);
  return j;
}

json property_json(const Property& p) {
  json j{{"state", to_string(p.state)}};
  if (!p.witness.empty()) j["witness"] = p.witness;
  return j;
}

json properties_json(const SystemProperties& p) {
  json j = json::object();
  for (const auto& [name, prop] : property_list(p)) j[name] = property_json(*prop);
  return j;
}

json rpo_json(const RpoResult& r) {
  json j{{"proved", r.proved}, {"trace", r.trace}};
  if (!r.failed_rule.empty()) j["failed_rule"] = r.failed_rule;
  return j;
}

json rho_json(const RewriteRule& r) {
  json a = json::array();
  std::vector<Variable> order = free_vars_ordered(r.lhs);
  for (const auto& b : r.env.bindings()) order.push_back(b.var);
  std::set<Variable> seen;
  for (const Variable& x : order) {
    const Term* t = r.rho.find(x);
    if (!t || !seen.insert(x).second) continue;
    a.push_back({{"var", x.name()}, {"term", to_string(*t)}});
  }
  return a;
}

json rule_json(const Theory& th, const RuleReport& rr) {
  const RewriteRule& r = *th.find_rule(rr.name);
  json j;
  j["name"] = r.name;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["annotated"] = r.annotated;
  j["env"] = env_json(r.env);
  j["rho"] = rho_json(r);
  for (std::size_t i = 0; i < rr.s.size(); ++i)
    j["s" + std::to_string(i + 1)] = {{"outcome", to_string(rr.s[i].outcome)},
                                      {"detail", rr.s[i].detail}};
  const WellFormedResult& wf = rr.schema.well_formed;
  json wj{{"ok", wf.ok}};
  json ws = json::array();
  for (const auto& w : wf.witnesses) {
    json chain = json::array();
    for (const auto& p : w.chain) chain.push_back(to_string(p));
    ws.push_back({{"var", w.var.name()},
                  {"argument", w.argument},
                  {"path", w.path.to_string()},
                  {"derived", to_string(w.derived)},
                  {"chain", chain}});
  }
  wj["witnesses"] = ws;
  json fs = json::array();
  for (const auto& f : wf.failures) fs.push_back({{"var", f.var.name()}, {"reason", f.reason}});
  wj["failures"] = fs;
  j["well_formed"] = wj;
  json gs{{"satisfied", rr.schema.satisfied}};
  gs["derivation"] = rr.schema.closure.derivation ? node_json(rr.schema.closure.derivation, true)
                                                  : json(nullptr);
  if (!rr.schema.closure.error.empty()) gs["error"] = rr.schema.closure.error;
  j["general_schema"] = gs;
  return j;
}

json directive_json(const DirectiveResult& r) {
  json j;
  j["index"] = r.index;
  j["kind"] = to_string(r.kind);
  j["line"] = r.where.line;
  j["ok"] = r.ok;
  if (r.ok)
    j["result"] = r.result;
  else
    j["error"] = {{"kind", to_string(*r.error_kind)}, {"message", r.error}};
  return j;
}

}  // namespace

std::string derivation_json(const Derivation& d) { return node_json(d, true).dump(2); }

std::string derivation_text(const Derivation& d) {
  std::string out;
  auto walk = [&](auto&& self, const Derivation& n, std::size_t depth) -> void {
    out += std::string(2 * depth, ' ') + to_string(n->tag) + "  " + to_string(n->subject) +
           " : " + to_string(n->type);
    if (!n->note.empty()) out += "  [" + n->note + "]";
    out += "\n";
    for (const auto& p : n->premises) self(self, p, depth + 1);
  };
  if (d) walk(walk, d, 0);
  return out;
}

std::string admissibility_json(const Session& s, const AdmissibilityReport& rep) {
  const Theory& th = s.theory();
  json j;
  j["file"] = s.document().file;
  j["fuel"] = s.fuel();

  json syms = json::array();
  for (const auto& n : th.signature().names()) {
    const SymbolDecl& d = th.decl(n);
    json e{{"name", n},
           {"type", to_string(d.type)},
           {"sort", to_string(d.sort)},
           {"arity", d.arity},
           {"defined", th.is_defined(n)}};
    if (auto c = th.constructor_output(n)) e["constructor_of"] = *c;
    const auto& ind = th.structure().ind_of(n);
    const auto& acc = th.structure().acc_of(n);
    if (th.is_free_predicate(n)) e["ind"] = std::vector<unsigned>(ind.begin(), ind.end());
    if (!acc.empty()) e["acc"] = std::vector<unsigned>(acc.begin(), acc.end());
    syms.push_back(e);
  }
  j["symbols"] = syms;
  if (!th.aliases.empty()) {
    json al = json::object();
    for (const auto& [a, b] : th.aliases) al[a] = b;
    j["aliases"] = al;
  }

  json prec;
  json gt = json::array();
  for (const auto& [a, b] : th.precedence().strict_pairs()) gt.push_back(a + " > " + b);
  prec["greater"] = gt;
  prec["equivalent"] = th.precedence().nontrivial_classes();
  j["precedence"] = prec;

  json rules = json::array();
  for (const auto& rr : rep.rules) rules.push_back(rule_json(th, rr));
  j["rules"] = rules;

  // A1
  const ConfluenceVerdict& cv = rep.confluence;
  json a1{{"verdict", to_string(rep.a1)},
          {"level", to_string(cv.level)},
          {"left_linear", cv.left_linear},
          {"non_left_linear", cv.non_left_linear_rules}};
  json cps = json::array();
  for (const auto& o : cv.pairs) {
    json c{{"outer_rule", o.pair.outer_rule},
           {"inner_rule", o.pair.inner_rule},
           {"position", o.pair.position.to_string()},
           {"peak", to_string(o.pair.peak)},
           {"left", to_string(o.pair.left_reduct)},
           {"right", to_string(o.pair.right_reduct)}};
    c["joinable"] = o.joinable ? json(*o.joinable) : json(nullptr);
    if (o.left_normal) c["left_normal"] = to_string(o.left_normal);
    if (o.right_normal) c["right_normal"] = to_string(o.right_normal);
    cps.push_back(c);
  }
  a1["critical_pairs"] = cps;
  if (cv.termination) a1["termination"] = rpo_json(*cv.termination);
  if (!cv.note.empty()) a1["note"] = cv.note;
  j["a1"] = a1;

  // A2
  json a2{{"verdict", to_string(rep.a2)},
          {"precedence_ok", rep.precedence.ok},
          {"cycle", rep.precedence.cycle}};
  json vs = json::array();
  for (const auto& v : rep.structure.violations)
    vs.push_back({{"condition", v.condition},
                  {"predicate", v.predicate},
                  {"constructor", v.constructor},
                  {"argument", v.argument},
                  {"position", v.position.to_string()},
                  {"detail", v.detail}});
  a2["violations"] = vs;
  json preds = json::array();
  for (const auto& [c, k] : rep.predicate_classes) preds.push_back({{"name", c}, {"class", to_string(k)}});
  a2["predicates"] = preds;
  j["a2"] = a2;

  // A3
  j["a3"] = {{"verdict", to_string(rep.a3)},
             {"defined_predicates", rep.defined_predicates},
             {"branch", rep.a3_branch.empty() ? json(nullptr) : json(rep.a3_branch)},
             {"properties", properties_json(rep.a3_properties)}};

  // A4
  j["a4"] = {{"verdict", to_string(rep.a4)},
             {"fa", rep.partition.fa},
             {"fna", rep.partition.fna},
             {"fa_properties", properties_json(rep.fa_properties)},
             {"fna_properties", properties_json(rep.fna_properties)},
             {"termination", rpo_json(rep.termination)},
             {"fa_terminating", to_string(rep.fa_terminating)},
             {"fa_isolated", property_json(rep.fa_isolated)}};

  j["properties"] = properties_json(rep.properties);
  j["assertions"] = rep.assertions;
  j["sufficient"] = rep.sufficient;
  j["failures"] = rep.failures;
  j["overall"] = to_string(rep.overall);
  return j.dump(2) + "\n";
}

std::string admissibility_text(const Session& s, const AdmissibilityReport& rep) {
  const Theory& th = s.theory();
  std::string out;
  auto line = [&](const std::string& l) { out += l + "\n"; };
  line("file: " + s.document().file);
  line("rules: " + std::to_string(th.rules().size()));
  for (const auto& rr : rep.rules) {
    const RewriteRule& r = *th.find_rule(rr.name);
    line("");
    line("rule " + r.name + ": " + to_string(r.lhs) + " -> " + to_string(r.rhs));
    line("  env " + to_string(r.env));
    for (std::size_t i = 0; i < rr.s.size(); ++i) {
      std::string l = "  S" + std::to_string(i + 1) + " " + to_string(rr.s[i].outcome);
      if (!rr.s[i].detail.empty()) l += "  " + rr.s[i].detail;
      line(l);
    }
    line(std::string("  well-formed ") + (rr.schema.well_formed.ok ? "yes" : "no"));
    for (const auto& f : rr.schema.well_formed.failures) line("    " + f.var.name() + ": " + f.reason);
    line(std::string("  general schema ") + (rr.schema.satisfied ? "satisfied" : "not satisfied"));
    if (!rr.schema.closure.error.empty()) line("    " + rr.schema.closure.error);
  }
  line("");
  line(std::string("A1 ") + to_string(rep.a1) + " (" + to_string(rep.confluence.level) + ", " +
       std::to_string(rep.confluence.pairs.size()) + " critical pairs)");
  for (const auto& o : rep.confluence.pairs) {
    std::string j = !o.joinable ? "fuel exhausted" : *o.joinable ? "joinable" : "not joinable";
    line("  " + o.pair.outer_rule + "/" + o.pair.inner_rule + " at " + o.pair.position.to_string() +
         ": " + to_string(o.pair.left_reduct) + " <- " + to_string(o.pair.peak) + " -> " +
         to_string(o.pair.right_reduct) + "  " + j);
  }
  if (!rep.confluence.note.empty()) line("  " + rep.confluence.note);
  line(std::string("A2 ") + to_string(rep.a2));
  if (!rep.precedence.ok) {
    std::string c;
    for (const auto& n : rep.precedence.cycle) c += (c.empty() ? "" : " > ") + n;
    line("  precedence cycle: " + c);
  }
  for (const auto& v : rep.structure.violations) line("  " + v.condition + ": " + v.detail);
  for (const auto& [c, k] : rep.predicate_classes) line("  " + c + " " + to_string(k));
  line(std::string("A3 ") + to_string(rep.a3) +
       (rep.a3_branch.empty() ? "" : " (" + rep.a3_branch + ")"));
  line(std::string("A4 ") + to_string(rep.a4));
  auto names = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& n : v) s += (s.empty() ? "" : ", ") + n;
    return "{" + s + "}";
  };
  line("  F_a = " + names(rep.partition.fa) + ", F_na = " + names(rep.partition.fna));
  line(std::string("  F_a termination ") + to_string(rep.fa_terminating));
  for (const auto& t : rep.termination.trace) line("    " + t);
  line("properties:");
  for (const auto& [name, p] : property_list(rep.properties)) {
    std::string l = std::string("  ") + name + " " + to_string(p->state);
    if (!p->witness.empty()) l += "  " + p->witness;
    line(l);
  }
  if (!rep.assertions.empty()) line("assertions: " + names(rep.assertions));
  if (!rep.sufficient.empty()) line("sufficient conditions: " + names(rep.sufficient));
  if (!rep.failures.empty()) line("failures: " + names(rep.failures));
  line(std::string("overall: ") + to_string(rep.overall));
  return out;
}

std::string directives_text(const Session& s, const std::vector<DirectiveResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += s.document().file + ":" + std::to_string(r.where.line) + ": " + to_string(r.kind) + " ";
    if (r.ok)
      out += "ok  " + r.result + "\n";
    else
      out += std::string("FAILED  ") + r.error + "\n";
  }
  return out;
}

std::string directives_json(const Session& s, const std::vector<DirectiveResult>& results) {
  json j;
  j["file"] = s.document().file;
  j["fuel"] = s.fuel();
  json ds = json::array();
  for (const auto& r : results) ds.push_back(directive_json(r));
  j["directives"] = ds;
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok;
  j["ok"] = ok;
  return j.dump(2) + "\n";
}

}  // namespace cac
