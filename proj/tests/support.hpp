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

// Helpers shared by the test binaries.

#ifndef CAC_TESTS_SUPPORT_HPP
#define CAC_TESTS_SUPPORT_HPP

#include <string>
#include <string_view>

#include "cac/session.hpp"
#include "cac/syntax.hpp"
#include "cac/term.hpp"

namespace cac::testing {

inline std::string corpus(std::string_view name) {
  return std::string(CAC_CORPUS_DIR) + "/" + std::string(name);
}

inline Session load(std::string_view name, std::size_t fuel = kDefaultFuel) {
  Session s;
  s.set_fuel(fuel);
  s.load_file(corpus(name));
  return s;
}

inline Document doc(std::string_view source) { return parse_document(source, "<test>"); }

inline Term term(const Theory& th, std::string_view src, const Environment& scope = {}) {
  return parse_term(th, src, scope);
}

/// Finds a bound variable of `env` by display name.
inline Variable var(const Environment& env, std::string_view name) {
  for (const auto& b : env.bindings())
    if (b.var.name() == name) return b.var;
  return {};
}

}  // namespace cac::testing

#endif  // CAC_TESTS_SUPPORT_HPP
