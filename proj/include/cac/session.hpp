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

// A loaded .cac file plus the operations the driver and the C API expose.

#ifndef CAC_SESSION_HPP
#define CAC_SESSION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cac/admissibility.hpp"
#include "cac/error.hpp"
#include "cac/syntax.hpp"
#include "cac/typing.hpp"

namespace cac {

struct DirectiveResult {
  std::size_t index = 0;  // among directives, from 0
  Directive::Kind kind = Directive::Kind::Check;
  SourceLocation where;
  bool ok = false;
  /// Inferred type (check), normal form (normalize), or "convertible".
  std::string result;
  std::optional<ErrorKind> error_kind;
  std::string error;
  Derivation derivation;
};

const char* to_string(Directive::Kind k);

class Session {
 public:
  /// Also used for the theory's lazily computed confluence verdict, so set
  /// it before the first query.
  void set_fuel(std::size_t fuel);
  std::size_t fuel() const { return fuel_; }

  void load_source(std::string_view source, std::string file = "<input>");
  /// Raises Error(InvalidArgument) with an io prefix when unreadable.
  void load_file(const std::string& path);

  bool loaded() const { return doc_.theory != nullptr; }
  const Document& document() const;
  const Theory& theory() const { return *document().theory; }

  std::vector<DirectiveResult> run_directives() const;
  /// The term is checked to be typable before normalizing.
  Term normalize(std::string_view expr) const;
  bool convert(std::string_view a, std::string_view b) const;
  AdmissibilityReport admissibility(bool strict) const;

 private:
  std::size_t fuel_ = kDefaultFuel;
  Document doc_;
};

}  // namespace cac

#endif  // CAC_SESSION_HPP
