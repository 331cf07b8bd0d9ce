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

// Text and structured (JSON) renderings. The structured form never shows
// variable identities and lists everything in a fixed order, so two runs on
// the same input produce the same bytes.

#ifndef CAC_REPORT_HPP
#define CAC_REPORT_HPP

#include <string>
#include <vector>

#include "cac/admissibility.hpp"
#include "cac/session.hpp"
#include "cac/typing.hpp"

namespace cac {

std::string admissibility_text(const Session& s, const AdmissibilityReport& rep);
std::string admissibility_json(const Session& s, const AdmissibilityReport& rep);

std::string directives_text(const Session& s, const std::vector<DirectiveResult>& results);
std::string directives_json(const Session& s, const std::vector<DirectiveResult>& results);

/// One line per node, indented by depth: "tag  subject : type  [note]".
std::string derivation_text(const Derivation& d);
std::string derivation_json(const Derivation& d);

}  // namespace cac

#endif  // CAC_REPORT_HPP
