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

// Randomized, seed-fixed property suites over the corpus theories. Shared
// by the property test binary and the acceptance runner.

#ifndef CAC_TESTS_PROPERTY_SUITES_HPP
#define CAC_TESTS_PROPERTY_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cac::props {

inline constexpr std::uint64_t kSeed = 20260101;
inline constexpr std::size_t kCases = 500;

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool ok() const { return failures == 0 && cases >= kCases; }
};

SuiteResult substitution_lemma(std::uint64_t seed, std::size_t cases);
SuiteResult subject_reduction(std::uint64_t seed, std::size_t cases);
SuiteResult polarity_disjointness(std::uint64_t seed, std::size_t cases);
SuiteResult match_round_trip(std::uint64_t seed, std::size_t cases);
SuiteResult normalize_idempotence(std::uint64_t seed, std::size_t cases);

std::vector<SuiteResult> run_all(std::uint64_t seed = kSeed, std::size_t cases = kCases);

}  // namespace cac::props

#endif  // CAC_TESTS_PROPERTY_SUITES_HPP
