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

#include "property_suites.hpp"

namespace cac::props {
namespace {

void expect_ok(const SuiteResult& r) {
  EXPECT_GE(r.cases, kCases);
  EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}

TEST(Property, SubstitutionLemma) { expect_ok(substitution_lemma(kSeed, kCases)); }
TEST(Property, SubjectReduction) { expect_ok(subject_reduction(kSeed + 1, kCases)); }
TEST(Property, PolarityDisjointness) { expect_ok(polarity_disjointness(kSeed + 2, kCases)); }
TEST(Property, MatchRoundTrip) { expect_ok(match_round_trip(kSeed + 3, kCases)); }
TEST(Property, NormalizeIdempotence) { expect_ok(normalize_idempotence(kSeed + 4, kCases)); }

// Same seed, same outcome.
TEST(Property, Reproducible) {
  SuiteResult a = match_round_trip(7, 50);
  SuiteResult b = match_round_trip(7, 50);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.first_failure, b.first_failure);
}

}  // namespace
}  // namespace cac::props
