// Copyright 2026 The semgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "support/property_checks.hpp"

using namespace semgraph::testing;

namespace {

void expect(const PropertyResult &r) {
  INFO(r.name << ": " << r.failures << " of " << r.cases << " failed; first: " << r.first_failure);
  CHECK(r.cases > 0);
  CHECK(r.failures == 0);
}

}  // namespace

// Different seeds from the acceptance run, so the two cover different graphs.
TEST_CASE("property: shortest path matches brute force") { expect(check_shortest_path_bruteforce(11, 25)); }
TEST_CASE("property: similarity symmetric and in range") { expect(check_similarity_symmetry_range(12, 300)); }
TEST_CASE("property: monotone factors") { expect(check_monotonicity(13, 200)); }
TEST_CASE("property: disambiguation matches exhaustive scoring") { expect(check_wsd_oracle(14, 200)); }
TEST_CASE("property: zeta fallback") { expect(check_zeta_fallback(15, 300)); }
TEST_CASE("property: priors normalize") { expect(check_prior_normalization(16, 200)); }
TEST_CASE("property: pearson affine invariance") { expect(check_pearson_affine(17, 200)); }
