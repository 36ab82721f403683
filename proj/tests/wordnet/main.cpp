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

#define DOCTEST_CONFIG_IMPLEMENT
#include <iostream>

#include "doctest.h"
#include "support/test_support.hpp"

// Suites in this binary need the real dictionary; without it the whole run
// is reported to ctest as skipped.
int main(int argc, char **argv) {
  if (!semgraph::testing::wordnet_dir()) {
    std::cout << "SEMGRAPH_WN_DIR not set or not a WordNet dict; skipping\n";
    return 77;
  }
  doctest::Context context(argc, argv);
  return context.run();
}
