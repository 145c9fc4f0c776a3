/*
 * Copyright 2026 ginibre-interp developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GINIBRE_TOOLS_VALIDATE_HPP
#define GINIBRE_TOOLS_VALIDATE_HPP

#include <string>
#include <vector>

namespace ginibre::tools {

// One cross-validation check: |actual - expected| <= tolerance unless the
// check is a bare predicate (tolerance carries the margin either way).
struct CheckResult {
    std::string suite;
    std::string check;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Runs the cross-validation suite (optionally one named sub-suite: pfaff,
// skewop, exactprob, sampler, kernels, asymptotics).  Throws DomainError for
// an unknown suite name.
std::vector<CheckResult> run_validation(const std::string& suite);

}  // namespace ginibre::tools

#endif
