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

#ifndef GINIBRE_ERRORS_HPP
#define GINIBRE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ginibre {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter outside the supported domain (odd matrix dimension, tau outside
// [0,1), nonconvergent hypergeometric parameters, ...).  CLI exit code 2.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A quadrature or interpolation budget was exhausted before the requested
// tolerance was met.  Carries the best estimate and its error bound so
// callers can decide whether the partial result is still usable.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate(estimate), error_bound(error_bound) {}
    double estimate;
    double error_bound;
};

// Result is dominated by floating-point cancellation; retry with the
// high-precision backend.  CLI exit code 3.
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string& what) : Error(what) {}
};

// An iterative numerical method failed to converge (QR eigensolver, ...).
// CLI exit code 4.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace ginibre

#endif
