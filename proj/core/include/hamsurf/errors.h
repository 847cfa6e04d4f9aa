// Copyright 2026 The hamsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAMSURF_ERRORS_H
#define HAMSURF_ERRORS_H

#include <stdexcept>
#include <string>

namespace hamsurf {

/// An argument is outside the domain of the operation (bad distance, level, probability...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operand shapes disagree (vector length vs. matrix columns, frame vs. schema...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// An internal procedure could not complete on the given input.
struct AlgorithmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Required data (e.g. a cached surface-code rate) is missing.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hamsurf

#endif
