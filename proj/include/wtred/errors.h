// Copyright 2026 The wtred Authors
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

#ifndef WTRED_ERRORS_H
#define WTRED_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtred {

/// Bad input from the caller: malformed files, inconsistent shapes, invalid options.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : ValidationError {
    size_t line;
    size_t column;
    ParseError(const std::string &msg, size_t line, size_t column);
};

/// H_X and H_Z fail to commute.
struct CommutationError : ValidationError {
    size_t row_x;
    size_t row_z;
    CommutationError(size_t row_x, size_t row_z);
};

/// A chain map whose squares fail to commute at the given degree.
struct ChainMapError : ValidationError {
    int level;
    explicit ChainMapError(int level);
};

/// A Z logical fits inside the support of a Z stabilizer selected for coning.
struct UnreasonableCodeError : ValidationError {
    size_t z_row;
    std::vector<size_t> witness;
    UnreasonableCodeError(size_t z_row, std::vector<size_t> witness);
};

}  // namespace wtred

#endif
