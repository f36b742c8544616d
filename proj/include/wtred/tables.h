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

#ifndef WTRED_TABLES_H
#define WTRED_TABLES_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wtred {

const char *version();

enum class TableScale { desk, full };

struct TableOptions {
    TableScale scale = TableScale::desk;
    uint64_t seed = 0;
    /// 0 picks the scale default.
    size_t perm_trials = 0;
    /// 0 picks the scale default.
    size_t cone_trials = 0;
};

/// "t1", "t3" or "t4" as CSV; other ids throw ValidationError.
std::string table_csv(const std::string &id, const TableOptions &opts);
std::vector<std::string> table_ids();

}  // namespace wtred

#endif
