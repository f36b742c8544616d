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

#include "token_reader.h"

#include <cctype>

namespace wtred {

ParseError::ParseError(const std::string &msg, size_t line, size_t column)
    : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line(line),
      column(column) {
}

CommutationError::CommutationError(size_t row_x, size_t row_z)
    : ValidationError(
          "X row " + std::to_string(row_x) + " and Z row " + std::to_string(row_z) + " overlap on an odd number of qubits"),
      row_x(row_x),
      row_z(row_z) {
}

static std::string join_indices(const std::vector<size_t> &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(v[i]);
    }
    return s;
}

ChainMapError::ChainMapError(int level)
    : ValidationError("chain map does not commute with the boundaries at degree " + std::to_string(level)),
      level(level) {
}

UnreasonableCodeError::UnreasonableCodeError(size_t z_row, std::vector<size_t> witness)
    : ValidationError(
          "Z row " + std::to_string(z_row) + " contains a Z logical on qubits {" + join_indices(witness) + "}"),
      z_row(z_row),
      witness(std::move(witness)) {
}

bool TokenReader::fill() {
    while (pos_ >= current_.size()) {
        if (!std::getline(in_, current_)) {
            return false;
        }
        current_line_++;
        pos_ = 0;
        size_t first = current_.find_first_not_of(" \t\r");
        if (first != std::string::npos && current_[first] == '#') {
            current_.clear();
            continue;
        }
        while (pos_ < current_.size() && std::isspace((unsigned char)current_[pos_])) {
            pos_++;
        }
    }
    return true;
}

bool TokenReader::next(std::string &token) {
    if (has_pending_) {
        has_pending_ = false;
        token = pending_;
        line_ = pending_line_;
        column_ = pending_column_;
        return true;
    }
    while (true) {
        if (!fill()) {
            line_ = current_line_ + 1;
            column_ = 1;
            return false;
        }
        while (pos_ < current_.size() && std::isspace((unsigned char)current_[pos_])) {
            pos_++;
        }
        if (pos_ < current_.size()) {
            break;
        }
    }
    size_t start = pos_;
    while (pos_ < current_.size() && !std::isspace((unsigned char)current_[pos_])) {
        pos_++;
    }
    token = current_.substr(start, pos_ - start);
    line_ = current_line_;
    column_ = start + 1;
    return true;
}

bool TokenReader::peek(std::string &token) {
    if (has_pending_) {
        token = pending_;
        return true;
    }
    size_t saved_line = line_;
    size_t saved_column = column_;
    if (!next(token)) {
        return false;
    }
    pending_ = token;
    pending_line_ = line_;
    pending_column_ = column_;
    has_pending_ = true;
    line_ = saved_line;
    column_ = saved_column;
    return true;
}

std::string TokenReader::expect(const char *what) {
    std::string t;
    if (!next(t)) {
        fail(std::string("unexpected end of input, expected ") + what);
    }
    return t;
}

size_t TokenReader::expect_count(const char *what) {
    std::string t = expect(what);
    size_t value = 0;
    if (t.empty() || t.size() > 18) {
        fail(std::string("expected ") + what + ", got '" + t + "'");
    }
    for (char ch : t) {
        if (!std::isdigit((unsigned char)ch)) {
            fail(std::string("expected ") + what + ", got '" + t + "'");
        }
        value = value * 10 + (size_t)(ch - '0');
    }
    return value;
}

}  // namespace wtred
