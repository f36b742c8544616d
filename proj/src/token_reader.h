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

#ifndef WTRED_SRC_TOKEN_READER_H
#define WTRED_SRC_TOKEN_READER_H

#include <istream>
#include <string>

#include "wtred/binary_matrix.h"
#include "wtred/errors.h"

namespace wtred {

/// Whitespace tokenizer that remembers where each token came from.
/// Lines whose first non-blank character is '#' are skipped.
class TokenReader {
   public:
    explicit TokenReader(std::istream &in) : in_(in) {
    }

    bool next(std::string &token);
    std::string expect(const char *what);
    size_t expect_count(const char *what);
    /// Peeks without consuming.
    bool peek(std::string &token);

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, line_, column_);
    }
    size_t line() const {
        return line_;
    }

   private:
    bool fill();

    std::istream &in_;
    std::string current_;
    size_t pos_ = 0;
    size_t line_ = 0;
    size_t column_ = 0;
    size_t current_line_ = 0;
    std::string pending_;
    bool has_pending_ = false;
    size_t pending_line_ = 0;
    size_t pending_column_ = 0;
};

/// Text matrix ("rows cols" then rows) read from an already open token stream.
BinaryMatrix read_text_matrix(TokenReader &tr);

}  // namespace wtred

#endif
