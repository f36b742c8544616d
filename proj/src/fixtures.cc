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

#include "wtred/fixtures.h"

#include "wtred/errors.h"

namespace wtred {

CssCode qrm4() {
    std::vector<std::string> x{
        "101010101010101",
        "011001100110011",
        "000111100001111",
        "000000011111111",
    };
    std::vector<std::string> z = x;
    for (const char *row : {
             "001000100010001",
             "000010100000101",
             "000001100000011",
             "000000000110011",
             "000000000001111",
             "000000001010101",
         }) {
        z.push_back(row);
    }
    return CssCode(BinaryMatrix::from_strings(x), BinaryMatrix::from_strings(z));
}

BinaryMatrix fixture_633() {
    return BinaryMatrix::from_strings({"110011", "011010", "010101"});
}

BinaryMatrix fixture_734() {
    return BinaryMatrix::from_strings({"1000110", "0100101", "0010011", "0001111"});
}

BinaryMatrix fixture_743() {
    // Hamming code with columns ordered so the unpermuted reduction is a good one.
    return BinaryMatrix::from_strings({"1001110", "0101101", "0011011"});
}

std::vector<std::string> matrix_fixture_names() {
    return {"633", "734", "743"};
}

BinaryMatrix fixture_matrix(const std::string &name) {
    if (name == "633") {
        return fixture_633();
    }
    if (name == "734") {
        return fixture_734();
    }
    if (name == "743") {
        return fixture_743();
    }
    throw ValidationError("unknown matrix fixture '" + name + "'");
}

std::vector<std::string> base_fixture_names() {
    return {"qc1", "qc2", "qc3", "qc4", "qc5", "qc-mixed"};
}

BaseMatrix fixture_base(const std::string &name) {
    if (name == "qc1") {
        return BaseMatrix::from_strings(13, {{"1", "1", "1", "1"}, {"1", "x", "x^3", "x^9"}});
    }
    if (name == "qc2") {
        return BaseMatrix::from_strings(
            31, {{"x", "x^2", "x^4", "x^8"}, {"x^5", "x^10", "x^20", "x^9"}, {"x^25", "x^19", "x^7", "x^14"}});
    }
    if (name == "qc3") {
        return BaseMatrix::from_strings(7, {{"1", "1", "1", "1"}, {"1", "x", "x^2", "x^5"}, {"1", "x^6", "x^3", "x"}});
    }
    if (name == "qc4") {
        return BaseMatrix::from_strings(9, {{"1", "1", "1", "1"}, {"1", "x", "x^6", "x^7"}, {"1", "x^4", "x^5", "x^2"}});
    }
    if (name == "qc5") {
        return BaseMatrix::from_strings(
            17, {{"1", "1", "1", "1"}, {"1", "x", "x^2", "x^11"}, {"1", "x^8", "x^12", "x^13"}});
    }
    if (name == "qc-mixed") {
        return BaseMatrix::from_strings(
            46,
            {{"x+x^2", "0", "x^4", "x^8"}, {"x^5", "x^9", "x^10+x^20", "0"}, {"0", "x^25+x^19", "0", "x^7+x^14"}});
    }
    throw ValidationError("unknown base matrix fixture '" + name + "'");
}

CssCode fixture_code(const std::string &name) {
    if (name == "qrm4") {
        return qrm4();
    }
    if (name.rfind("hgp-", 0) == 0) {
        BinaryMatrix h = fixture_matrix(name.substr(4));
        return hgp(h, h);
    }
    if (name.rfind("lp-", 0) == 0) {
        return lifted_product(fixture_base(name.substr(3)));
    }
    throw ValidationError("unknown code fixture '" + name + "'");
}

}  // namespace wtred
