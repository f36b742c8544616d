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

#ifndef WTRED_FIXTURES_H
#define WTRED_FIXTURES_H

#include <string>
#include <vector>

#include "wtred/binary_matrix.h"
#include "wtred/css_code.h"
#include "wtred/ring.h"

namespace wtred {

/// Quantum Reed-Muller [[15,1,3]] code.
CssCode qrm4();

/// Parity checks for [6,3,3], [7,3,4] and [7,4,3] codes.
BinaryMatrix fixture_633();
BinaryMatrix fixture_734();
BinaryMatrix fixture_743();

/// Quasi-cyclic base matrices: "qc1" (ell 13), "qc2" (ell 31), "qc3" (ell 7), "qc4" (ell 9),
/// "qc5" (ell 17) and the heavy-entry "qc-mixed" (ell 46).
BaseMatrix fixture_base(const std::string &name);
std::vector<std::string> base_fixture_names();

/// "633", "734", "743"; throws ValidationError otherwise.
BinaryMatrix fixture_matrix(const std::string &name);
std::vector<std::string> matrix_fixture_names();

/// "qrm4", or "hgp-<matrix fixture>", or "lp-<base fixture>".
CssCode fixture_code(const std::string &name);

}  // namespace wtred

#endif
