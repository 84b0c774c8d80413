// Copyright 2026 The dualcx Authors
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


#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "dualcx/eigsolve.hpp"
#include "dualcx/jordan.hpp"

/// JSON wire format. Matrices are {"rows", "cols", "standard", "dual"} with
/// each part a row-major array of [re, im] pairs; vectors use "dim" in place
/// of rows/cols. Scalars are [re_s, im_s, re_d, im_d], dual numbers [std, dual].
namespace dualcx::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed text.
Json parse(std::string_view text);
Json read_file(const std::string& path);

Json to_json(Complex z);
Json to_json(const DualComplex& a);
Json to_json(const DualNumber& a);
Json to_json(const DCMatrix& a);
Json to_json(const DCVector& x);
Json to_json(const EigenReport& report);
Json to_json(const DualJordanForm& form);
Json to_json(const FullJordan& full);
Json to_json(const Diagonalization& d);
Json to_json(const HermitianEigen& h);
Json to_json(const EigenpairCheck& c);

/// Strict readers; every violation throws ParseError.
DualComplex scalar_from_json(const Json& j);
DCMatrix matrix_from_json(const Json& j);
DCVector vector_from_json(const Json& j);

}  // namespace dualcx::io
