// Copyright 2026 The qasym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QASYM_HARNESS_JSON_IO_HPP
#define QASYM_HARNESS_JSON_IO_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qasym/operator.hpp"

namespace qasym::harness {

using Json = nlohmann::ordered_json;

/// Complex numbers are [re, im] pairs.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& pointer);

/// Row-major nested arrays of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
/// Any rectangular shape; the caller checks squareness.
Matrix matrix_from_json(const Json& j, const std::string& pointer);

/// Finite doubles as numbers, everything else as null.
Json number_to_json(double v);
/// null reads back as NaN unless `null_value` says otherwise.
double number_from_json(const Json& j, const std::string& pointer,
                        double null_value = std::numeric_limits<double>::quiet_NaN());

/// Parses text, turning syntax errors into InputError "origin:line:col: message".
Json parse_json_text(std::string_view text, std::string_view origin);

/// Field access with InputError messages that name the JSON pointer.
const Json& require_field(const Json& obj, const std::string& key, const std::string& pointer);
std::string require_string(const Json& j, const std::string& pointer);
bool require_bool(const Json& j, const std::string& pointer);
long long require_integer(const Json& j, const std::string& pointer);
std::uint64_t require_unsigned(const Json& j, const std::string& pointer);

}  // namespace qasym::harness

#endif  // QASYM_HARNESS_JSON_IO_HPP
