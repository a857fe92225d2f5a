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


#include "qasym/harness/json_io.hpp"

#include <cmath>

#include "qasym/errors.hpp"

namespace qasym::harness {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw InputError("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

}  // namespace

Json complex_to_json(Complex z) {
  return Json::array({number_to_json(z.real()), number_to_json(z.imag())});
}

Complex complex_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema_error(pointer, "expected a complex number [re, im]");
  }
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    schema_error(pointer, "non-finite complex entry");
  }
  return z;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) schema_error(pointer, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = pointer + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].empty()) schema_error(rp, "expected a non-empty row array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) {
      schema_error(rp, "ragged matrix: row has " + std::to_string(j[i].size()) +
                           " entries, expected " + std::to_string(cols));
    }
  }
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Index>(i), static_cast<Index>(k)) =
          complex_from_json(j[i][k], pointer + "/" + std::to_string(i) + "/" + std::to_string(k));
    }
  }
  return m;
}

Json number_to_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double number_from_json(const Json& j, const std::string& pointer, double null_value) {
  if (j.is_null()) return null_value;
  if (!j.is_number()) schema_error(pointer, "expected a number");
  return j.get<double>();
}

Json parse_json_text(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw InputError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": " + msg);
  }
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) schema_error(pointer, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(pointer, "missing field \"" + key + "\"");
  return *it;
}

std::string require_string(const Json& j, const std::string& pointer) {
  if (!j.is_string()) schema_error(pointer, "expected a string");
  return j.get<std::string>();
}

bool require_bool(const Json& j, const std::string& pointer) {
  if (!j.is_boolean()) schema_error(pointer, "expected a boolean");
  return j.get<bool>();
}

long long require_integer(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) schema_error(pointer, "expected an integer");
  return j.get<long long>();
}

std::uint64_t require_unsigned(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)) {
    schema_error(pointer, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace qasym::harness
