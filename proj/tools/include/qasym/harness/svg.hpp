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


#ifndef QASYM_HARNESS_SVG_HPP
#define QASYM_HARNESS_SVG_HPP

#include <filesystem>
#include <string>

#include "qasym/harness/report.hpp"

namespace qasym::harness {

/// Spectrum figure: unit circle (maps) or imaginary axis (generators), peripheral and
/// bulk markers in different colours, and the gap as a caption. Byte-deterministic.
std::string render_spectrum_svg(const AnalysisReport& r);

/// Throws InputError when the file cannot be written.
void write_spectrum_svg(const AnalysisReport& r, const std::filesystem::path& path);

}  // namespace qasym::harness

#endif  // QASYM_HARNESS_SVG_HPP
