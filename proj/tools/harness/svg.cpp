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


#include "qasym/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qasym/errors.hpp"

namespace qasym::harness {

namespace {

constexpr double kSize = 400.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

bool is_peripheral_entry(const AnalysisReport& r, Complex z) {
  for (const auto& p : r.peripheral) {
    if (p == z) return true;
  }
  return false;
}

}  // namespace

std::string render_spectrum_svg(const AnalysisReport& r) {
  const bool generator = r.spectrum_kind == "generator";
  double extent = 1.0;
  for (const auto& z : r.eigenvalues) extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});

  // Plot origin and scale (pixels per unit).
  const double ox = generator ? 0.8 * kSize : 0.5 * kSize;
  const double oy = 0.5 * kSize;
  const double scale = generator ? 0.7 * kSize / extent : 0.4 * kSize / extent;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kSize) << "\" height=\""
    << fmt(kSize) << "\" viewBox=\"0 0 " << fmt(kSize) << " " << fmt(kSize) << "\">\n";
  s << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(kSize) << "\" height=\"" << fmt(kSize)
    << "\" fill=\"white\"/>\n";
  s << "  <line x1=\"0\" y1=\"" << fmt(oy) << "\" x2=\"" << fmt(kSize) << "\" y2=\"" << fmt(oy)
    << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  if (generator) {
    s << "  <line class=\"imaginary-axis\" x1=\"" << fmt(ox) << "\" y1=\"0\" x2=\"" << fmt(ox)
      << "\" y2=\"" << fmt(kSize) << "\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
  } else {
    s << "  <line x1=\"" << fmt(ox) << "\" y1=\"0\" x2=\"" << fmt(ox) << "\" y2=\"" << fmt(kSize)
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    s << "  <circle class=\"unit-circle\" cx=\"" << fmt(ox) << "\" cy=\"" << fmt(oy) << "\" r=\""
      << fmt(scale) << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& z : r.eigenvalues) {
    const bool per = is_peripheral_entry(r, z);
    s << "  <circle class=\"" << (per ? "peripheral" : "bulk") << "\" cx=\""
      << fmt(ox + scale * z.real()) << "\" cy=\"" << fmt(oy - scale * z.imag())
      << "\" r=\"4\" fill=\"" << (per ? "#c0392b" : "#2c6fbb") << "\" fill-opacity=\"0.7\"/>\n";
  }
  std::string gap = "gap = ";
  if (std::isfinite(r.gap)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", r.gap);
    gap += buf;
  } else {
    gap += "inf";
  }
  s << "  <text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"13\">" << gap
    << "</text>\n";
  s << "  <text x=\"10\" y=\"" << fmt(kSize - 10) << "\" font-family=\"monospace\" font-size=\"11\">"
    << r.eigenvalues.size() << " eigenvalues, " << r.peripheral.size() << " peripheral</text>\n";
  s << "</svg>\n";
  return s.str();
}

void write_spectrum_svg(const AnalysisReport& r, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path.string() + ": cannot write SVG");
  out << render_spectrum_svg(r);
  if (!out) throw InputError(path.string() + ": write failed");
}

}  // namespace qasym::harness
