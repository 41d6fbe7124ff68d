// Copyright 2026 The fdsec Authors
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

#include "fdsec/cli/output.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>

namespace fdsec::cli {
namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // Avoid "-0.000000".
  if (std::strcmp(buf, "-0.000000") == 0) return "0.000000";
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// "--" is not allowed inside an XML comment.
std::string comment_safe(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '-' && !out.empty() && out.back() == '-') out += ' ';
    out += c;
  }
  return out;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

void emit_csv(std::span<const OutputRow> rows, std::ostream& out,
              std::span<const std::string> metadata) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows");
  for (const std::string& line : metadata) out << "# " << line << '\n';
  out << kCsvHeader << '\n';
  for (const OutputRow& r : rows) {
    out << csv_field(r.scheme) << ',' << csv_field(r.x_name) << ',' << fixed6(r.x_value) << ','
        << fixed6(r.sop) << ',' << fixed6(r.ci_lo) << ',' << fixed6(r.ci_hi) << ',' << r.n << ','
        << r.seed << '\n';
  }
}

void emit_svg(std::span<const OutputRow> rows, std::ostream& out,
              std::span<const std::string> metadata) {
  if (rows.empty()) throw std::invalid_argument("emit_svg: no rows");
  const std::string& x_name = rows.front().x_name;
  for (const OutputRow& r : rows) {
    if (r.x_name != x_name) {
      throw std::invalid_argument("emit_svg: rows mix x names '" + x_name + "' and '" +
                                  r.x_name + "'");
    }
  }

  // Series in first-appearance order.
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::pair<double, double>>> points;
  for (const OutputRow& r : rows) {
    if (!points.contains(r.scheme)) labels.push_back(r.scheme);
    points[r.scheme].emplace_back(r.x_value, r.sop);
  }
  double x_min = rows.front().x_value;
  double x_max = x_min;
  for (const OutputRow& r : rows) {
    x_min = std::min(x_min, r.x_value);
    x_max = std::max(x_max, r.x_value);
  }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }

  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 70, kRight = 200, kTop = 30, kBottom = 60;
  constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;
  constexpr double kLogMin = -6.0, kLogMax = 0.0;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * kPlotW; };
  auto py = [&](double sop) {
    const double y = std::clamp(std::log10(std::max(sop, 1e-300)), kLogMin, kLogMax);
    return kTop + (kLogMax - y) / (kLogMax - kLogMin) * kPlotH;
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  for (const std::string& line : metadata) out << "<!-- " << comment_safe(line) << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";

  // y axis: decades
  for (int d = static_cast<int>(kLogMin); d <= static_cast<int>(kLogMax); ++d) {
    const double y = py(std::pow(10.0, d));
    out << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(y) << "\" x2=\""
        << coord(kLeft + kPlotW) << "\" y2=\"" << coord(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(y + 4)
        << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  // x axis: one tick per distinct x, thinned to at most 12 labels
  std::vector<double> xs;
  for (const OutputRow& r : rows) xs.push_back(r.x_value);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t stride = xs.size() > 12 ? (xs.size() + 11) / 12 : 1;
  for (std::size_t i = 0; i < xs.size(); i += stride) {
    const double x = px(xs[i]);
    char label[32];
    std::snprintf(label, sizeof label, "%g", xs[i]);
    out << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(kTop + kPlotH) << "\" x2=\""
        << coord(x) << "\" y2=\"" << coord(kTop + kPlotH + 5)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << coord(x) << "\" y=\"" << coord(kTop + kPlotH + 20)
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  out << "<rect x=\"" << coord(kLeft) << "\" y=\"" << coord(kTop) << "\" width=\""
      << coord(kPlotW) << "\" height=\"" << coord(kPlotH)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << coord(kLeft + kPlotW / 2) << "\" y=\"" << coord(kHeight - 15)
      << "\" text-anchor=\"middle\">" << xml_escape(x_name) << "</text>\n";
  out << "<text x=\"18\" y=\"" << coord(kTop + kPlotH / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 18 " << coord(kTop + kPlotH / 2)
      << ")\">secrecy outage probability</text>\n";

  for (std::size_t k = 0; k < labels.size(); ++k) {
    std::vector<std::pair<double, double>> pts = points[labels[k]];
    std::stable_sort(pts.begin(), pts.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const char* color = kPalette[k % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) out << ' ';
      out << coord(px(pts[i].first)) << ',' << coord(py(pts[i].second));
    }
    out << "\"><title>" << xml_escape(labels[k]) << "</title></polyline>\n";

    const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
    const double lx = kLeft + kPlotW + 15;
    out << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly) << "\" x2=\"" << coord(lx + 25)
        << "\" y2=\"" << coord(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << coord(lx + 30) << "\" y=\"" << coord(ly + 4) << "\">"
        << xml_escape(labels[k]) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(path, std::string("cannot open for writing: ") + std::strerror(errno));
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.close();
  if (!f) throw IoError(path, "write failed");
}

std::string svg_path_for(const std::string& csv_path) {
  const auto slash = csv_path.find_last_of('/');
  const auto dot = csv_path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return csv_path.substr(0, dot) + ".svg";
  }
  return csv_path + ".svg";
}

}  // namespace fdsec::cli
