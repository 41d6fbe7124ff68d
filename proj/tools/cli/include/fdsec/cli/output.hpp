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

#pragma once

#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdsec/experiments.hpp"

namespace fdsec::cli {

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

inline constexpr const char* kCsvHeader = "scheme,x_name,x_value,sop,ci_lo,ci_hi,n,seed";

/// Writes `# `-prefixed metadata lines, the header, then one line per row.
/// Reals use fixed notation with six decimals, lines end in LF.
void emit_csv(std::span<const OutputRow> rows, std::ostream& out,
              std::span<const std::string> metadata = {});

/// Standalone SVG line plot: one polyline per scheme label, log10 SOP axis
/// clamped to [1e-6, 1]. Throws std::invalid_argument on empty rows or mixed
/// x names.
void emit_svg(std::span<const OutputRow> rows, std::ostream& out,
              std::span<const std::string> metadata = {});

/// Writes `content` to `path` in binary mode; throws IoError.
void write_file(const std::string& path, const std::string& content);

/// `results.csv` -> `results.svg`.
std::string svg_path_for(const std::string& csv_path);

}  // namespace fdsec::cli
