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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fdsec/experiments.hpp"

namespace fdsec::cli {

enum class Command { kSweep, kAlphaOpt, kCompare, kValidate };
enum class OutputFormat { kCsv, kCsvSvg };

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Raised for malformed or invalid configuration. `line`/`column` are
/// 1-based, 0 when unknown; `key` is the dotted path of the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::string key = {}, int line = 0, int column = 0);

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string key_;
  int line_;
  int column_;
};

/// A fully resolved run. Presets are expanded into `spec`.
struct RunConfig {
  Command command = Command::kSweep;
  /// Preset the spec was expanded from, if any.
  std::optional<std::string> preset;
  SweepSpec spec;
  int alpha_grid_points = 21;
  bool alpha_refine = true;
  /// Absent: CSV to stdout.
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t seed = kDefaultSeed;
};

/// Parses a YAML configuration document (strict: unknown keys are errors).
///
///   command: sweep            # sweep | alpha-opt | compare | validate
///   preset: fig6              # or an inline `spec:` mapping, never both
///   out: results.csv
///   format: csv               # csv | csv+svg
///   seed: 12648430
///   rate: 1                   # optional overrides, applied to presets too
///   samples: 100000
///   batch_size: 4096
///   alpha_grid_points: 21     # alpha-opt only
///   refine: true              # alpha-opt only
///   spec:
///     name: custom
///     variable: gamma_rr_db   # gamma_rr_db | alpha
///     grid: [-10, 0, 10]
///     budget: {gamma_sr_db: 40, gamma_rd_db: 40, gamma_se_db: 10,
///              gamma_re_db: 10, gamma_rr_db: 0, relays: 1, mode: stochastic}
///     series:
///       - {scheme: sbj, alpha: 0.5, label: "SBJ", gamma_sr_db: 20}
///     rate: 1
///     samples: 100000
///     batch_size: 4096
RunConfig parse_config(std::string_view text);

/// Reads and parses a file. I/O failures raise fdsec::cli::IoError.
RunConfig load_config(const std::string& path);

/// Expands a preset into a RunConfig with defaults.
RunConfig preset_config(Command command, std::string_view preset);

/// Serializes the resolved configuration in the parse_config schema, always
/// with an inline spec, so parse_config(dump_config(c)) reproduces c.
std::string dump_config(const RunConfig& config);

}  // namespace fdsec::cli
