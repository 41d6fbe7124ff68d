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

#include "fdsec/cli/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "fdsec/cli/output.hpp"
#include "fdsec/cli/validate.hpp"

namespace fdsec::cli {

std::vector<OutputRow> run_alpha_opt(const RunConfig& config) {
  const SweepSpec& spec = config.spec;
  std::vector<OutputRow> rows;
  for (const SeriesSpec& s : spec.series) {
    if (s.scheme.id != SchemeId::kSbj) continue;
    const LinkDb db = s.overrides.apply(spec.budget.db());
    const AlphaSearch found = optimize_alpha(spec.budget.with_db(db), spec.rate, spec.estimator,
                                             config.alpha_grid_points, config.alpha_refine);
    const std::string label = s.label.empty() ? "SBJ" : s.label;
    rows.push_back(make_output_row(label, "alpha_star", found.alpha_star, found.estimate));
  }
  if (rows.empty()) throw std::invalid_argument("series: alpha-opt needs at least one sbj series");
  return rows;
}

std::vector<std::string> output_metadata(const RunConfig& config) {
  RunConfig computed = config;
  computed.out.reset();
  computed.format = OutputFormat::kCsv;
  std::vector<std::string> lines;
  std::istringstream text(dump_config(computed));
  for (std::string line; std::getline(text, line);) lines.push_back(line);
  return lines;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::kValidate) {
      ValidationOptions options;
      options.seed = config.seed;
      const ValidationReport report = run_validation(options);
      print_report(report, out);
      return report.all_passed() ? kExitOk : kExitValidationFailure;
    }
    if (config.format == OutputFormat::kCsvSvg && !config.out) {
      throw ConfigError("SVG output needs an output path", "out");
    }

    std::vector<OutputRow> rows;
    switch (config.command) {
      case Command::kSweep:
        rows = run_sweep(config.spec);
        break;
      case Command::kCompare:
        rows = run_compare(config.spec);
        break;
      case Command::kAlphaOpt:
        rows = run_alpha_opt(config);
        break;
      case Command::kValidate:
        break;
    }

    const std::vector<std::string> metadata = output_metadata(config);
    std::ostringstream csv;
    emit_csv(rows, csv, metadata);
    if (!config.out) {
      out << csv.str();
      return kExitOk;
    }
    write_file(*config.out, csv.str());
    if (config.format == OutputFormat::kCsvSvg) {
      std::ostringstream svg;
      emit_svg(rows, svg, metadata);
      write_file(svg_path_for(*config.out), svg.str());
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace fdsec::cli
