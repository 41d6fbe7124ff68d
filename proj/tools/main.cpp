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

// fdsec: secrecy outage simulator for full-duplex relay schemes.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "fdsec/cli/commands.hpp"
#include "fdsec/cli/config.hpp"
#include "fdsec/cli/output.hpp"

namespace {

using fdsec::cli::Command;
using fdsec::cli::RunConfig;

struct Overrides {
  std::string preset;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::uint64_t> samples;
  std::optional<double> rate;
  bool svg = false;
};

void add_common(CLI::App* sub, Overrides& o, bool allow_preset) {
  if (allow_preset) {
    auto* preset = sub->add_option("--preset", o.preset, "Built-in scenario: fig3, fig4, fig6, fig7");
    auto* config = sub->add_option("--config", o.config, "YAML run configuration");
    preset->excludes(config);
    config->excludes(preset);
  } else {
    sub->add_option("--config", o.config, "YAML run configuration")->required();
  }
  sub->add_option("--seed", o.seed, "Master seed (default 0xC0FFEE)");
  sub->add_option("--out", o.out, "CSV output path (default: stdout)");
  sub->add_option("--samples", o.samples, "Monte Carlo samples per point")->check(CLI::PositiveNumber);
  sub->add_option("--rate", o.rate, "Target secrecy rate R0, bits/channel use")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--svg", o.svg, "Also write an SVG plot next to the CSV");
}

RunConfig resolve(Command command, const Overrides& o) {
  RunConfig c;
  if (!o.config.empty()) {
    c = fdsec::cli::load_config(o.config);
    if (c.command != command) {
      throw fdsec::cli::ConfigError("config declares command '" +
                                        std::string(fdsec::cli::command_name(c.command)) +
                                        "' but '" + std::string(fdsec::cli::command_name(command)) +
                                        "' was invoked",
                                    "command");
    }
  } else if (!o.preset.empty()) {
    c = fdsec::cli::preset_config(command, o.preset);
  } else {
    throw fdsec::cli::ConfigError("one of --preset or --config is required");
  }
  if (o.seed) c.seed = *o.seed;
  c.spec.estimator.seed = c.seed;
  if (o.out) c.out = *o.out;
  if (o.samples) c.spec.estimator.n_samples = *o.samples;
  if (o.rate) c.spec.rate = fdsec::TargetRate(*o.rate);
  if (o.svg) c.format = fdsec::cli::OutputFormat::kCsvSvg;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy outage simulator for full-duplex cooperative relay schemes"};
  app.require_subcommand(1);

  Overrides sweep_opts, alpha_opts, compare_opts;
  auto* sweep = app.add_subcommand("sweep", "Sweep gamma_rr or alpha for a set of schemes");
  add_common(sweep, sweep_opts, true);
  auto* alpha = app.add_subcommand("alpha-opt", "Optimize the SBJ power split alpha");
  add_common(alpha, alpha_opts, true);
  auto* compare = app.add_subcommand("compare", "Compare schemes at one operating point");
  add_common(compare, compare_opts, true);
  auto* validate = app.add_subcommand("validate", "Run the built-in oracle checks");
  std::optional<std::uint64_t> validate_seed;
  validate->add_option("--seed", validate_seed, "Seed for the Monte Carlo checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fdsec::cli::kExitConfigError;
  }

  RunConfig config;
  try {
    if (validate->parsed()) {
      config.command = Command::kValidate;
      if (validate_seed) config.seed = *validate_seed;
    } else if (sweep->parsed()) {
      config = resolve(Command::kSweep, sweep_opts);
    } else if (alpha->parsed()) {
      config = resolve(Command::kAlphaOpt, alpha_opts);
    } else {
      config = resolve(Command::kCompare, compare_opts);
    }
  } catch (const fdsec::cli::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return fdsec::cli::kExitConfigError;
  } catch (const fdsec::cli::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return fdsec::cli::kExitIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return fdsec::cli::kExitConfigError;
  }
  return fdsec::cli::run(config, std::cout, std::cerr);
}
