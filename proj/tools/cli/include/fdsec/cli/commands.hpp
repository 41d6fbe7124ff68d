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
#include <string>
#include <vector>

#include "fdsec/cli/config.hpp"
#include "fdsec/experiments.hpp"

namespace fdsec::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
};

/// Rows for one alpha-opt run: one per sbj series, x_name "alpha_star".
std::vector<OutputRow> run_alpha_opt(const RunConfig& config);

/// Comment lines embedded in every output file: the resolved configuration
/// without the output path and format.
std::vector<std::string> output_metadata(const RunConfig& config);

/// Runs `config`, writing outputs to files or `out`. Diagnostics go to
/// `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fdsec::cli
