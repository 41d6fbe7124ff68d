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

#include "fdsec/cli/config.hpp"

#include <gtest/gtest.h>

#include <string>

#include "fdsec/cli/output.hpp"

namespace fdsec::cli {
namespace {

ConfigError expect_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no ConfigError for:\n" << text;
  return ConfigError("none");
}

TEST(ParseConfig, MinimalPreset) {
  const auto c = parse_config("command: sweep\npreset: fig6\n");
  EXPECT_EQ(c.command, Command::kSweep);
  EXPECT_EQ(c.preset, "fig6");
  EXPECT_EQ(c.spec.series.size(), 2u);
  EXPECT_EQ(c.seed, kDefaultSeed);
  EXPECT_EQ(c.spec.estimator.seed, kDefaultSeed);
  EXPECT_FALSE(c.out.has_value());
  EXPECT_EQ(c.format, OutputFormat::kCsv);
}

TEST(ParseConfig, TopLevelOverrides) {
  const auto c = parse_config(
      "command: alpha-opt\npreset: fig7\nseed: 0x10\nsamples: 500\nrate: 2\n"
      "batch_size: 64\nout: a.csv\nformat: csv+svg\nalpha_grid_points: 11\nrefine: false\n");
  EXPECT_EQ(c.command, Command::kAlphaOpt);
  EXPECT_EQ(c.seed, 16u);
  EXPECT_EQ(c.spec.estimator.seed, 16u);
  EXPECT_EQ(c.spec.estimator.n_samples, 500u);
  EXPECT_EQ(c.spec.estimator.batch_size, 64u);
  EXPECT_EQ(c.spec.rate.r0(), 2.0);
  EXPECT_EQ(c.out, "a.csv");
  EXPECT_EQ(c.format, OutputFormat::kCsvSvg);
  EXPECT_EQ(c.alpha_grid_points, 11);
  EXPECT_FALSE(c.alpha_refine);
}

TEST(ParseConfig, InlineSpec) {
  const auto c = parse_config(R"(command: sweep
spec:
  name: custom
  variable: gamma_rr_db
  grid: [-10, 0, 10]
  budget: {gamma_sr_db: 40, gamma_rd_db: 40, gamma_se_db: 10, gamma_re_db: 10,
           gamma_rr_db: 0, relays: 2, mode: deterministic}
  series:
    - {scheme: sbj, alpha: 0.25, gamma_sr_db: 20}
    - {scheme: o-fd-rs, label: best}
  rate: 1.5
  samples: 1000
)");
  EXPECT_EQ(c.spec.name, "custom");
  EXPECT_EQ(c.spec.grid, (std::vector<double>{-10, 0, 10}));
  EXPECT_EQ(c.spec.budget.num_relays(), 2);
  EXPECT_EQ(c.spec.budget.mode(), ChannelMode::kDeterministic);
  ASSERT_EQ(c.spec.series.size(), 2u);
  EXPECT_EQ(c.spec.series[0].scheme, (SchemeSpec{SchemeId::kSbj, 0.25}));
  EXPECT_EQ(c.spec.series[0].overrides.sr_db, 20.0);
  EXPECT_EQ(c.spec.series[1].label, "best");
  EXPECT_EQ(c.spec.rate.r0(), 1.5);
  EXPECT_EQ(c.spec.estimator.n_samples, 1000u);
}

TEST(ParseConfig, AlphaOutOfRangeNamesKey) {
  const auto e = expect_error(R"(command: sweep
spec:
  grid: [0]
  budget: {gamma_sr_db: 40, gamma_rd_db: 40, gamma_se_db: 10, gamma_re_db: 10, gamma_rr_db: 0}
  series:
    - {scheme: sbj, alpha: 1.5}
)");
  EXPECT_EQ(e.key(), "spec.series[0].alpha");
  EXPECT_EQ(e.line(), 6);
  EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
}

TEST(ParseConfig, UnknownKeysRejectedWithPosition) {
  const auto top = expect_error("command: sweep\npreset: fig3\nsamles: 10\n");
  EXPECT_EQ(top.key(), "samles");
  EXPECT_EQ(top.line(), 3);
  EXPECT_EQ(top.column(), 1);

  const auto nested = expect_error(R"(command: sweep
spec:
  grid: [0]
  budget: {gamma_sr_db: 40, gamma_rd_db: 40, gamma_se_db: 10, gamma_re_db: 10, gamma_rr_db: 0,
           gamma_xx_db: 3}
  series: [{scheme: fdr}]
)");
  EXPECT_EQ(nested.key(), "spec.budget.gamma_xx_db");
  EXPECT_EQ(nested.line(), 5);
}

TEST(ParseConfig, StructuralErrors) {
  EXPECT_EQ(expect_error("command: sweep\npreset: fig3\nspec: {}\n").key(), "spec");
  EXPECT_EQ(expect_error("command: sweep\n").key(), "preset");
  EXPECT_EQ(expect_error("preset: fig3\n").key(), "command");
  EXPECT_EQ(expect_error("command: plot\npreset: fig3\n").key(), "command");
  EXPECT_EQ(expect_error("command: sweep\npreset: fig9\n").key(), "preset");
  EXPECT_EQ(expect_error("command: validate\npreset: fig3\n").key(), "command");
  EXPECT_EQ(expect_error("command: sweep\npreset: fig3\nformat: png\n").key(), "format");
  EXPECT_EQ(expect_error("command: sweep\npreset: fig3\nsamples: 0\n").key(), "samples");
  EXPECT_EQ(expect_error("command: sweep\npreset: fig3\nseed: -4\n").key(), "seed");
  EXPECT_EQ(expect_error("command: sweep\npreset: fig3\nrate: -1\n").key(), "rate");
  EXPECT_EQ(expect_error("command: sweep\npreset: fig3\nrate: abc\n").key(), "rate");
  EXPECT_EQ(expect_error("- a\n- b\n").line(), 1);
  EXPECT_GT(expect_error("command: [sweep\n").line(), 0);
}

TEST(ParseConfig, SpecErrors) {
  const std::string budget =
      "  budget: {gamma_sr_db: 40, gamma_rd_db: 40, gamma_se_db: 10, gamma_re_db: 10, "
      "gamma_rr_db: 0}\n";
  EXPECT_EQ(expect_error("command: sweep\nspec:\n  grid: []\n" + budget +
                         "  series: [{scheme: fdr}]\n")
                .key(),
            "spec.grid");
  EXPECT_EQ(expect_error("command: sweep\nspec:\n  grid: [0]\n" + budget +
                         "  series: [{scheme: warp}]\n")
                .key(),
            "spec.series[0].scheme");
  EXPECT_EQ(expect_error("command: sweep\nspec:\n  grid: [0]\n"
                         "  budget: {gamma_sr_db: 40}\n  series: [{scheme: fdr}]\n")
                .key(),
            "spec.budget.gamma_rd_db");
}

TEST(ParseConfig, ValidateNeedsNoSpec) {
  const auto c = parse_config("command: validate\nseed: 5\n");
  EXPECT_EQ(c.command, Command::kValidate);
  EXPECT_EQ(c.seed, 5u);
}

TEST(ParseConfig, ErrorMessageCarriesPosition) {
  const auto e = expect_error("command: sweep\npreset: fig3\nbogus: 1\n");
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
}

TEST(DumpConfig, RoundTrips) {
  for (const auto& name : preset_names()) {
    for (Command cmd : {Command::kSweep, Command::kCompare, Command::kAlphaOpt}) {
      if (cmd == Command::kAlphaOpt && (name == "fig3" || name == "fig4")) continue;
      RunConfig c = preset_config(cmd, name);
      c.seed = 99;
      c.spec.estimator.seed = 99;
      c.out = "x.csv";
      const RunConfig back = parse_config(dump_config(c));
      EXPECT_EQ(back.command, c.command);
      EXPECT_EQ(back.seed, c.seed);
      EXPECT_EQ(back.out, c.out);
      EXPECT_EQ(back.spec.name, c.spec.name);
      EXPECT_EQ(back.spec.grid, c.spec.grid);
      EXPECT_EQ(back.spec.budget, c.spec.budget);
      EXPECT_EQ(back.spec.series, c.spec.series);
      EXPECT_EQ(back.spec.rate.r0(), c.spec.rate.r0());
      EXPECT_EQ(back.spec.estimator.n_samples, c.spec.estimator.n_samples);
      EXPECT_EQ(back.spec.estimator.seed, c.spec.estimator.seed);
      EXPECT_EQ(dump_config(back), dump_config(c));
    }
  }
}

TEST(ParseConfig, AlphaOptNeedsSbjSeries) {
  EXPECT_EQ(expect_error("command: alpha-opt\npreset: fig3\n").key(), "preset.series");
}

TEST(LoadConfig, MissingFileIsIoError) {
  EXPECT_THROW(load_config("/nonexistent/dir/run.yaml"), IoError);
}

}  // namespace
}  // namespace fdsec::cli
