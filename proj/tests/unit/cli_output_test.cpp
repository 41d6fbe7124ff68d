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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fdsec::cli {
namespace {

OutputRow row(std::string scheme, double x, double sop, std::string x_name = "gamma_rr_db") {
  return {std::move(scheme), std::move(x_name), x, sop, sop * 0.9, std::min(1.0, sop * 1.1), 100000,
          12648430};
}

std::string csv(const std::vector<OutputRow>& rows, const std::vector<std::string>& meta = {}) {
  std::ostringstream s;
  emit_csv(rows, s, meta);
  return s.str();
}

std::string svg(const std::vector<OutputRow>& rows) {
  std::ostringstream s;
  emit_svg(rows, s);
  return s.str();
}

TEST(Csv, SingleRowExact) {
  EXPECT_EQ(csv({row("FDR", -10, 0.5)}),
            "scheme,x_name,x_value,sop,ci_lo,ci_hi,n,seed\n"
            "FDR,gamma_rr_db,-10.000000,0.500000,0.450000,0.550000,100000,12648430\n");
}

TEST(Csv, FixedSixDecimals) {
  auto r = row("Conventional-FDR", 0.05, 1.0);
  r.ci_lo = 0.99996158;
  r.x_value = -0.0;
  const std::string out = csv({r});
  EXPECT_NE(out.find(",0.000000,1.000000,0.999962,1.000000,"), std::string::npos) << out;
}

TEST(Csv, MetadataAndQuoting) {
  const std::string out = csv({row("SBJ rr=0dB, \"x\"", 1, 0.25)}, {"command: sweep", "seed: 7"});
  EXPECT_EQ(out.rfind("# command: sweep\n# seed: 7\nscheme,", 0), 0u);
  EXPECT_NE(out.find("\"SBJ rr=0dB, \"\"x\"\"\",gamma_rr_db"), std::string::npos) << out;
  EXPECT_EQ(out.find('\r'), std::string::npos);
}

TEST(Csv, EmptyRowsRejected) {
  std::ostringstream s;
  EXPECT_THROW(emit_csv({}, s), std::invalid_argument);
}

TEST(Svg, OnePolylinePerLabel) {
  std::vector<OutputRow> rows;
  for (double x = -10; x <= 40; x += 5) {
    rows.push_back(row("SBJ(alpha=0.5)", x, 1e-3 * (x + 11)));
    rows.push_back(row("Conventional-FDR", x, 1.0));
  }
  const std::string out = svg(rows);
  EXPECT_EQ(out.rfind("<?xml", 0), 0u);
  std::regex poly("<polyline[^>]*points=\"([^\"]*)\"><title>([^<]*)</title>");
  std::vector<std::pair<std::string, std::string>> found;
  for (auto it = std::sregex_iterator(out.begin(), out.end(), poly); it != std::sregex_iterator();
       ++it) {
    found.emplace_back((*it)[2], (*it)[1]);
  }
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].first, "SBJ(alpha=0.5)");
  EXPECT_EQ(found[1].first, "Conventional-FDR");

  std::set<std::string> ys;
  std::istringstream pts(found[1].second);
  std::string p;
  int count = 0;
  while (pts >> p) {
    ys.insert(p.substr(p.find(',') + 1));
    ++count;
  }
  EXPECT_EQ(count, 11);
  EXPECT_EQ(ys.size(), 1u);
}

TEST(Svg, ClampsZeroToAxisFloor) {
  const std::string a = svg({row("A", 0, 0.0), row("A", 1, 1e-9)});
  std::regex poly("points=\"([^\"]*)\"");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(a, m, poly));
  const std::string pts = m[1];
  const auto sp = pts.find(' ');
  EXPECT_EQ(pts.substr(pts.find(',') + 1, sp - pts.find(',') - 1), pts.substr(pts.rfind(',') + 1));
}

TEST(Svg, MetadataInComments) {
  std::ostringstream s;
  const std::vector<std::string> meta{"name: a--b"};
  emit_svg(std::vector<OutputRow>{row("A", 0, 0.5)}, s, meta);
  EXPECT_NE(s.str().find("<!-- name: a- -b -->"), std::string::npos) << s.str();
}

TEST(Svg, Errors) {
  std::ostringstream s;
  EXPECT_THROW(emit_svg({}, s), std::invalid_argument);
  const std::vector<OutputRow> mixed{row("A", 0, 0.5), row("A", 0.5, 0.5, "alpha")};
  EXPECT_THROW(emit_svg(mixed, s), std::invalid_argument);
}

TEST(Files, WriteAndPaths) {
  EXPECT_EQ(svg_path_for("out/results.csv"), "out/results.svg");
  EXPECT_EQ(svg_path_for("results"), "results.svg");
  EXPECT_EQ(svg_path_for("a.d/results"), "a.d/results.svg");

  const auto path = std::filesystem::temp_directory_path() / "fdsec_output_test.csv";
  write_file(path.string(), "a,b\n");
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "a,b\n");
  std::filesystem::remove(path);

  try {
    write_file("/nonexistent/dir/x.csv", "x");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.path(), "/nonexistent/dir/x.csv");
  }
}

}  // namespace
}  // namespace fdsec::cli
