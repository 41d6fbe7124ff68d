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

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <span>
#include <sstream>

#include "fdsec/cli/output.hpp"

namespace fdsec::cli {
namespace {

using Keys = std::span<const std::string_view>;

constexpr std::string_view kTopKeys[] = {"command", "preset",  "spec",       "out",
                                         "format",  "seed",    "rate",       "samples",
                                         "refine",  "batch_size", "alpha_grid_points"};
constexpr std::string_view kSpecKeys[] = {"name",   "variable", "grid",    "budget",
                                          "series", "rate",     "samples", "batch_size"};
constexpr std::string_view kBudgetKeys[] = {"gamma_sr_db", "gamma_rd_db", "gamma_se_db",
                                            "gamma_re_db", "gamma_rr_db", "relays",
                                            "mode"};
constexpr std::string_view kSeriesKeys[] = {"scheme",      "alpha",       "label",
                                            "gamma_sr_db", "gamma_rd_db", "gamma_se_db",
                                            "gamma_re_db", "gamma_rr_db"};

[[noreturn]] void fail(const std::string& message, const std::string& key, const YAML::Node& at) {
  const YAML::Mark mark = at.Mark();
  const bool known = !mark.is_null() && mark.line >= 0;
  throw ConfigError(message, key, known ? mark.line + 1 : 0, known ? mark.column + 1 : 0);
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void check_map(const YAML::Node& node, const std::string& path, Keys allowed) {
  if (!node.IsMap()) fail("expected a mapping", path, node);
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail("unknown key '" + key + "'", join(path, key), kv.first);
    }
  }
}

std::string get_string(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail("expected a string", key, node);
  return node.Scalar();
}

double get_double(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail("expected a number", key, node);
  double v = 0.0;
  if (!YAML::convert<double>::decode(node, v) || !std::isfinite(v)) {
    fail("expected a finite number, got '" + node.Scalar() + "'", key, node);
  }
  return v;
}

std::uint64_t get_u64(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail("expected a non-negative integer", key, node);
  const std::string& s = node.Scalar();
  std::uint64_t v = 0;
  int base = 10;
  std::string_view digits = s;
  if (digits.starts_with("0x") || digits.starts_with("0X")) {
    base = 16;
    digits.remove_prefix(2);
  }
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    fail("expected a non-negative integer, got '" + s + "'", key, node);
  }
  return v;
}

bool get_bool(const YAML::Node& node, const std::string& key) {
  bool v = false;
  if (!node.IsScalar() || !YAML::convert<bool>::decode(node, v)) {
    fail("expected true or false", key, node);
  }
  return v;
}

TargetRate get_rate(const YAML::Node& node, const std::string& key) {
  const double r = get_double(node, key);
  if (r < 0.0) fail("target rate must be >= 0", key, node);
  return TargetRate(r);
}

std::uint64_t get_positive(const YAML::Node& node, const std::string& key) {
  const std::uint64_t v = get_u64(node, key);
  if (v == 0) fail("must be >= 1", key, node);
  return v;
}

LinkBudget parse_budget(const YAML::Node& node, const std::string& path) {
  check_map(node, path, kBudgetKeys);
  auto required = [&](std::string_view key) {
    const std::string full = join(path, key);
    const YAML::Node v = node[std::string(key)];
    if (!v) fail("missing required key '" + std::string(key) + "'", full, node);
    return get_double(v, full);
  };
  LinkDb db;
  db.sr = required("gamma_sr_db");
  db.rd = required("gamma_rd_db");
  db.se = required("gamma_se_db");
  db.re = required("gamma_re_db");
  db.rr = required("gamma_rr_db");
  int relays = 1;
  if (const YAML::Node r = node["relays"]) {
    const std::uint64_t k = get_positive(r, join(path, "relays"));
    if (k > 1024) fail("relays must be <= 1024", join(path, "relays"), r);
    relays = static_cast<int>(k);
  }
  ChannelMode mode = ChannelMode::kStochastic;
  if (const YAML::Node m = node["mode"]) {
    const std::string s = get_string(m, join(path, "mode"));
    if (s == "deterministic") {
      mode = ChannelMode::kDeterministic;
    } else if (s != "stochastic") {
      fail("mode must be stochastic or deterministic", join(path, "mode"), m);
    }
  }
  return LinkBudget::from_db(db, relays, mode);
}

SeriesSpec parse_series_item(const YAML::Node& node, const std::string& path) {
  check_map(node, path, kSeriesKeys);
  SeriesSpec s;
  const YAML::Node scheme = node["scheme"];
  if (!scheme) fail("missing required key 'scheme'", join(path, "scheme"), node);
  const std::string key = get_string(scheme, join(path, "scheme"));
  const auto id = parse_scheme_key(key);
  if (!id) fail("unknown scheme '" + key + "'", join(path, "scheme"), scheme);
  s.scheme.id = *id;
  s.scheme.alpha = *id == SchemeId::kSbj ? 0.5 : 1.0;
  if (const YAML::Node a = node["alpha"]) {
    if (*id != SchemeId::kSbj) fail("alpha only applies to scheme sbj", join(path, "alpha"), a);
    const double alpha = get_double(a, join(path, "alpha"));
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      fail("alpha must lie in [0, 1], got " + a.Scalar(), join(path, "alpha"), a);
    }
    s.scheme.alpha = alpha;
  }
  if (const YAML::Node l = node["label"]) s.label = get_string(l, join(path, "label"));
  auto override_db = [&](std::string_view k, std::optional<double>& slot) {
    if (const YAML::Node v = node[std::string(k)]) slot = get_double(v, join(path, k));
  };
  override_db("gamma_sr_db", s.overrides.sr_db);
  override_db("gamma_rd_db", s.overrides.rd_db);
  override_db("gamma_se_db", s.overrides.se_db);
  override_db("gamma_re_db", s.overrides.re_db);
  override_db("gamma_rr_db", s.overrides.rr_db);
  return s;
}

void apply_estimator_keys(const YAML::Node& node, const std::string& path, SweepSpec& spec) {
  if (const YAML::Node r = node["rate"]) spec.rate = get_rate(r, join(path, "rate"));
  if (const YAML::Node n = node["samples"]) {
    spec.estimator.n_samples = get_positive(n, join(path, "samples"));
  }
  if (const YAML::Node b = node["batch_size"]) {
    spec.estimator.batch_size = get_positive(b, join(path, "batch_size"));
  }
}

SweepSpec parse_spec(const YAML::Node& node, Command command) {
  const std::string path = "spec";
  check_map(node, path, kSpecKeys);
  SweepSpec spec;
  spec.name = "custom";
  if (const YAML::Node n = node["name"]) spec.name = get_string(n, "spec.name");
  if (const YAML::Node v = node["variable"]) {
    const auto var = parse_sweep_variable(get_string(v, "spec.variable"));
    if (!var) fail("variable must be gamma_rr_db or alpha", "spec.variable", v);
    spec.variable = *var;
  }
  if (const YAML::Node g = node["grid"]) {
    if (!g.IsSequence()) fail("expected a list of numbers", "spec.grid", g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      spec.grid.push_back(get_double(g[i], "spec.grid[" + std::to_string(i) + "]"));
    }
  } else if (command == Command::kSweep) {
    fail("missing required key 'grid'", "spec.grid", node);
  }
  const YAML::Node budget = node["budget"];
  if (!budget) fail("missing required key 'budget'", "spec.budget", node);
  spec.budget = parse_budget(budget, "spec.budget");
  if (const YAML::Node s = node["series"]) {
    if (!s.IsSequence()) fail("expected a list", "spec.series", s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      spec.series.push_back(parse_series_item(s[i], "spec.series[" + std::to_string(i) + "]"));
    }
  } else if (command == Command::kAlphaOpt) {
    spec.series.push_back({{SchemeId::kSbj, 0.5}, "SBJ", {}});
  } else {
    fail("missing required key 'series'", "spec.series", node);
  }
  apply_estimator_keys(node, path, spec);
  return spec;
}

void check_semantics(const RunConfig& c, const YAML::Node& root) {
  const SweepSpec& spec = c.spec;
  const std::string where = c.preset ? "preset" : "spec";
  const YAML::Node at = c.preset ? root["preset"] : root["spec"];
  try {
    switch (c.command) {
      case Command::kSweep:
        spec.validate();
        break;
      case Command::kCompare:
      case Command::kAlphaOpt: {
        if (spec.series.empty()) throw std::invalid_argument("series: must not be empty");
        bool any_sbj = false;
        for (const SeriesSpec& s : spec.series) {
          validate_scheme(s.scheme);
          any_sbj = any_sbj || s.scheme.id == SchemeId::kSbj;
          if (spec.budget.num_relays() < min_relays(s.scheme.id)) {
            throw std::invalid_argument("relays: scheme " + std::string(scheme_key(s.scheme.id)) +
                                        " needs at least " +
                                        std::to_string(min_relays(s.scheme.id)));
          }
        }
        if (c.command == Command::kAlphaOpt && !any_sbj) {
          throw std::invalid_argument("series: alpha-opt needs at least one sbj series");
        }
        spec.estimator.validate();
        break;
      }
      case Command::kValidate:
        break;
    }
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    std::string key = where;
    if (const auto colon = msg.find(':'); colon != std::string::npos && colon < 16) {
      key = where + "." + msg.substr(0, colon);
    }
    fail(msg, key, at);
  }
}

std::string number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::string key, int line, int column)
    : std::runtime_error([&] {
        std::string m;
        if (line > 0) m += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
        if (!key.empty()) m += "'" + key + "': ";
        return m + message;
      }()),
      key_(std::move(key)),
      line_(line),
      column_(column) {}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kSweep:
      return "sweep";
    case Command::kAlphaOpt:
      return "alpha-opt";
    case Command::kCompare:
      return "compare";
    case Command::kValidate:
      return "validate";
  }
  return "sweep";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kSweep, Command::kAlphaOpt, Command::kCompare, Command::kValidate}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

RunConfig preset_config(Command command, std::string_view preset) {
  RunConfig c;
  c.command = command;
  c.preset = std::string(preset);
  try {
    c.spec = make_preset(preset);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what(), "preset");
  }
  c.spec.estimator.seed = c.seed;
  return c;
}

RunConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError("parse error: " + e.msg, "", e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) throw ConfigError("configuration must be a mapping", "", 1, 1);
  check_map(root, "", kTopKeys);

  const YAML::Node command_node = root["command"];
  if (!command_node) fail("missing required key 'command'", "command", root);
  const std::string command_text = get_string(command_node, "command");
  const auto command = parse_command(command_text);
  if (!command) {
    fail("unknown command '" + command_text + "' (sweep, alpha-opt, compare, validate)",
         "command", command_node);
  }

  const YAML::Node preset = root["preset"];
  const YAML::Node spec = root["spec"];
  RunConfig c;
  c.command = *command;
  if (*command == Command::kValidate) {
    if (preset || spec) fail("validate takes neither preset nor spec", "command", command_node);
  } else if (preset && spec) {
    fail("preset and spec are mutually exclusive", "spec", spec);
  } else if (!preset && !spec) {
    fail("one of preset or spec is required", "preset", root);
  } else if (preset) {
    const std::string name = get_string(preset, "preset");
    try {
      c.spec = make_preset(name);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), "preset", preset);
    }
    c.preset = name;
  } else {
    c.spec = parse_spec(spec, *command);
  }

  if (const YAML::Node o = root["out"]) c.out = get_string(o, "out");
  if (const YAML::Node f = root["format"]) {
    const std::string s = get_string(f, "format");
    if (s == "csv") {
      c.format = OutputFormat::kCsv;
    } else if (s == "csv+svg") {
      c.format = OutputFormat::kCsvSvg;
    } else {
      fail("format must be csv or csv+svg", "format", f);
    }
  }
  if (const YAML::Node s = root["seed"]) c.seed = get_u64(s, "seed");
  c.spec.estimator.seed = c.seed;
  apply_estimator_keys(root, "", c.spec);
  if (const YAML::Node g = root["alpha_grid_points"]) {
    const std::uint64_t points = get_u64(g, "alpha_grid_points");
    if (points < 3 || points > 100001) fail("alpha_grid_points must be >= 3", "alpha_grid_points", g);
    c.alpha_grid_points = static_cast<int>(points);
  }
  if (const YAML::Node r = root["refine"]) c.alpha_refine = get_bool(r, "refine");

  check_semantics(c, root);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open configuration file");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return parse_config(text.str());
}

std::string dump_config(const RunConfig& c) {
  YAML::Emitter e;
  e << YAML::BeginMap;
  e << YAML::Key << "command" << YAML::Value << std::string(command_name(c.command));
  e << YAML::Key << "seed" << YAML::Value << std::to_string(c.seed);
  if (c.out) e << YAML::Key << "out" << YAML::Value << *c.out;
  e << YAML::Key << "format" << YAML::Value
    << (c.format == OutputFormat::kCsvSvg ? "csv+svg" : "csv");
  if (c.command == Command::kAlphaOpt) {
    e << YAML::Key << "alpha_grid_points" << YAML::Value << std::to_string(c.alpha_grid_points);
    e << YAML::Key << "refine" << YAML::Value << c.alpha_refine;
  }
  if (c.command != Command::kValidate) {
    const SweepSpec& s = c.spec;
    e << YAML::Key << "spec" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "name" << YAML::Value << s.name;
    e << YAML::Key << "variable" << YAML::Value << std::string(sweep_variable_name(s.variable));
    if (!s.grid.empty()) {
      e << YAML::Key << "grid" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (double x : s.grid) e << number(x);
      e << YAML::EndSeq;
    }
    const LinkDb& db = s.budget.db();
    e << YAML::Key << "budget" << YAML::Value << YAML::Flow << YAML::BeginMap;
    e << YAML::Key << "gamma_sr_db" << YAML::Value << number(db.sr);
    e << YAML::Key << "gamma_rd_db" << YAML::Value << number(db.rd);
    e << YAML::Key << "gamma_se_db" << YAML::Value << number(db.se);
    e << YAML::Key << "gamma_re_db" << YAML::Value << number(db.re);
    e << YAML::Key << "gamma_rr_db" << YAML::Value << number(db.rr);
    e << YAML::Key << "relays" << YAML::Value << std::to_string(s.budget.num_relays());
    e << YAML::Key << "mode" << YAML::Value
      << (s.budget.mode() == ChannelMode::kDeterministic ? "deterministic" : "stochastic");
    e << YAML::EndMap;
    e << YAML::Key << "series" << YAML::Value << YAML::BeginSeq;
    for (const SeriesSpec& item : s.series) {
      e << YAML::Flow << YAML::BeginMap;
      e << YAML::Key << "scheme" << YAML::Value << std::string(scheme_key(item.scheme.id));
      if (item.scheme.id == SchemeId::kSbj) {
        e << YAML::Key << "alpha" << YAML::Value << number(item.scheme.alpha);
      }
      if (!item.label.empty()) e << YAML::Key << "label" << YAML::Value << item.label;
      auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) e << YAML::Key << key << YAML::Value << number(*v);
      };
      put("gamma_sr_db", item.overrides.sr_db);
      put("gamma_rd_db", item.overrides.rd_db);
      put("gamma_se_db", item.overrides.se_db);
      put("gamma_re_db", item.overrides.re_db);
      put("gamma_rr_db", item.overrides.rr_db);
      e << YAML::EndMap;
    }
    e << YAML::EndSeq;
    e << YAML::Key << "rate" << YAML::Value << number(s.rate.r0());
    e << YAML::Key << "samples" << YAML::Value << std::to_string(s.estimator.n_samples);
    e << YAML::Key << "batch_size" << YAML::Value << std::to_string(s.estimator.batch_size);
    e << YAML::EndMap;
  }
  e << YAML::EndMap;
  return std::string(e.c_str()) + "\n";
}

}  // namespace fdsec::cli
