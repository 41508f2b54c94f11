// Copyright 2026 The follow_up_scenarios Authors
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

#include "follow_up/dataset.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

namespace follow_up
{

namespace
{
using Json = nlohmann::ordered_json;

//---------------------------------------------------------------------------
// Number formatting

std::string format_double(double value, int digits)
{
  std::array<char, 64> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.*g", digits, value);
  return std::string(buffer.data());
}

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view text)
{
  text = trim(text);
  if (text.empty()) {
    return std::nullopt;
  }
  const std::string owned(text);
  char * end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::uint64_t> parse_u64(std::string_view text)
{
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

//---------------------------------------------------------------------------
// Config key table

struct RealField
{
  const char * key;
  double & (*ref)(GenerationConfig &);
};

struct CountField
{
  const char * key;
  std::uint64_t & (*ref)(GenerationConfig &);
};

// clang-format off
constexpr std::array<CountField, 3> kCountFields{{
  {"n_series", [](GenerationConfig & c) -> std::uint64_t & { return c.n_series; }},
  {"n_points", [](GenerationConfig & c) -> std::uint64_t & { return c.n_points; }},
  {"seed",     [](GenerationConfig & c) -> std::uint64_t & { return c.seed; }},
}};

constexpr std::array<RealField, 20> kRealFields{{
  {"t0",                  [](GenerationConfig & c) -> double & { return c.t0; }},
  {"dt",                  [](GenerationConfig & c) -> double & { return c.dt; }},
  {"vehicle_length",      [](GenerationConfig & c) -> double & { return c.vehicle_length; }},
  {"accel_leader_mean",   [](GenerationConfig & c) -> double & { return c.accel_leader.mu; }},
  {"accel_leader_sd",     [](GenerationConfig & c) -> double & { return c.accel_leader.sigma; }},
  {"accel_follower_mean", [](GenerationConfig & c) -> double & { return c.accel_follower.mu; }},
  {"accel_follower_sd",   [](GenerationConfig & c) -> double & { return c.accel_follower.sigma; }},
  {"pos_leader_mean",     [](GenerationConfig & c) -> double & { return c.pos_leader.mu; }},
  {"pos_leader_sd",       [](GenerationConfig & c) -> double & { return c.pos_leader.sigma; }},
  {"vel_leader_mean",     [](GenerationConfig & c) -> double & { return c.vel_leader.mu; }},
  {"vel_leader_sd",       [](GenerationConfig & c) -> double & { return c.vel_leader.sigma; }},
  {"pos_follower_mean",   [](GenerationConfig & c) -> double & { return c.pos_follower.mu; }},
  {"pos_follower_sd",     [](GenerationConfig & c) -> double & { return c.pos_follower.sigma; }},
  {"vel_follower_mean",   [](GenerationConfig & c) -> double & { return c.vel_follower.mu; }},
  {"vel_follower_sd",     [](GenerationConfig & c) -> double & { return c.vel_follower.sigma; }},
  {"reaction_shape",      [](GenerationConfig & c) -> double & { return c.reaction.shape; }},
  {"reaction_scale",      [](GenerationConfig & c) -> double & { return c.reaction.scale; }},
  {"reaction_min",        [](GenerationConfig & c) -> double & { return c.truncation.lo; }},
  {"reaction_max",        [](GenerationConfig & c) -> double & { return c.truncation.hi; }},
  {"a_min",               [](GenerationConfig & c) -> double & { return c.a_min; }},
}};
// clang-format on

template <typename Fn>
void for_each_real(Fn && fn)
{
  for (const auto & field : kRealFields) {
    fn(field);
  }
}

Json config_to_json(GenerationConfig cfg)
{
  Json j = Json::object();
  for (const auto & field : kCountFields) {
    j[field.key] = field.ref(cfg);
  }
  for_each_real([&](const RealField & field) { j[field.key] = field.ref(cfg); });
  return j;
}

GenerationConfig config_from_json(const Json & j)
{
  GenerationConfig cfg;
  for (const auto & field : kCountFields) {
    field.ref(cfg) = j.at(field.key).get<std::uint64_t>();
  }
  for_each_real([&](const RealField & field) { field.ref(cfg) = j.at(field.key).get<double>(); });
  return cfg;
}

//---------------------------------------------------------------------------
// JSON helpers

Json vehicle_to_json(const VehicleParams & p)
{
  return Json{{"x0", p.x0}, {"v0", p.v0}, {"a0", p.a0}, {"tR", p.tR}};
}

VehicleParams vehicle_from_json(const Json & j)
{
  return VehicleParams{
    j.at("x0").get<double>(), j.at("v0").get<double>(), j.at("a0").get<double>(),
    j.at("tR").get<double>()};
}

Json optional_to_json(const std::optional<double> & value)
{
  return value ? Json(*value) : Json(nullptr);
}

std::optional<double> optional_from_json(const Json & j)
{
  if (j.is_null()) {
    return std::nullopt;
  }
  return j.get<double>();
}

void check_series_shape(const ScenarioSeries & s)
{
  const std::size_t n = s.size();
  if (
    s.x_leader.size() != n || s.v_leader.size() != n || s.x_follower.size() != n ||
    s.v_follower.size() != n) {
    throw std::invalid_argument(
      "dataset: scenario " + std::to_string(s.index) + " has channels of differing length");
  }
}

std::ifstream open_input(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  return in;
}

std::ofstream open_output(const std::filesystem::path & path)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

void finish_output(std::ofstream & out, const std::filesystem::path & path)
{
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}
}  // namespace

void validate(const Dataset & dataset)
{
  for (const auto & s : dataset.series) {
    check_series_shape(s);
  }
  if (!dataset.annotations.empty()) {
    if (dataset.annotations.size() != dataset.series.size()) {
      throw std::invalid_argument("dataset: annotations do not align 1:1 with series");
    }
    for (std::size_t i = 0; i < dataset.series.size(); ++i) {
      if (dataset.annotations[i].dss.values.size() != dataset.series[i].size()) {
        throw std::invalid_argument(
          "dataset: DSS length differs from series length for scenario " +
          std::to_string(dataset.series[i].index));
      }
    }
  }
}

//---------------------------------------------------------------------------
// Config

GenerationConfig parse_config(std::istream & in)
{
  GenerationConfig cfg;
  std::map<std::string, std::size_t> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("missing key before '='", line_no);
    }
    if (const auto it = seen.find(key); it != seen.end()) {
      throw ParseError(
        "duplicate key '" + key + "' (first set on line " + std::to_string(it->second) + ")",
        line_no);
    }
    seen.emplace(key, line_no);

    bool known = false;
    for (const auto & field : kCountFields) {
      if (key == field.key) {
        const auto parsed = parse_u64(value);
        if (!parsed) {
          throw ParseError(
            "key '" + key + "' expects a non-negative integer, got '" + std::string(value) + "'",
            line_no);
        }
        field.ref(cfg) = *parsed;
        known = true;
      }
    }
    for_each_real([&](const RealField & field) {
      if (key == field.key) {
        const auto parsed = parse_double(value);
        if (!parsed) {
          throw ParseError(
            "key '" + key + "' expects a finite number, got '" + std::string(value) + "'",
            line_no);
        }
        field.ref(cfg) = *parsed;
        known = true;
      }
    });
    if (!known) {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  validate(cfg);
  return cfg;
}

void format_config(std::ostream & out, const GenerationConfig & cfg_in)
{
  GenerationConfig cfg = cfg_in;
  out << "# follow-up scenario generation config\n";
  for (const auto & field : kCountFields) {
    out << field.key << " = " << field.ref(cfg) << '\n';
  }
  for_each_real([&](const RealField & field) {
    out << field.key << " = " << format_double(field.ref(cfg), 17) << '\n';
  });
}

GenerationConfig read_config(const std::filesystem::path & path)
{
  auto in = open_input(path);
  return parse_config(in);
}

void write_config(const std::filesystem::path & path, const GenerationConfig & cfg)
{
  auto out = open_output(path);
  format_config(out, cfg);
  finish_output(out, path);
}

//---------------------------------------------------------------------------
// CSV

void write_csv(std::ostream & out, const Dataset & dataset)
{
  validate(dataset);
  const bool evaluated = dataset.is_evaluated();
  out << kCsvHeader << '\n';
  for (std::size_t i = 0; i < dataset.series.size(); ++i) {
    const auto & s = dataset.series[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      out << s.index << ',' << format_double(s.times[j], 9) << ','
          << format_double(s.x_leader[j], 9) << ',' << format_double(s.v_leader[j], 9) << ','
          << format_double(s.x_follower[j], 9) << ',' << format_double(s.v_follower[j], 9)
          << ',';
      if (evaluated) {
        const auto & dss = dataset.annotations[i].dss.values[j];
        out << (dss ? format_double(*dss, 9) : std::string("NA")) << ','
            << ((dss && *dss < 0.0) ? '1' : '0');
      } else {
        out << ',';
      }
      out << '\n';
    }
  }
}

Dataset read_csv(std::istream & in)
{
  std::string raw;
  if (!std::getline(in, raw)) {
    throw ParseError("empty CSV (missing header)", 1);
  }
  if (trim(raw) != kCsvHeader) {
    throw ParseError(std::string("unexpected CSV header, expected '") + kCsvHeader + "'", 1);
  }

  Dataset dataset;
  std::vector<std::vector<std::optional<double>>> dss_columns;
  std::vector<std::vector<bool>> critical_columns;
  std::optional<bool> evaluated;
  std::size_t row = 1;
  while (std::getline(in, raw)) {
    ++row;
    const std::string_view line = trim(raw);
    if (line.empty()) {
      continue;
    }
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    if (cells.size() != 8) {
      throw ParseError("expected 8 columns, got " + std::to_string(cells.size()), row);
    }
    const auto index = parse_u64(cells[0]);
    if (!index) {
      throw ParseError("bad scenario index '" + std::string(cells[0]) + "'", row);
    }
    std::array<double, 5> values{};
    static constexpr std::array<const char *, 5> names{"t", "x_l", "v_l", "x_f", "v_f"};
    for (std::size_t k = 0; k < 5; ++k) {
      const auto parsed = parse_double(cells[k + 1]);
      if (!parsed) {
        throw ParseError(
          std::string("bad value in column '") + names[k] + "': '" + std::string(cells[k + 1]) +
            "'",
          row);
      }
      values[k] = *parsed;
    }

    const std::string_view dss_cell = trim(cells[6]);
    const std::string_view crit_cell = trim(cells[7]);
    const bool row_evaluated = !(dss_cell.empty() && crit_cell.empty());
    if (evaluated && *evaluated != row_evaluated) {
      throw ParseError("mix of evaluated and unevaluated rows", row);
    }
    evaluated = row_evaluated;

    if (dataset.series.empty() || dataset.series.back().index != *index) {
      for (const auto & s : dataset.series) {
        if (s.index == *index) {
          throw ParseError(
            "rows of scenario " + std::to_string(*index) + " are not contiguous", row);
        }
      }
      ScenarioSeries s;
      s.index = *index;
      dataset.series.push_back(std::move(s));
      dss_columns.emplace_back();
      critical_columns.emplace_back();
    }
    auto & s = dataset.series.back();
    s.times.values.push_back(values[0]);
    s.x_leader.push_back(values[1]);
    s.v_leader.push_back(values[2]);
    s.x_follower.push_back(values[3]);
    s.v_follower.push_back(values[4]);
    if (values[2] < 0.0 || values[4] < 0.0) {
      s.diagnostics.negative_velocity = true;
    }
    if (row_evaluated) {
      if (dss_cell == "NA") {
        dss_columns.back().push_back(std::nullopt);
      } else {
        const auto dss = parse_double(dss_cell);
        if (!dss) {
          throw ParseError("bad dss value '" + std::string(dss_cell) + "'", row);
        }
        dss_columns.back().push_back(*dss);
      }
      if (crit_cell != "0" && crit_cell != "1") {
        throw ParseError("critical must be 0 or 1, got '" + std::string(crit_cell) + "'", row);
      }
      critical_columns.back().push_back(crit_cell == "1");
    }
  }

  for (const auto & s : dataset.series) {
    if (s.times != dataset.series.front().times) {
      throw std::invalid_argument(
        "CSV: scenario " + std::to_string(s.index) +
        " does not share the time vector of the first scenario");
    }
    if (s.size() < 2) {
      throw std::invalid_argument(
        "CSV: scenario " + std::to_string(s.index) + " has fewer than 2 time steps");
    }
  }

  if (evaluated.value_or(false)) {
    for (std::size_t i = 0; i < dataset.series.size(); ++i) {
      SafetyAnnotation annotation;
      annotation.dss.values = std::move(dss_columns[i]);
      const auto & times = dataset.series[i].times.values;
      for (std::size_t j = 0; j < times.size(); ++j) {
        if (critical_columns[i][j]) {
          annotation.report.critical_times.push_back(times[j]);
        }
      }
      if (!annotation.report.critical_times.empty()) {
        annotation.report.first_critical = annotation.report.critical_times.front();
        annotation.report.is_critical = true;
      }
      dataset.annotations.push_back(std::move(annotation));
    }
  }
  return dataset;
}

//---------------------------------------------------------------------------
// JSON

void write_json(std::ostream & out, const Dataset & dataset)
{
  validate(dataset);
  Json root = Json::object();
  root["format"] = "follow_up_dataset";
  root["format_version"] = 1;
  Json provenance = Json::object();
  provenance["tool_version"] = dataset.provenance.tool_version;
  provenance["config"] =
    dataset.provenance.config ? config_to_json(*dataset.provenance.config) : Json(nullptr);
  root["provenance"] = std::move(provenance);

  Json series = Json::array();
  for (const auto & s : dataset.series) {
    Json js = Json::object();
    js["index"] = s.index;
    if (s.params) {
      js["params"] = Json{
        {"leader", vehicle_to_json(s.params->leader)},
        {"follower", vehicle_to_json(s.params->follower)}};
    } else {
      js["params"] = nullptr;
    }
    js["t"] = s.times.values;
    js["x_l"] = s.x_leader;
    js["v_l"] = s.v_leader;
    js["x_f"] = s.x_follower;
    js["v_f"] = s.v_follower;
    js["diagnostics"] = Json{
      {"negative_velocity", s.diagnostics.negative_velocity},
      {"initial_overlap", s.diagnostics.initial_overlap}};
    series.push_back(std::move(js));
  }
  root["series"] = std::move(series);

  Json annotations = Json::array();
  for (const auto & a : dataset.annotations) {
    Json ja = Json::object();
    ja["a_min"] = a.dss.a_min;
    Json values = Json::array();
    for (const auto & v : a.dss.values) {
      values.push_back(optional_to_json(v));
    }
    ja["dss"] = std::move(values);
    ja["critical_times"] = a.report.critical_times;
    ja["first_critical"] = optional_to_json(a.report.first_critical);
    ja["is_critical"] = a.report.is_critical;
    annotations.push_back(std::move(ja));
  }
  root["annotations"] = std::move(annotations);

  out << root.dump(1) << '\n';
}

Dataset read_json(std::istream & in)
{
  Json root;
  try {
    root = Json::parse(in);
  } catch (const nlohmann::json::parse_error & e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  try {
    if (root.at("format") != "follow_up_dataset") {
      throw ParseError("not a follow_up_dataset record", 0);
    }
    Dataset dataset;
    const Json & provenance = root.at("provenance");
    dataset.provenance.tool_version = provenance.at("tool_version").get<std::string>();
    if (!provenance.at("config").is_null()) {
      dataset.provenance.config = config_from_json(provenance.at("config"));
    }
    for (const Json & js : root.at("series")) {
      ScenarioSeries s;
      s.index = js.at("index").get<std::uint64_t>();
      if (!js.at("params").is_null()) {
        ScenarioParams p;
        p.index = s.index;
        p.leader = vehicle_from_json(js.at("params").at("leader"));
        p.follower = vehicle_from_json(js.at("params").at("follower"));
        s.params = p;
      }
      s.times.values = js.at("t").get<std::vector<double>>();
      s.x_leader = js.at("x_l").get<std::vector<double>>();
      s.v_leader = js.at("v_l").get<std::vector<double>>();
      s.x_follower = js.at("x_f").get<std::vector<double>>();
      s.v_follower = js.at("v_f").get<std::vector<double>>();
      s.diagnostics.negative_velocity = js.at("diagnostics").at("negative_velocity").get<bool>();
      s.diagnostics.initial_overlap = js.at("diagnostics").at("initial_overlap").get<bool>();
      dataset.series.push_back(std::move(s));
    }
    for (const Json & ja : root.at("annotations")) {
      SafetyAnnotation a;
      a.dss.a_min = ja.at("a_min").get<double>();
      for (const Json & v : ja.at("dss")) {
        a.dss.values.push_back(optional_from_json(v));
      }
      a.report.critical_times = ja.at("critical_times").get<std::vector<double>>();
      a.report.first_critical = optional_from_json(ja.at("first_critical"));
      a.report.is_critical = ja.at("is_critical").get<bool>();
      dataset.annotations.push_back(std::move(a));
    }
    validate(dataset);
    return dataset;
  } catch (const nlohmann::json::exception & e) {
    throw ParseError(std::string("malformed dataset record: ") + e.what(), 0);
  }
}

//---------------------------------------------------------------------------
// Files

DatasetFormat format_for(const std::filesystem::path & path)
{
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (ext == ".csv") {
    return DatasetFormat::Csv;
  }
  if (ext == ".json") {
    return DatasetFormat::Json;
  }
  throw std::invalid_argument(
    "unsupported dataset extension '" + ext + "' (use .csv or .json)");
}

void write_dataset(const std::filesystem::path & path, const Dataset & dataset)
{
  const DatasetFormat format = format_for(path);
  auto out = open_output(path);
  if (format == DatasetFormat::Csv) {
    write_csv(out, dataset);
  } else {
    write_json(out, dataset);
  }
  finish_output(out, path);
}

Dataset read_dataset(const std::filesystem::path & path)
{
  const DatasetFormat format = format_for(path);
  auto in = open_input(path);
  return format == DatasetFormat::Csv ? read_csv(in) : read_json(in);
}

}  // namespace follow_up
