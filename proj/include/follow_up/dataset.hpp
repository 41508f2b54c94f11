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

#ifndef FOLLOW_UP__DATASET_HPP_
#define FOLLOW_UP__DATASET_HPP_

#include "follow_up/safety.hpp"
#include "follow_up/scenario.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace follow_up
{

/// Where a dataset came from. Deliberately free of timestamps.
struct Provenance
{
  std::optional<GenerationConfig> config;
  std::string tool_version{FOLLOW_UP_VERSION};

  bool operator==(const Provenance &) const = default;
};

/// Ordered scenario series with optional 1:1 safety annotations.
struct Dataset
{
  Provenance provenance;
  std::vector<ScenarioSeries> series;
  std::vector<SafetyAnnotation> annotations;  ///< empty, or one per series

  bool is_evaluated() const { return !series.empty() && annotations.size() == series.size(); }
  bool operator==(const Dataset &) const = default;
};

/// Malformed file contents; carries the 1-based line (or row) number when known.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string & message, std::size_t line)
  : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
    line_(line)
  {
  }

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Throws if annotations are present but not aligned with the series.
void validate(const Dataset & dataset);

// Config: one `key = value` per line, `#` starts a comment, missing keys keep defaults.
GenerationConfig parse_config(std::istream & in);
void format_config(std::ostream & out, const GenerationConfig & cfg);
GenerationConfig read_config(const std::filesystem::path & path);
void write_config(const std::filesystem::path & path, const GenerationConfig & cfg);

// Long-form CSV: scenario,t,x_l,v_l,x_f,v_f,dss,critical with 9 significant digits.
inline constexpr const char * kCsvHeader = "scenario,t,x_l,v_l,x_f,v_f,dss,critical";
void write_csv(std::ostream & out, const Dataset & dataset);
Dataset read_csv(std::istream & in);

// Structured record (JSON): provenance, sampled parameters, series, annotations.
void write_json(std::ostream & out, const Dataset & dataset);
Dataset read_json(std::istream & in);

enum class DatasetFormat { Csv, Json };

/// `.csv` selects CSV, `.json` the structured format; anything else throws.
DatasetFormat format_for(const std::filesystem::path & path);

void write_dataset(const std::filesystem::path & path, const Dataset & dataset);
Dataset read_dataset(const std::filesystem::path & path);

}  // namespace follow_up

#endif  // FOLLOW_UP__DATASET_HPP_
