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

// Command-line front end: generate, evaluate, validate, stats, plot.

#include "follow_up/analysis.hpp"
#include "follow_up/dataset.hpp"
#include "follow_up/safety.hpp"
#include "follow_up/scenario.hpp"
#include "follow_up/validation.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

template <typename Fn>
int guarded(Fn && fn)
{
  try {
    return fn();
  } catch (const follow_up::IoError & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Synthetic follow-up driving scenarios with DSS safety labels"};
  app.require_subcommand(1);

  // generate
  auto * generate = app.add_subcommand("generate", "Sample and simulate a batch of scenarios");
  std::string config_path;
  std::string generate_out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> n_series;
  unsigned threads = 1;
  generate->add_option("--config", config_path, "Config file (key = value); defaults if omitted");
  generate->add_option("--out", generate_out, "Output dataset (.csv or .json)")->required();
  generate->add_option("--seed", seed, "Override the config seed");
  generate->add_option("--n-series", n_series, "Override the number of series");
  generate->add_option("--threads", threads, "Worker threads (output does not depend on it)")
    ->check(CLI::Range(1u, 1024u));

  // evaluate
  auto * evaluate = app.add_subcommand("evaluate", "Attach DSS values and criticality labels");
  std::string evaluate_in;
  std::string evaluate_out;
  std::optional<double> a_min;
  evaluate->add_option("--in", evaluate_in, "Input dataset (.json carries sampled parameters)")
    ->required();
  evaluate->add_option("--out", evaluate_out, "Output dataset (.csv or .json)")->required();
  evaluate->add_option("--a-min", a_min, "Deceleration magnitude for DSS [m/s^2] (default 8.829)");

  // validate
  auto * validate = app.add_subcommand("validate", "Recompute the reference validation scenario");

  // stats
  auto * stats = app.add_subcommand("stats", "Summary statistics of an evaluated dataset");
  std::string stats_in;
  bool stats_kv = false;
  stats->add_option("--in", stats_in, "Evaluated dataset")->required();
  stats->add_flag("--kv", stats_kv, "Print key = value lines instead of a table");

  // plot
  auto * plot = app.add_subcommand("plot", "Two-panel SVG plot of one scenario");
  std::string plot_in;
  std::string plot_out;
  std::uint64_t scenario = 0;
  plot->add_option("--in", plot_in, "Dataset")->required();
  plot->add_option("--scenario", scenario, "Position of the series in the dataset")->required();
  plot->add_option("--out", plot_out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  using namespace follow_up;

  if (*generate) {
    return guarded([&] {
      GenerationConfig cfg = config_path.empty() ? GenerationConfig{} : read_config(config_path);
      if (seed) {
        cfg.seed = *seed;
      }
      if (n_series) {
        cfg.n_series = *n_series;
      }
      follow_up::validate(cfg);
      format_for(generate_out);
      const Dataset dataset = generate_batch(cfg, threads);
      write_dataset(generate_out, dataset);
      std::cout << "wrote " << dataset.series.size() << " series to " << generate_out << '\n';
      return kExitOk;
    });
  }
  if (*evaluate) {
    return guarded([&] {
      format_for(evaluate_out);
      Dataset dataset = read_dataset(evaluate_in);
      const double aMin = a_min.value_or(
        dataset.provenance.config ? dataset.provenance.config->a_min : GenerationConfig{}.a_min);
      evaluate_batch(dataset, aMin);
      write_dataset(evaluate_out, dataset);
      std::size_t critical = 0;
      for (const auto & a : dataset.annotations) {
        critical += a.report.is_critical ? 1 : 0;
      }
      std::cout << "evaluated " << dataset.series.size() << " series (" << critical
                << " critical) -> " << evaluate_out << '\n';
      return kExitOk;
    });
  }
  if (*validate) {
    return guarded([&] {
      const ValidationResult result = run_validation();
      print_validation(std::cout, result);
      return result.passed ? kExitOk : kExitConfig;
    });
  }
  if (*stats) {
    return guarded([&] {
      const SummaryStats summary = summarize(read_dataset(stats_in));
      if (stats_kv) {
        print_summary_kv(std::cout, summary);
      } else {
        print_summary(std::cout, summary);
      }
      return kExitOk;
    });
  }
  if (*plot) {
    return guarded([&] {
      const Dataset dataset = read_dataset(plot_in);
      emit_plot(dataset, static_cast<std::size_t>(scenario), plot_out);
      std::cout << "wrote " << plot_out << '\n';
      return kExitOk;
    });
  }
  return kExitConfig;
}
