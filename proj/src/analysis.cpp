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

#include "follow_up/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace follow_up
{

DistributionSummary summarize_values(std::vector<double> values)
{
  DistributionSummary s;
  s.count = values.size();
  if (values.empty()) {
    return s;
  }
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (const double v : values) {
      ss += (v - s.mean) * (v - s.mean);
    }
    s.sd = std::sqrt(ss / static_cast<double>(s.count - 1));
  }
  return s;
}

SummaryStats summarize(const Dataset & dataset)
{
  validate(dataset);
  SummaryStats stats;
  stats.n_series = dataset.series.size();
  if (dataset.series.empty()) {
    return stats;
  }
  if (!dataset.is_evaluated()) {
    throw std::invalid_argument("summarize: dataset has no safety annotations (run evaluate first)");
  }

  const auto & times = dataset.series.front().times;
  stats.bin_width = dataset.provenance.config ? dataset.provenance.config->dt : times[1] - times[0];
  const double origin = times[0];

  std::map<std::int64_t, std::size_t> bins;
  std::vector<double> tr_leader, tr_follower, a_leader, a_follower;
  for (std::size_t i = 0; i < dataset.series.size(); ++i) {
    const auto & series = dataset.series[i];
    const auto & annotation = dataset.annotations[i];
    if (annotation.report.is_critical) {
      ++stats.n_critical;
      const double first = annotation.report.first_critical.value();
      ++bins[static_cast<std::int64_t>(std::floor((first - origin) / stats.bin_width + 0.5))];
    }
    std::optional<double> lowest;
    for (const auto & v : annotation.dss.values) {
      if (v && (!lowest || *v < *lowest)) {
        lowest = *v;
      }
    }
    stats.min_dss.push_back(lowest);
    if (series.diagnostics.negative_velocity) {
      ++stats.negative_velocity_series;
    }
    if (series.params) {
      tr_leader.push_back(series.params->leader.tR);
      tr_follower.push_back(series.params->follower.tR);
      a_leader.push_back(series.params->leader.a0);
      a_follower.push_back(series.params->follower.a0);
    }
  }
  stats.critical_fraction =
    static_cast<double>(stats.n_critical) / static_cast<double>(stats.n_series);
  for (const auto & [bin, count] : bins) {
    stats.first_critical_histogram.push_back(
      HistogramBin{origin + static_cast<double>(bin) * stats.bin_width, count});
  }

  std::vector<double> pooled = tr_leader;
  pooled.insert(pooled.end(), tr_follower.begin(), tr_follower.end());
  stats.reaction_time = summarize_values(std::move(pooled));
  stats.reaction_time_leader = summarize_values(std::move(tr_leader));
  stats.reaction_time_follower = summarize_values(std::move(tr_follower));
  stats.accel_leader = summarize_values(std::move(a_leader));
  stats.accel_follower = summarize_values(std::move(a_follower));
  return stats;
}

namespace
{
std::string fixed(double value, int decimals)
{
  std::array<char, 64> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.*f", decimals, value);
  return buffer.data();
}

std::string general(double value)
{
  std::array<char, 64> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.6g", value);
  return buffer.data();
}

std::string pad(const std::string & s, std::size_t width)
{
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

const std::array<std::pair<const char *, DistributionSummary SummaryStats::*>, 5> kDistributions{{
  {"reaction_time", &SummaryStats::reaction_time},
  {"reaction_time_leader", &SummaryStats::reaction_time_leader},
  {"reaction_time_follower", &SummaryStats::reaction_time_follower},
  {"accel_leader", &SummaryStats::accel_leader},
  {"accel_follower", &SummaryStats::accel_follower},
}};
}  // namespace

void print_summary(std::ostream & out, const SummaryStats & stats)
{
  out << stats.n_series << " series\n";
  if (stats.n_series == 0) {
    return;
  }
  out << "critical series     " << stats.n_critical << '\n';
  out << "critical fraction   " << fixed(stats.critical_fraction, 4) << '\n';
  out << "negative velocity   " << stats.negative_velocity_series << '\n';

  out << "\nfirst critical time histogram (bin width " << general(stats.bin_width) << " s)\n";
  if (stats.first_critical_histogram.empty()) {
    out << "  (no critical series)\n";
  }
  for (const auto & bin : stats.first_critical_histogram) {
    out << "  " << pad(fixed(bin.start, 3), 8) << " s  " << pad(std::to_string(bin.count), 8)
        << '\n';
  }

  out << '\n'
      << pad("quantity", 24) << pad("count", 9) << pad("mean", 12) << pad("sd", 12)
      << pad("min", 12) << pad("max", 12) << '\n';
  for (const auto & [name, member] : kDistributions) {
    const DistributionSummary & d = stats.*member;
    out << pad(name, 24) << pad(std::to_string(d.count), 9) << pad(fixed(d.mean, 5), 12)
        << pad(fixed(d.sd, 5), 12) << pad(fixed(d.min, 5), 12) << pad(fixed(d.max, 5), 12)
        << '\n';
  }

  std::size_t undefined = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto & v : stats.min_dss) {
    if (!v) {
      ++undefined;
    } else {
      lowest = std::min(lowest, *v);
    }
  }
  out << "\nseries with undefined DSS  " << undefined << '\n';
  if (undefined < stats.min_dss.size()) {
    out << "lowest DSS [m]             " << fixed(lowest, 4) << '\n';
  }
}

void print_summary_kv(std::ostream & out, const SummaryStats & stats)
{
  out << "n_series = " << stats.n_series << '\n';
  out << "n_critical = " << stats.n_critical << '\n';
  out << "critical_fraction = " << fixed(stats.critical_fraction, 4) << '\n';
  out << "negative_velocity_series = " << stats.negative_velocity_series << '\n';
  out << "bin_width = " << general(stats.bin_width) << '\n';
  for (const auto & bin : stats.first_critical_histogram) {
    out << "first_critical_bin." << fixed(bin.start, 3) << " = " << bin.count << '\n';
  }
  for (const auto & [name, member] : kDistributions) {
    const DistributionSummary & d = stats.*member;
    out << name << ".count = " << d.count << '\n';
    out << name << ".mean = " << general(d.mean) << '\n';
    out << name << ".sd = " << general(d.sd) << '\n';
    out << name << ".min = " << general(d.min) << '\n';
    out << name << ".max = " << general(d.max) << '\n';
  }
}

//---------------------------------------------------------------------------
// SVG

namespace
{
constexpr double kWidth = 900.0;
constexpr double kHeight = 720.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 810.0;
constexpr std::array<std::pair<double, double>, 2> kPanels{{{50.0, 320.0}, {410.0, 680.0}}};

struct Range
{
  double lo;
  double hi;
};

Range range_of(std::initializer_list<const std::vector<double> *> series)
{
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto * s : series) {
    for (const double v : *s) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double margin = 0.05 * (hi - lo);
  return {lo - margin, hi + margin};
}

class Panel
{
public:
  Panel(Range t, Range left, Range right, std::pair<double, double> rows)
  : t_(t), left_(left), right_(right), top_(rows.first), bottom_(rows.second)
  {
  }

  double px(double t) const { return kLeft + (t - t_.lo) / (t_.hi - t_.lo) * (kRight - kLeft); }
  double py_left(double v) const { return map(v, left_); }
  double py_right(double v) const { return map(v, right_); }
  double top() const { return top_; }
  double bottom() const { return bottom_; }
  Range left() const { return left_; }
  Range right() const { return right_; }
  Range time() const { return t_; }

private:
  double map(double v, Range r) const
  {
    return bottom_ - (v - r.lo) / (r.hi - r.lo) * (bottom_ - top_);
  }

  Range t_, left_, right_;
  double top_, bottom_;
};

std::string num(double v)
{
  return fixed(v, 2);
}

void polyline(
  std::ostream & out, const Panel & panel, const std::vector<double> & t,
  const std::vector<double> & y, bool right_axis, const char * color, const char * id,
  bool dashed)
{
  out << "<polyline class=\"series\" id=\"" << id << "\" fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"2\"" << (dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"";
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double yy = right_axis ? panel.py_right(y[j]) : panel.py_left(y[j]);
    out << (j ? " " : "") << num(panel.px(t[j])) << ',' << num(yy);
  }
  out << "\"/>\n";
}

void axes(
  std::ostream & out, const Panel & panel, const char * left_label, const char * right_label)
{
  out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(panel.top()) << "\" width=\""
      << num(kRight - kLeft) << "\" height=\"" << num(panel.bottom() - panel.top())
      << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k) {
    const double f = static_cast<double>(k) / kTicks;
    const Range tr = panel.time();
    const double t = tr.lo + f * (tr.hi - tr.lo);
    out << "<text x=\"" << num(panel.px(t)) << "\" y=\"" << num(panel.bottom() + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << general(t) << "</text>\n";
    const Range l = panel.left();
    const double lv = l.lo + f * (l.hi - l.lo);
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(panel.py_left(lv) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << general(lv) << "</text>\n";
    const Range r = panel.right();
    const double rv = r.lo + f * (r.hi - r.lo);
    out << "<text x=\"" << num(kRight + 6) << "\" y=\"" << num(panel.py_right(rv) + 4)
        << "\" text-anchor=\"start\" font-size=\"11\">" << general(rv) << "</text>\n";
  }
  const double mid = 0.5 * (panel.top() + panel.bottom());
  out << "<text x=\"20\" y=\"" << num(mid) << "\" font-size=\"12\" transform=\"rotate(-90 20 "
      << num(mid) << ")\" text-anchor=\"middle\">" << left_label << "</text>\n";
  out << "<text x=\"" << num(kWidth - 20) << "\" y=\"" << num(mid)
      << "\" font-size=\"12\" transform=\"rotate(90 " << num(kWidth - 20) << ' ' << num(mid)
      << ")\" text-anchor=\"middle\">" << right_label << "</text>\n";
  out << "<text x=\"" << num(0.5 * (kLeft + kRight)) << "\" y=\"" << num(panel.bottom() + 32)
      << "\" text-anchor=\"middle\" font-size=\"12\">t [s]</text>\n";
}

void reaction_marker(std::ostream & out, const Panel & panel, double t, const char * who)
{
  const Range tr = panel.time();
  if (t < tr.lo || t > tr.hi) {
    return;
  }
  out << "<line class=\"reaction-time\" data-vehicle=\"" << who << "\" x1=\"" << num(panel.px(t))
      << "\" y1=\"" << num(panel.top()) << "\" x2=\"" << num(panel.px(t)) << "\" y2=\""
      << num(panel.bottom()) << "\" stroke=\"#e6b800\" stroke-width=\"2\"/>\n";
}

void legend(
  std::ostream & out, double y, std::initializer_list<std::pair<const char *, const char *>> items)
{
  double x = kLeft + 10.0;
  for (const auto & [color, label] : items) {
    out << "<rect x=\"" << num(x) << "\" y=\"" << num(y - 9) << "\" width=\"12\" height=\"4\" fill=\""
        << color << "\"/>\n";
    out << "<text x=\"" << num(x + 16) << "\" y=\"" << num(y - 4) << "\" font-size=\"11\">"
        << label << "</text>\n";
    x += 150.0;
  }
}
}  // namespace

std::string render_plot_svg(const Dataset & dataset, std::size_t position)
{
  validate(dataset);
  if (position >= dataset.series.size()) {
    throw std::out_of_range(
      "plot: scenario position " + std::to_string(position) + " out of range (dataset has " +
      std::to_string(dataset.series.size()) + " series)");
  }
  const ScenarioSeries & s = dataset.series[position];
  const double vehicle_length =
    dataset.provenance.config ? dataset.provenance.config->vehicle_length : GapParams{}.lV;
  const GapParams gap{vehicle_length};

  const std::vector<double> & t = s.times.values;
  std::vector<double> gap_series(t.size());
  std::vector<double> rel_velocity(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    gap_series[j] = effective_distance(s.x_leader[j], s.x_follower[j], gap);
    rel_velocity[j] = s.v_follower[j] - s.v_leader[j];
  }

  const Range time_range{t.front(), t.back()};
  const Panel upper(
    time_range, range_of({&s.x_leader, &s.x_follower}), range_of({&s.v_leader, &s.v_follower}),
    kPanels[0]);
  const Panel lower(
    time_range, range_of({&gap_series}), range_of({&rel_velocity}), kPanels[1]);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
      << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << "Follow-up drive, scenario " << s.index << "</text>\n";

  axes(out, upper, "position [m]", "velocity [m/s]");
  axes(out, lower, "effective distance [m]", "relative velocity vF - vL [m/s]");

  const Range gap_range = lower.left();
  if (gap_range.lo < 0.0 && gap_range.hi > 0.0) {
    out << "<line class=\"zero\" x1=\"" << num(kLeft) << "\" y1=\"" << num(lower.py_left(0.0))
        << "\" x2=\"" << num(kRight) << "\" y2=\"" << num(lower.py_left(0.0))
        << "\" stroke=\"#888888\" stroke-dasharray=\"2,3\"/>\n";
  }

  if (s.params) {
    reaction_marker(out, upper, s.params->leader.tR, "leader");
    reaction_marker(out, upper, s.params->follower.tR, "follower");
    reaction_marker(out, lower, s.params->leader.tR, "leader");
    reaction_marker(out, lower, s.params->follower.tR, "follower");
  }

  polyline(out, upper, t, s.x_leader, false, "#1f77b4", "x_leader", false);
  polyline(out, upper, t, s.x_follower, false, "#ff7f0e", "x_follower", false);
  polyline(out, upper, t, s.v_leader, true, "#1f77b4", "v_leader", true);
  polyline(out, upper, t, s.v_follower, true, "#ff7f0e", "v_follower", true);
  polyline(out, lower, t, gap_series, false, "#2ca02c", "effective_distance", false);
  polyline(out, lower, t, rel_velocity, true, "#9467bd", "relative_velocity", true);

  legend(
    out, kPanels[0].first - 4,
    {{"#1f77b4", "leader x (solid), v (dashed)"}, {"#ff7f0e", "follower x, v"},
     {"#e6b800", "reaction time"}});
  legend(
    out, kPanels[1].first - 4,
    {{"#2ca02c", "effective distance"}, {"#9467bd", "vF - vL"}, {"#d62728", "DSS < 0"}});

  if (dataset.is_evaluated()) {
    const auto & dss = dataset.annotations[position].dss.values;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (dss[j] && *dss[j] < 0.0) {
        out << "<circle class=\"critical\" cx=\"" << num(lower.px(t[j])) << "\" cy=\""
            << num(lower.py_left(gap_series[j])) << "\" r=\"5\" fill=\"#d62728\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

void emit_plot(const Dataset & dataset, std::size_t position, const std::filesystem::path & path)
{
  const std::string svg = render_plot_svg(dataset, position);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << svg;
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

}  // namespace follow_up
