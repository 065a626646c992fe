// Copyright 2026 The Framing Authors.
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

#include "framing/timeseries.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "framing/errors.h"
#include "framing/stats.h"
#include "framing/text_util.h"

namespace framing {

namespace {

// Fills the unit-stride date range [first, last] from sparse points.
FrameSeries Densify(std::string id, const std::map<Date, double> &points) {
  FrameSeries s;
  s.id = std::move(id);
  if (points.empty()) return s;
  const Date first = points.begin()->first;
  const int span = points.rbegin()->first.DaysSince(first);
  for (int d = 0; d <= span; ++d) {
    const Date day = first.AddDays(d);
    s.dates.push_back(day);
    auto it = points.find(day);
    if (it == points.end()) {
      s.values.push_back(0.0);
      s.empty_days.push_back(day);
    } else {
      s.values.push_back(it->second);
    }
  }
  return s;
}

FrameSeries WithValues(const FrameSeries &like, std::vector<double> values) {
  FrameSeries out = like;
  out.values = std::move(values);
  return out;
}

}  // namespace

FrameSeries BuildSeries(const std::vector<FrameAnnotation> &annotations,
                        Frame frame,
                        const std::set<std::string> &excluded_events) {
  if (annotations.empty()) throw ValidationError("cannot build a series from an empty corpus");
  std::map<Date, std::pair<int, int>> days;  // date -> (articles, with frame)
  Date first = annotations.front().publish_date;
  Date last = first;
  for (const auto &a : annotations) {
    first = std::min(first, a.publish_date);
    last = std::max(last, a.publish_date);
    if (excluded_events.count(a.event_id)) continue;
    auto &day = days[a.publish_date];
    ++day.first;
    if (a.has(frame)) ++day.second;
  }
  FrameSeries s;
  s.id = std::string(FrameName(frame));
  s.excluded_events = excluded_events;
  for (Date d = first; d <= last; d = d.AddDays(1)) {
    s.dates.push_back(d);
    auto it = days.find(d);
    if (it == days.end()) {
      s.values.push_back(0.0);
      s.empty_days.push_back(d);
    } else {
      s.values.push_back(static_cast<double>(it->second.second) / it->second.first);
    }
  }
  return s;
}

FrameSeries SeriesFromPoints(std::string id,
                             std::vector<std::pair<Date, double>> points) {
  std::map<Date, double> byday;
  for (const auto &[d, v] : points) {
    if (!byday.emplace(d, v).second) {
      throw ConflictError("duplicate series date " + d.ToString());
    }
  }
  return Densify(std::move(id), byday);
}

FrameSeries RollingSmooth(const FrameSeries &series, int window,
                          WindowAlignment alignment) {
  const int n = static_cast<int>(series.size());
  if (window < 1) throw ValidationError("smoothing window must be positive");
  if (alignment == WindowAlignment::kCentered && window % 2 == 0) {
    throw ValidationError("centered smoothing window must be odd");
  }
  if (window > n) {
    throw UndefinedStatistic("smoothing window " + std::to_string(window) +
                             " exceeds series length " + std::to_string(n));
  }
  std::vector<double> prefix(n + 1, 0.0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + series.values[i];
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    int lo, hi;  // inclusive
    if (alignment == WindowAlignment::kCentered) {
      lo = std::max(0, i - window / 2);
      hi = std::min(n - 1, i + window / 2);
    } else {
      lo = std::max(0, i - window + 1);
      hi = i;
    }
    out[i] = (prefix[hi + 1] - prefix[lo]) / (hi - lo + 1);
  }
  return WithValues(series, std::move(out));
}

std::pair<FrameSeries, FrameSeries> Align(const FrameSeries &a,
                                          const FrameSeries &b) {
  FrameSeries ra = a, rb = b;
  ra.dates.clear();
  ra.values.clear();
  rb.dates.clear();
  rb.values.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.dates[i] < b.dates[j]) {
      ++i;
    } else if (b.dates[j] < a.dates[i]) {
      ++j;
    } else {
      ra.dates.push_back(a.dates[i]);
      ra.values.push_back(a.values[i]);
      rb.dates.push_back(b.dates[j]);
      rb.values.push_back(b.values[j]);
      ++i;
      ++j;
    }
  }
  if (ra.values.empty()) {
    throw UndefinedStatistic("series '" + a.id + "' and '" + b.id + "' share no dates");
  }
  return {ra, rb};
}

double SeriesPearson(const FrameSeries &a, const FrameSeries &b) {
  const auto [ra, rb] = Align(a, b);
  return PearsonR(ra.values, rb.values);
}

InterventionFit FitIntervention(const FrameSeries &series,
                                const std::set<Date> &pulse_dates) {
  std::vector<int> pulse(series.size(), 0);
  InterventionFit skeleton;
  for (std::size_t t = 1; t < series.size(); ++t) {
    if (pulse_dates.count(series.dates[t])) {
      pulse[t] = 1;
      skeleton.pulse_dates.push_back(series.dates[t]);
    }
  }
  InterventionFit fit = FitIntervention(series.values, pulse);
  fit.pulse_dates = std::move(skeleton.pulse_dates);
  return fit;
}

InterventionFit FitIntervention(std::span<const double> values,
                                std::span<const int> pulse) {
  const std::size_t n = values.size();
  if (n < 10) throw ValidationError("intervention fit needs at least 10 points");
  if (pulse.size() != n) throw ValidationError("pulse and series lengths differ");
  if (std::none_of(pulse.begin() + 1, pulse.end(), [](int p) { return p != 0; })) {
    throw ValidationError("no pulse falls inside the fitted range");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd x(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    x(r, 0) = values[r];
    x(r, 1) = pulse[r + 1];
    x(r, 2) = 1.0;
    y(r) = values[r + 1];
  }
  const OlsFit ols = FitOls(x, y);
  InterventionFit fit;
  fit.beta0 = ols.coefficients(0);
  fit.beta1 = ols.coefficients(1);
  fit.c = ols.coefficients(2);
  fit.se_beta0 = ols.standard_errors(0);
  fit.se_beta1 = ols.standard_errors(1);
  fit.se_c = ols.standard_errors(2);
  fit.p_beta1 = fit.se_beta1 > 0
                    ? StudentTTwoSided(fit.beta1 / fit.se_beta1, ols.dof)
                    : (fit.beta1 == 0 ? 1.0 : 0.0);
  return fit;
}

GrangerResult Granger(std::span<const double> cause,
                      std::span<const double> effect, int lag) {
  if (lag < 1) throw ValidationError("granger lag must be at least 1");
  if (cause.size() != effect.size()) {
    throw ValidationError("granger series must be aligned");
  }
  const int n = static_cast<int>(effect.size());
  if (n <= 4 * lag + 4) {
    throw ValidationError("granger needs more than " + std::to_string(4 * lag + 4) +
                          " points at lag " + std::to_string(lag));
  }
  const int m = n - lag;
  Eigen::MatrixXd full(m, 2 * lag + 1);
  Eigen::VectorXd y(m);
  double y2 = 0;
  for (int r = 0; r < m; ++r) {
    const int t = r + lag;
    y(r) = effect[t];
    y2 += effect[t] * effect[t];
    full(r, 0) = 1.0;
    for (int k = 1; k <= lag; ++k) {
      full(r, k) = effect[t - k];
      full(r, lag + k) = cause[t - k];
    }
  }
  GrangerResult g;
  g.lag = lag;
  g.dof_num = lag;
  g.dof_den = m - 2 * lag - 1;
  const OlsFit restricted = FitOls(full.leftCols(lag + 1), y);
  if (restricted.ssr <= 1e-12 * std::max(y2, 1e-300)) {
    return g;
  }
  const OlsFit unrestricted = FitOls(full, y);
  const double num = std::max(restricted.ssr - unrestricted.ssr, 0.0) / lag;
  const double den = unrestricted.ssr / g.dof_den;
  if (den <= 0) {
    g.f_statistic = std::numeric_limits<double>::infinity();
    g.p_value = 0;
    return g;
  }
  g.f_statistic = num / den;
  g.p_value = FisherFUpper(g.f_statistic, g.dof_num, g.dof_den);
  return g;
}

GrangerResult Granger(const FrameSeries &cause, const FrameSeries &effect,
                      int lag) {
  const auto [c, e] = Align(cause, effect);
  if (c.dates.back().DaysSince(c.dates.front()) + 1 != static_cast<int>(c.size())) {
    throw ValidationError("granger series must be gap-free after alignment");
  }
  GrangerResult g = Granger(c.values, e.values, lag);
  g.cause = cause.id;
  g.effect = effect.id;
  return g;
}

FrameSeries ProtestSeries(const std::vector<ProtestCount> &counts) {
  std::map<Date, double> byday;
  for (const auto &c : counts) byday[c.date] += c.count;
  return Densify("protests", byday);
}

std::string SeriesToCsv(const FrameSeries &series) {
  std::ostringstream out;
  out << "date,value\n";
  char buf[32];
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.10g", series.values[i]);
    out << series.dates[i].ToString() << ',' << buf << '\n';
  }
  return out.str();
}

FrameSeries ParseSeriesCsv(std::string_view csv, std::string id) {
  std::vector<std::pair<Date, double>> points;
  std::istringstream in{std::string(csv)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = Trim(line);
    if (row.empty()) continue;
    const auto cells = Split(row, ',');
    if (cells.size() != 2) throw ParseError("expected 'date,value'", lineno);
    if (lineno == 1 && Trim(cells[0]) == "date") continue;
    const std::string cell(Trim(cells[1]));
    double v;
    try {
      std::size_t used = 0;
      v = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw ParseError("bad series value '" + cell + "'", lineno);
    }
    points.emplace_back(Date::Parse(Trim(cells[0])), v);
  }
  return SeriesFromPoints(std::move(id), std::move(points));
}

}  // namespace framing
