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

#ifndef FRAMING_TIMESERIES_H_
#define FRAMING_TIMESERIES_H_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "framing/date.h"
#include "framing/frames.h"
#include "framing/records.h"

namespace framing {

// Daily series with unit stride and no gaps.
struct FrameSeries {
  std::string id;
  std::vector<Date> dates;
  std::vector<double> values;
  std::set<std::string> excluded_events;
  std::vector<Date> empty_days;  // days with no contributing article

  std::size_t size() const { return values.size(); }
};

// Per-day share of articles containing `frame`, from the first to the last
// publish date in the corpus, skipping articles of excluded events. Empty
// days get 0 and are listed in empty_days.
FrameSeries BuildSeries(const std::vector<FrameAnnotation> &annotations,
                        Frame frame,
                        const std::set<std::string> &excluded_events = {});

// Builds a series from (date, value) points; missing days are filled with
// 0 and recorded in empty_days. Dates must be unique.
FrameSeries SeriesFromPoints(std::string id,
                             std::vector<std::pair<Date, double>> points);

enum class WindowAlignment { kCentered, kTrailing };

// Rolling mean with windows shrinking at the edges. Centered windows must
// be odd. Throws UndefinedStatistic if the window exceeds the series.
FrameSeries RollingSmooth(const FrameSeries &series, int window = 15,
                          WindowAlignment alignment = WindowAlignment::kCentered);

// Restricts two series to their common dates.
std::pair<FrameSeries, FrameSeries> Align(const FrameSeries &a,
                                          const FrameSeries &b);

// Pearson r over the common dates.
double SeriesPearson(const FrameSeries &a, const FrameSeries &b);

struct InterventionFit {
  double beta0 = 0;  // coefficient on X[t-1]
  double beta1 = 0;  // pulse coefficient
  double c = 0;
  double se_beta0 = 0;
  double se_beta1 = 0;
  double se_c = 0;
  double p_beta1 = 1;
  std::vector<Date> pulse_dates;  // pulses that fall inside the fit
};

// OLS of X[t] on [X[t-1], P(t), 1] with P(t) = 1 on the given dates.
InterventionFit FitIntervention(const FrameSeries &series,
                                const std::set<Date> &pulse_dates);
// Same, with the pulse given per index.
InterventionFit FitIntervention(std::span<const double> values,
                                std::span<const int> pulse);

struct GrangerResult {
  std::string cause;
  std::string effect;
  int lag = 1;
  double f_statistic = 0;
  double p_value = 1;
  int dof_num = 0;
  int dof_den = 0;
};

// SSR F-test of whether `cause` lags improve an autoregression of `effect`
// on its own lags. If the restricted model is already exact, F = 0, p = 1.
GrangerResult Granger(std::span<const double> cause,
                      std::span<const double> effect, int lag);
GrangerResult Granger(const FrameSeries &cause, const FrameSeries &effect,
                      int lag);

FrameSeries ProtestSeries(const std::vector<ProtestCount> &counts);

std::string SeriesToCsv(const FrameSeries &series);
FrameSeries ParseSeriesCsv(std::string_view csv, std::string id);

}  // namespace framing

#endif  // FRAMING_TIMESERIES_H_
