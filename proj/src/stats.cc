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

#include "framing/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "framing/errors.h"

namespace framing {

namespace {

// Sum of squares below this share of the data's magnitude is treated as
// zero variance.
bool NegligibleSpread(double sum_squares, std::size_t n, double mean) {
  return sum_squares <= 1e-24 * static_cast<double>(n) * std::max(1.0, mean * mean);
}

double SumSquares(std::span<const double> x, double mean) {
  double s = 0;
  for (double v : x) s += (v - mean) * (v - mean);
  return s;
}

double ExactTwoSided(const std::vector<double> &ranks, std::size_t n1,
                     double rank_sum) {
  // Midranks are multiples of 1/2, so doubled ranks are integers and the
  // permutation distribution of the rank sum can be counted exactly.
  const std::size_t n = ranks.size();
  std::vector<int> doubled(n);
  int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    doubled[i] = static_cast<int>(std::lround(2 * ranks[i]));
    total += doubled[i];
  }
  // ways[k][s]: number of k-subsets whose doubled rank sum is s.
  std::vector<std::vector<std::uint64_t>> ways(
      n1 + 1, std::vector<std::uint64_t>(total + 1, 0));
  ways[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int r = doubled[i];
    for (std::size_t k = std::min(i + 1, n1); k >= 1; --k) {
      for (int s = total; s >= r; --s) ways[k][s] += ways[k - 1][s - r];
    }
  }
  // Doubled U centered on its mean: 2U - n1*n2 = S - n1(n1+1) - n1*n2.
  const long long shift = static_cast<long long>(n1) * (n1 + 1) +
                          static_cast<long long>(n1) * (n - n1);
  const long long observed =
      std::llabs(std::llround(2 * rank_sum) - shift);
  std::uint64_t extreme = 0, all = 0;
  for (int s = 0; s <= total; ++s) {
    const std::uint64_t w = ways[n1][s];
    if (w == 0) continue;
    all += w;
    if (std::llabs(s - shift) >= observed) extreme += w;
  }
  return static_cast<double>(extreme) / static_cast<double>(all);
}

}  // namespace

std::vector<double> MidRanks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

MannWhitneyResult MannWhitneyU(std::span<const double> a,
                               std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw UndefinedStatistic("Mann-Whitney U needs two non-empty samples");
  }
  const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  const std::vector<double> ranks = MidRanks(all);
  double rank_sum = 0;
  for (std::size_t i = 0; i < n1; ++i) rank_sum += ranks[i];

  MannWhitneyResult r;
  r.u = rank_sum - static_cast<double>(n1 * (n1 + 1)) / 2.0;
  const double mean_u = static_cast<double>(n1 * n2) / 2.0;
  if (std::all_of(all.begin(), all.end(), [&](double v) { return v == all[0]; })) {
    r.p = 1.0;
    r.exact = true;
    return r;
  }
  if (n1 <= kMannWhitneyExactLimit && n2 <= kMannWhitneyExactLimit) {
    r.p = ExactTwoSided(ranks, n1, rank_sum);
    r.exact = true;
    return r;
  }
  // Tie correction: sum over tie groups of t^3 - t.
  std::vector<double> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  double ties = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    ties += t * t * t - t;
    i = j;
  }
  const double nd = static_cast<double>(n);
  const double var = static_cast<double>(n1 * n2) / 12.0 *
                     ((nd + 1) - ties / (nd * (nd - 1)));
  if (var <= 0) {
    r.p = 1.0;
    return r;
  }
  const double z = std::max(0.0, std::abs(r.u - mean_u) - 0.5) / std::sqrt(var);
  r.p = std::min(1.0, NormalTwoSided(z));
  return r;
}

double Mean(std::span<const double> x) {
  if (x.empty()) throw UndefinedStatistic("mean of an empty sample");
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double Variance(std::span<const double> x) {
  if (x.size() < 2) throw UndefinedStatistic("variance needs two values");
  return SumSquares(x, Mean(x)) / static_cast<double>(x.size() - 1);
}

double CohensD(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw UndefinedStatistic("Cohen's d needs at least two values per sample");
  }
  const double ma = Mean(a), mb = Mean(b);
  const double ss = SumSquares(a, ma) + SumSquares(b, mb);
  const std::size_t n = a.size() + b.size();
  if (NegligibleSpread(ss, n, std::max(std::abs(ma), std::abs(mb)))) {
    throw UndefinedStatistic("Cohen's d undefined: pooled variance is zero");
  }
  const double pooled = std::sqrt(ss / static_cast<double>(n - 2));
  return (mb - ma) / pooled;
}

double PearsonR(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw UndefinedStatistic("Pearson r needs samples of equal length");
  }
  if (x.size() < 2) throw UndefinedStatistic("Pearson r needs two points");
  const double mx = Mean(x), my = Mean(y);
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (NegligibleSpread(sxx, x.size(), mx) || NegligibleSpread(syy, y.size(), my)) {
    throw UndefinedStatistic("Pearson r undefined: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double PearsonPValue(double r, std::size_t n) {
  if (n <= 2) return 1.0;
  if (std::abs(r) >= 1.0) return 0.0;
  const double dof = static_cast<double>(n - 2);
  return StudentTTwoSided(r * std::sqrt(dof / (1 - r * r)), dof);
}

LineFit FitLine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw UndefinedStatistic("line fit needs two or more paired points");
  }
  const double mx = Mean(x), my = Mean(y);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (NegligibleSpread(sxx, x.size(), mx)) {
    throw UndefinedStatistic("line fit undefined: x has zero variance");
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

OlsFit FitOls(const Eigen::MatrixXd &design, const Eigen::VectorXd &response) {
  const auto rows = design.rows(), cols = design.cols();
  if (rows != response.size()) throw SingularFit("design/response size mismatch");
  if (rows <= cols) throw SingularFit("no residual degrees of freedom");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < cols) throw SingularFit("design matrix is rank deficient");
  OlsFit fit;
  fit.coefficients = qr.solve(response);
  const Eigen::VectorXd residuals = response - design * fit.coefficients;
  fit.ssr = residuals.squaredNorm();
  fit.dof = static_cast<int>(rows - cols);
  const double sigma2 = fit.ssr / fit.dof;
  const Eigen::MatrixXd xtx_inv =
      (design.transpose() * design).inverse();
  fit.standard_errors = (sigma2 * xtx_inv.diagonal()).cwiseSqrt();
  return fit;
}

double StudentTTwoSided(double t, double dof) {
  if (!std::isfinite(t)) return 0.0;
  boost::math::students_t dist(dof);
  return std::min(1.0, 2 * boost::math::cdf(boost::math::complement(dist, std::abs(t))));
}

double FisherFUpper(double f, double dof1, double dof2) {
  if (f <= 0) return 1.0;
  if (!std::isfinite(f)) return 0.0;
  boost::math::fisher_f dist(dof1, dof2);
  return boost::math::cdf(boost::math::complement(dist, f));
}

double NormalTwoSided(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

std::string SignificanceStars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

}  // namespace framing
