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

#ifndef FRAMING_STATS_H_
#define FRAMING_STATS_H_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace framing {

// Average ranks (1-based), ties sharing the mean of their positions.
std::vector<double> MidRanks(std::span<const double> values);

struct MannWhitneyResult {
  double u = 0;  // U statistic of the first sample
  double p = 1;  // two-sided
  bool exact = false;
};

// Mann-Whitney U test with midranks for ties. When both samples have at
// most kMannWhitneyExactLimit values the p-value comes from the exact
// permutation distribution of the (midrank) rank sum, which is valid with
// ties; otherwise a normal approximation with tie-corrected variance and
// continuity correction is used. The two-sided p-value is
// P(|U - E[U]| >= |u - E[U]|). If every value is identical p = 1.
inline constexpr std::size_t kMannWhitneyExactLimit = 20;
MannWhitneyResult MannWhitneyU(std::span<const double> a,
                               std::span<const double> b);

// (mean(b) - mean(a)) / pooled sd, with n-1 weighted pooling. Throws
// UndefinedStatistic when a sample has fewer than two values or the pooled
// variance is zero.
double CohensD(std::span<const double> a, std::span<const double> b);

double Mean(std::span<const double> x);
// Sample variance (n-1 denominator).
double Variance(std::span<const double> x);

// Sample Pearson correlation. Throws UndefinedStatistic on zero variance
// or fewer than two points.
double PearsonR(std::span<const double> x, std::span<const double> y);
// Two-sided p-value of a Pearson r from n points (t test, n-2 dof).
double PearsonPValue(double r, std::size_t n);

struct LineFit {
  double slope = 0;
  double intercept = 0;
};
// Ordinary least squares y = slope * x + intercept.
LineFit FitLine(std::span<const double> x, std::span<const double> y);

struct OlsFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  double ssr = 0;
  int dof = 0;  // residual degrees of freedom
};
// Multiple regression by QR. Throws SingularFit when the design is rank
// deficient or there are no residual degrees of freedom.
OlsFit FitOls(const Eigen::MatrixXd &design, const Eigen::VectorXd &response);

double StudentTTwoSided(double t, double dof);
double FisherFUpper(double f, double dof1, double dof2);
double NormalTwoSided(double z);

// "***" for p < 0.001, "**" for p < 0.01, "*" for p < 0.05, else "".
std::string SignificanceStars(double p);

}  // namespace framing

#endif  // FRAMING_STATS_H_
