// Copyright 2026 The newsframes Authors
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

#include "newsframes/stats.h"

#include <cmath>
#include <limits>

namespace newsframes {

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("incomplete beta requires a, b > 0");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("incomplete beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("t distribution requires dof > 0");
  if (std::isinf(t)) return 0.0;
  const double x = dof / (dof + t * t);
  return regularized_incomplete_beta(dof / 2.0, 0.5, x);
}

double student_t_cdf(double t, double dof) {
  const double p = student_t_two_sided_p(t, dof);
  return t >= 0.0 ? 1.0 - p / 2.0 : p / 2.0;
}

OlsFit ols_fit(const std::vector<std::vector<double>>& X,
               const std::vector<double>& y, WarningLog* warnings) {
  const std::size_t n = X.size();
  if (n == 0 || n != y.size())
    throw std::invalid_argument("design matrix and response sizes disagree");
  const std::size_t k = X[0].size();
  if (k == 0) throw std::invalid_argument("design matrix has no columns");
  for (const auto& row : X)
    if (row.size() != k)
      throw std::invalid_argument("design matrix rows have uneven widths");
  if (n <= k)
    throw std::invalid_argument("need more observations than parameters");

  // Normal equations G = X'X, r = X'y.
  std::vector<double> gram(k * k, 0.0);
  std::vector<double> rhs(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      rhs[p] += X[i][p] * y[i];
      for (std::size_t q = p; q < k; ++q) gram[p * k + q] += X[i][p] * X[i][q];
    }
  }
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < p; ++q) gram[p * k + q] = gram[q * k + p];

  // Cholesky factorization G = L L'.
  std::vector<double> chol(gram);
  double max_diag = 0.0;
  for (std::size_t p = 0; p < k; ++p)
    max_diag = std::max(max_diag, std::fabs(gram[p * k + p]));
  const double pivot_tol = std::max(max_diag, 1.0) * 1e-12;
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p; q < k; ++q) {
      double sum = chol[q * k + p];
      for (std::size_t r = 0; r < p; ++r)
        sum -= chol[p * k + r] * chol[q * k + r];
      if (p == q) {
        if (sum <= pivot_tol)
          throw SingularMatrixError("singular design matrix");
        chol[p * k + p] = std::sqrt(sum);
      } else {
        chol[q * k + p] = sum / chol[p * k + p];
      }
    }
  }

  const auto solve = [&](const std::vector<double>& b) {
    std::vector<double> z(k);
    for (std::size_t p = 0; p < k; ++p) {
      double sum = b[p];
      for (std::size_t r = 0; r < p; ++r) sum -= chol[p * k + r] * z[r];
      z[p] = sum / chol[p * k + p];
    }
    std::vector<double> x(k);
    for (std::size_t p = k; p-- > 0;) {
      double sum = z[p];
      for (std::size_t r = p + 1; r < k; ++r) sum -= chol[r * k + p] * x[r];
      x[p] = sum / chol[p * k + p];
    }
    return x;
  };

  OlsFit fit;
  fit.coefficients = solve(rhs);
  fit.n_obs = static_cast<int>(n);
  fit.dof = static_cast<int>(n - k);

  double rss = 0.0;
  double tss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double fitted = 0.0;
    for (std::size_t p = 0; p < k; ++p) fitted += X[i][p] * fit.coefficients[p];
    const double resid = y[i] - fitted;
    rss += resid * resid;
    tss += y[i] * y[i];
  }
  fit.residual_variance = rss / fit.dof;

  // Diagonal of (X'X)^-1 via one solve per unit vector.
  std::vector<double> inv_diag(k);
  std::vector<double> unit(k, 0.0);
  for (std::size_t p = 0; p < k; ++p) {
    unit[p] = 1.0;
    inv_diag[p] = solve(unit)[p];
    unit[p] = 0.0;
  }

  const bool degenerate = rss <= 1e-14 * std::max(1.0, tss);
  if (degenerate)
    warn(warnings, "degenerate fit: residual variance is (numerically) zero");

  fit.std_errors.resize(k);
  fit.t_stats.resize(k);
  fit.p_values.resize(k);
  for (std::size_t p = 0; p < k; ++p) {
    if (degenerate) {
      fit.std_errors[p] = 0.0;
      fit.t_stats[p] = fit.coefficients[p] == 0.0
                           ? 0.0
                           : std::copysign(
                                 std::numeric_limits<double>::infinity(),
                                 fit.coefficients[p]);
      fit.p_values[p] = 0.0;
      continue;
    }
    fit.std_errors[p] = std::sqrt(fit.residual_variance * inv_diag[p]);
    fit.t_stats[p] = fit.coefficients[p] / fit.std_errors[p];
    fit.p_values[p] = student_t_two_sided_p(fit.t_stats[p], fit.dof);
  }
  return fit;
}

}  // namespace newsframes
