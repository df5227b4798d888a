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

#pragma once

#include <stdexcept>
#include <vector>

#include "newsframes/common.h"

namespace newsframes {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Regularized incomplete beta I_x(a, b), evaluated with the standard
// continued fraction (modified Lentz). a, b > 0; x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// P[T <= t] for Student's t with `dof` degrees of freedom (dof > 0).
double student_t_cdf(double t, double dof);

// Two-sided p-value: P[|T| >= |t|] = I_{dof/(dof+t^2)}(dof/2, 1/2).
double student_t_two_sided_p(double t, double dof);

// Ordinary least squares of y on the rows of X (no implicit intercept; add a
// column of ones to include one). Standard errors come from the unbiased
// residual variance and the inverse normal-equations matrix; p-values are
// two-sided Student-t. Throws SingularMatrixError when X'X is singular.
// A (numerically) zero residual variance yields p-values of 0 and a
// degenerate-fit warning.
struct OlsFit {
  std::vector<double> coefficients;
  std::vector<double> std_errors;
  std::vector<double> t_stats;
  std::vector<double> p_values;
  double residual_variance = 0.0;  // unbiased s^2
  int n_obs = 0;
  int dof = 0;  // n_obs - #parameters
};

OlsFit ols_fit(const std::vector<std::vector<double>>& X,
               const std::vector<double>& y, WarningLog* warnings = nullptr);

}  // namespace newsframes
