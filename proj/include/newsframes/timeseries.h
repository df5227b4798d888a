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

#include <string>
#include <vector>

#include "newsframes/corpus.h"
#include "newsframes/period.h"

namespace newsframes {

struct TimePoint {
  Period period;
  double value = 0.0;
};

// Gap-free, strictly increasing, finite-valued series at one granularity.
struct TimeSeries {
  Granularity granularity = Granularity::month;
  std::vector<TimePoint> points;

  void validate() const;  // throws on any invariant violation
  std::vector<double> values() const;
  std::size_t size() const { return points.size(); }
};

TimeSeries make_series(Granularity g, std::vector<TimePoint> points);

// CSV with header "period,value"; period as YYYY, YYYY-Qn or YYYY-MM.
TimeSeries read_series_csv(const std::string& path);
void write_series_csv(const TimeSeries& series, const std::string& path);

// Share of documents per slice mentioning the entity at least `min_mentions`
// times. Empty slices yield 0 with a warning.
TimeSeries article_coverage(const std::vector<TimeSlice>& slices,
                            const Corpus& corpus, const EntityAliasSet& aliases,
                            std::size_t min_mentions = 2,
                            WarningLog* warnings = nullptr);

// Entity mentions per token, per slice. A multi-token alias counts once.
TimeSeries word_coverage(const std::vector<TimeSlice>& slices,
                         const Corpus& corpus, const EntityAliasSet& aliases,
                         WarningLog* warnings = nullptr);

// C(x_t) = x_t / x_{t-1} - 1; output drops the first point. A zero anywhere
// but the final position is an error (it would divide the next step by zero).
TimeSeries percent_change(const TimeSeries& series);

// Sample Pearson correlation. Series must cover identical periods, have at
// least 3 points and non-zero variance.
double pearson(const TimeSeries& x, const TimeSeries& y);

struct GrangerResult {
  int own_lags = 0;        // m
  int predictor_lags = 0;  // n
  bool intercept = false;
  // alpha_1..alpha_m, beta_1..beta_n, then "intercept" when enabled.
  std::vector<std::string> names;
  std::vector<double> coefficients;
  std::vector<double> std_errors;
  std::vector<double> t_stats;
  std::vector<double> p_values;
  double residual_variance = 0.0;
  int n_obs = 0;  // series length - max(m, n)
};

// OLS of target_t on its own m lags and the predictor's n lags. Both series
// are expected to be percent-change transformed by the caller and aligned on
// identical periods. The reverse-direction test is the same call with the
// series swapped. n = 0 degenerates to a pure autoregression.
GrangerResult granger_test(const TimeSeries& target,
                           const TimeSeries& predictor, int own_lags,
                           int predictor_lags, bool intercept = true,
                           WarningLog* warnings = nullptr);

}  // namespace newsframes
