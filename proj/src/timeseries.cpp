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

#include "newsframes/timeseries.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "newsframes/stats.h"

namespace newsframes {

void TimeSeries::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].period.granularity != granularity)
      throw std::invalid_argument("series point " + std::to_string(i) +
                                  " has a foreign granularity");
    if (!std::isfinite(points[i].value))
      throw std::invalid_argument("series value at " + points[i].period.str() +
                                  " is not finite");
    if (i > 0 && points[i - 1].period.next() != points[i].period)
      throw std::invalid_argument("series has a gap or disorder after " +
                                  points[i - 1].period.str());
  }
}

std::vector<double> TimeSeries::values() const {
  std::vector<double> v;
  v.reserve(points.size());
  for (const auto& p : points) v.push_back(p.value);
  return v;
}

TimeSeries make_series(Granularity g, std::vector<TimePoint> points) {
  TimeSeries series{g, std::move(points)};
  series.validate();
  return series;
}

TimeSeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open series file '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("period,value", 0) != 0)
    throw std::runtime_error("series file '" + path +
                             "' is missing the 'period,value' header");
  TimeSeries series;
  std::size_t line_no = 1;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("series file '" + path + "' line " +
                               std::to_string(line_no) + ": expected period,value");
    TimePoint point;
    point.period = Period::parse(line.substr(0, comma));
    try {
      point.value = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("series file '" + path + "' line " +
                               std::to_string(line_no) + ": bad value");
    }
    if (first) {
      series.granularity = point.period.granularity;
      first = false;
    }
    series.points.push_back(point);
  }
  if (series.points.empty())
    throw std::runtime_error("series file '" + path + "' has no data rows");
  series.validate();
  return series;
}

void write_series_csv(const TimeSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write series file '" + path + "'");
  out << "period,value\n";
  for (const auto& p : series.points)
    out << p.period.str() << ',' << format_general(p.value, 10) << '\n';
}

TimeSeries article_coverage(const std::vector<TimeSlice>& slices,
                            const Corpus& corpus, const EntityAliasSet& aliases,
                            std::size_t min_mentions, WarningLog* warnings) {
  TimeSeries series;
  if (slices.empty()) return series;
  series.granularity = slices.front().period.granularity;
  for (const auto& slice : slices) {
    TimePoint point{slice.period, 0.0};
    if (slice.documents.empty()) {
      warn(warnings, "slice " + slice.period.str() + " has no documents");
    } else {
      std::size_t qualifying = 0;
      for (const auto& id : slice.documents) {
        const Document* doc = corpus.find(id);
        if (doc == nullptr)
          throw std::runtime_error("slice references unknown document '" + id + "'");
        if (entity_mention_count(*doc, aliases) >= min_mentions) ++qualifying;
      }
      point.value = static_cast<double>(qualifying) /
                    static_cast<double>(slice.documents.size());
    }
    series.points.push_back(point);
  }
  series.validate();
  return series;
}

TimeSeries word_coverage(const std::vector<TimeSlice>& slices,
                         const Corpus& corpus, const EntityAliasSet& aliases,
                         WarningLog* warnings) {
  TimeSeries series;
  if (slices.empty()) return series;
  series.granularity = slices.front().period.granularity;
  for (const auto& slice : slices) {
    TimePoint point{slice.period, 0.0};
    std::size_t mentions = 0;
    std::size_t tokens = 0;
    for (const auto& id : slice.documents) {
      const Document* doc = corpus.find(id);
      if (doc == nullptr)
        throw std::runtime_error("slice references unknown document '" + id + "'");
      mentions += entity_mention_count(*doc, aliases);
      tokens += doc->tokens.size();
    }
    if (tokens == 0) {
      warn(warnings, "slice " + slice.period.str() + " has no tokens");
    } else {
      point.value = static_cast<double>(mentions) / static_cast<double>(tokens);
    }
    series.points.push_back(point);
  }
  series.validate();
  return series;
}

TimeSeries percent_change(const TimeSeries& series) {
  series.validate();
  TimeSeries out;
  out.granularity = series.granularity;
  for (std::size_t i = 0; i + 1 < series.points.size(); ++i) {
    if (series.points[i].value == 0.0)
      throw std::runtime_error("percent change undefined: zero value at " +
                               series.points[i].period.str() + " (index " +
                               std::to_string(i) + ")");
    out.points.push_back(
        {series.points[i + 1].period,
         series.points[i + 1].value / series.points[i].value - 1.0});
  }
  return out;
}

namespace {

void require_aligned(const TimeSeries& x, const TimeSeries& y) {
  if (x.granularity != y.granularity)
    throw std::invalid_argument("series granularities differ");
  if (x.points.size() != y.points.size())
    throw std::invalid_argument("series lengths differ");
  for (std::size_t i = 0; i < x.points.size(); ++i)
    if (x.points[i].period != y.points[i].period)
      throw std::invalid_argument("series periods differ at index " +
                                  std::to_string(i));
}

}  // namespace

double pearson(const TimeSeries& x, const TimeSeries& y) {
  require_aligned(x, y);
  const std::size_t n = x.points.size();
  if (n < 3) throw std::invalid_argument("correlation needs at least 3 points");
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x.points[i].value;
    mean_y += y.points[i].value;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x.points[i].value - mean_x;
    const double dy = y.points[i].value - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("correlation undefined for a constant series");
  return sxy / std::sqrt(sxx * syy);
}

GrangerResult granger_test(const TimeSeries& target,
                           const TimeSeries& predictor, int own_lags,
                           int predictor_lags, bool intercept,
                           WarningLog* warnings) {
  require_aligned(target, predictor);
  if (own_lags < 1) throw std::invalid_argument("own lag count must be >= 1");
  if (predictor_lags < 0)
    throw std::invalid_argument("predictor lag count must be >= 0");
  const int max_lag = std::max(own_lags, predictor_lags);
  const int k = own_lags + predictor_lags + (intercept ? 1 : 0);
  const int length = static_cast<int>(target.points.size());
  if (length < max_lag + k + 2)
    throw std::invalid_argument(
        "series too short: need at least " + std::to_string(max_lag + k + 2) +
        " points for " + std::to_string(own_lags) + "+" +
        std::to_string(predictor_lags) + " lags");

  const std::vector<double> yv = target.values();
  const std::vector<double> xv = predictor.values();
  std::vector<std::vector<double>> design;
  std::vector<double> response;
  for (int t = max_lag; t < length; ++t) {
    std::vector<double> row;
    row.reserve(k);
    for (int i = 1; i <= own_lags; ++i) row.push_back(yv[t - i]);
    for (int j = 1; j <= predictor_lags; ++j) row.push_back(xv[t - j]);
    if (intercept) row.push_back(1.0);
    design.push_back(std::move(row));
    response.push_back(yv[t]);
  }

  OlsFit fit;
  try {
    fit = ols_fit(design, response, warnings);
  } catch (const SingularMatrixError&) {
    throw std::runtime_error("collinear lags: normal equations are singular");
  }

  GrangerResult result;
  result.own_lags = own_lags;
  result.predictor_lags = predictor_lags;
  result.intercept = intercept;
  for (int i = 1; i <= own_lags; ++i)
    result.names.push_back("alpha_" + std::to_string(i));
  for (int j = 1; j <= predictor_lags; ++j)
    result.names.push_back("beta_" + std::to_string(j));
  if (intercept) result.names.push_back("intercept");
  result.coefficients = std::move(fit.coefficients);
  result.std_errors = std::move(fit.std_errors);
  result.t_stats = std::move(fit.t_stats);
  result.p_values = std::move(fit.p_values);
  result.residual_variance = fit.residual_variance;
  result.n_obs = fit.n_obs;
  return result;
}

}  // namespace newsframes
