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

#include "newsframes/salience.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newsframes {

MonthPartition partition_months(const TimeSeries& indicator, double decile) {
  indicator.validate();
  if (indicator.granularity != Granularity::month)
    throw std::invalid_argument("month partition requires a monthly series");
  if (indicator.size() < 10)
    throw std::invalid_argument("month partition requires at least 10 months");
  if (decile <= 0.0 || decile > 0.5)
    throw std::invalid_argument("decile must lie in (0, 0.5]");

  const TimeSeries changes = percent_change(indicator);
  const std::size_t defined = changes.size();
  const std::size_t k = static_cast<std::size_t>(
      std::ceil(decile * static_cast<double>(defined)));

  std::vector<std::size_t> order(defined);
  for (std::size_t i = 0; i < defined; ++i) order[i] = i;

  auto ranked = order;
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    return changes.points[a].value > changes.points[b].value;
  });
  MonthPartition partition;
  for (std::size_t i = 0; i < k; ++i)
    partition.up_months.push_back(changes.points[ranked[i]].period);

  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    return changes.points[a].value < changes.points[b].value;
  });
  for (std::size_t i = 0; i < k; ++i)
    partition.down_months.push_back(changes.points[ranked[i]].period);

  std::sort(partition.up_months.begin(), partition.up_months.end());
  std::sort(partition.down_months.begin(), partition.down_months.end());

  for (const auto& p : partition.up_months)
    for (const auto& q : partition.down_months)
      if (p == q)
        throw std::runtime_error(
            "tied percent changes make the decile partition ambiguous at " +
            p.str());

  const Period last = indicator.points.back().period;
  for (const auto& p : partition.up_months) {
    const Period succ = p.next();
    if (succ <= last) partition.after_up.push_back(succ);
  }
  for (const auto& p : partition.down_months) {
    const Period succ = p.next();
    if (succ <= last) partition.after_down.push_back(succ);
  }
  return partition;
}

std::map<std::string, LogOddsEntry> log_odds_dirichlet(const TokenCounts& counts_i,
                                                       const TokenCounts& counts_j,
                                                       const PriorCounts& prior) {
  double alpha0 = 0.0;
  for (const auto& [word, pseudo] : prior) {
    if (!(pseudo > 0.0))
      throw std::invalid_argument("prior pseudo-count for '" + word +
                                  "' is not positive");
    alpha0 += pseudo;
  }
  double total_i = 0.0, total_j = 0.0;
  for (const auto& [word, count] : counts_i) total_i += static_cast<double>(count);
  for (const auto& [word, count] : counts_j) total_j += static_cast<double>(count);

  std::map<std::string, LogOddsEntry> result;
  const auto fetch = [](const TokenCounts& counts, const std::string& word) {
    const auto it = counts.find(word);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second);
  };
  const auto consider = [&](const std::string& word) {
    if (result.count(word) != 0) return;
    const auto pit = prior.find(word);
    if (pit == prior.end())
      throw std::invalid_argument("prior has no pseudo-count for '" + word + "'");
    const double a = pit->second;
    const double yi = fetch(counts_i, word);
    const double yj = fetch(counts_j, word);
    LogOddsEntry entry;
    entry.delta = std::log((yi + a) / (total_i + alpha0 - yi - a)) -
                  std::log((yj + a) / (total_j + alpha0 - yj - a));
    entry.variance = 1.0 / (yi + a) + 1.0 / (yj + a);
    entry.z = entry.delta / std::sqrt(entry.variance);
    result[word] = entry;
  };
  for (const auto& [word, count] : counts_i) consider(word);
  for (const auto& [word, count] : counts_j) consider(word);
  return result;
}

PriorCounts corpus_scaled_prior(const Corpus& corpus, double alpha0) {
  if (!(alpha0 > 0.0)) throw std::invalid_argument("alpha0 must be positive");
  TokenCounts counts;
  long long total = 0;
  for (const auto& doc : corpus.docs())
    for (const auto& token : doc.tokens) {
      ++counts[token];
      ++total;
    }
  PriorCounts prior;
  prior.reserve(counts.size());
  for (const auto& [word, count] : counts)
    prior[word] =
        alpha0 * static_cast<double>(count) / static_cast<double>(total);
  return prior;
}

namespace {

TokenCounts pool_tokens(const Corpus& corpus,
                        const std::unordered_map<std::string, FrameAssignment>&
                            assignments,
                        const std::string& frame, const DocPredicate& focus,
                        const std::vector<Period>& months,
                        const std::string& pool_name) {
  const std::set<Period> month_set(months.begin(), months.end());
  TokenCounts counts;
  std::size_t docs_used = 0;
  for (const auto& doc : corpus.docs()) {
    if (month_set.count(Period::of_date(doc.date, Granularity::month)) == 0)
      continue;
    if (!focus(doc)) continue;
    const auto it = assignments.find(doc.id);
    if (it == assignments.end() || it->second.present.count(frame) == 0) continue;
    ++docs_used;
    for (const auto& token : doc.tokens) ++counts[token];
  }
  if (docs_used == 0)
    throw std::runtime_error("no qualifying documents in pool " + pool_name +
                             " for frame '" + frame + "'");
  return counts;
}

// Top-capped set of words whose z favors corpus i (z > 0), best first.
std::set<std::string> top_by_z(const std::map<std::string, LogOddsEntry>& table,
                               std::size_t top_n) {
  std::vector<std::pair<std::string, double>> positive;
  for (const auto& [word, entry] : table)
    if (entry.z > 0.0) positive.emplace_back(word, entry.z);
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (positive.size() > top_n) positive.resize(top_n);
  std::set<std::string> out;
  for (const auto& [word, z] : positive) out.insert(word);
  return out;
}

}  // namespace

AgendaLexResult build_agendalex_scored(
    const std::string& frame, const Corpus& corpus,
    const std::unordered_map<std::string, FrameAssignment>& assignments,
    const MonthPartition& partition, const DocPredicate& focus,
    const PriorCounts& prior, std::size_t top_n) {
  const TokenCounts down =
      pool_tokens(corpus, assignments, frame, focus, partition.down_months, "M_t-");
  const TokenCounts after_down = pool_tokens(corpus, assignments, frame, focus,
                                             partition.after_down, "M_t+1-");
  const TokenCounts up =
      pool_tokens(corpus, assignments, frame, focus, partition.up_months, "M_t+");
  const TokenCounts after_up = pool_tokens(corpus, assignments, frame, focus,
                                           partition.after_up, "M_t+1+");

  // Salience rising into the month after a downturn...
  const auto rising_table = log_odds_dirichlet(after_down, down, prior);
  const auto rising = top_by_z(rising_table, top_n);
  // ...and falling into the month after an upturn.
  const auto falling = top_by_z(log_odds_dirichlet(up, after_up, prior), top_n);

  AgendaLexResult result;
  for (const auto& word : rising)
    if (falling.count(word) != 0) {
      result.words.insert(word);
      result.rising_z[word] = rising_table.at(word).z;
    }
  return result;
}

std::set<std::string> build_agendalex(
    const std::string& frame, const Corpus& corpus,
    const std::unordered_map<std::string, FrameAssignment>& assignments,
    const MonthPartition& partition, const DocPredicate& focus,
    const PriorCounts& prior, std::size_t top_n) {
  return build_agendalex_scored(frame, corpus, assignments, partition, focus,
                                prior, top_n)
      .words;
}

TimeSeries lexicon_frequency_series(const std::set<std::string>& lexicon,
                                    const std::vector<TimeSlice>& slices,
                                    const Corpus& corpus,
                                    const DocPredicate& focus,
                                    WarningLog* warnings) {
  TimeSeries series;
  if (slices.empty()) return series;
  series.granularity = slices.front().period.granularity;
  for (const auto& slice : slices) {
    TimePoint point{slice.period, 0.0};
    long long hits = 0;
    long long tokens = 0;
    for (const auto& id : slice.documents) {
      const Document* doc = corpus.find(id);
      if (doc == nullptr)
        throw std::runtime_error("slice references unknown document '" + id + "'");
      if (!focus(*doc)) continue;
      for (const auto& token : doc->tokens) {
        ++tokens;
        if (lexicon.count(token) != 0) ++hits;
      }
    }
    if (tokens == 0) {
      warn(warnings, "slice " + slice.period.str() + " has no focus documents");
    } else {
      point.value = static_cast<double>(hits) / static_cast<double>(tokens);
    }
    series.points.push_back(point);
  }
  series.validate();
  return series;
}

}  // namespace newsframes
