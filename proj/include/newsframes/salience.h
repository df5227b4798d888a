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

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "newsframes/framing.h"
#include "newsframes/timeseries.h"

namespace newsframes {

// Decile months of an indicator series, ranked by percent change, with their
// calendar successors (successors beyond the series range are dropped).
struct MonthPartition {
  std::vector<Period> up_months;    // greatest growth
  std::vector<Period> down_months;  // greatest decline
  std::vector<Period> after_up;
  std::vector<Period> after_down;
};

MonthPartition partition_months(const TimeSeries& indicator,
                                double decile = 0.10);

using TokenCounts = std::unordered_map<std::string, long long>;
using PriorCounts = std::unordered_map<std::string, double>;

struct LogOddsEntry {
  double delta = 0.0;     // log-odds difference, corpus i minus corpus j
  double variance = 0.0;  // ~ 1/(y_i + a) + 1/(y_j + a)
  double z = 0.0;
};

// Log-odds difference between two corpora under an informative Dirichlet
// prior, with its large-sample variance and z-score. The prior must assign a
// positive pseudo-count to every word of either corpus; its total over all
// entries is alpha_0.
std::map<std::string, LogOddsEntry> log_odds_dirichlet(const TokenCounts& counts_i,
                                                       const TokenCounts& counts_j,
                                                       const PriorCounts& prior);

// Default prior: full-corpus relative frequencies scaled to alpha_0.
PriorCounts corpus_scaled_prior(const Corpus& corpus, double alpha0 = 500.0);

// Words that gain salience after downturn months and lose it after upturn
// months, within focus documents carrying the frame: the top_n words by z
// favoring the month after a decline, intersected with the top_n favoring the
// upturn month itself. Only words whose z has the right sign qualify.
struct AgendaLexResult {
  std::set<std::string> words;
  std::map<std::string, double> rising_z;  // z from the downturn-side test
};

AgendaLexResult build_agendalex_scored(
    const std::string& frame, const Corpus& corpus,
    const std::unordered_map<std::string, FrameAssignment>& assignments,
    const MonthPartition& partition, const DocPredicate& focus,
    const PriorCounts& prior, std::size_t top_n = 500);

std::set<std::string> build_agendalex(
    const std::string& frame, const Corpus& corpus,
    const std::unordered_map<std::string, FrameAssignment>& assignments,
    const MonthPartition& partition, const DocPredicate& focus,
    const PriorCounts& prior, std::size_t top_n = 500);

// Lexicon-token occurrences per token, within focus documents, per slice.
TimeSeries lexicon_frequency_series(const std::set<std::string>& lexicon,
                                    const std::vector<TimeSlice>& slices,
                                    const Corpus& corpus,
                                    const DocPredicate& focus,
                                    WarningLog* warnings = nullptr);

}  // namespace newsframes
