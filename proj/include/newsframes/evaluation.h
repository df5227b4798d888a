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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "newsframes/corpus.h"
#include "newsframes/lexicon.h"

namespace newsframes {

struct FoldSplit {
  int k = 0;
  std::unordered_map<std::string, int> assignment;  // doc id -> fold in [0, k)
};

// Uniform random partition into k folds whose sizes differ by at most one.
// Deterministic for a given seed and input order.
FoldSplit kfold_split(const std::vector<std::string>& doc_ids, int k = 10,
                      std::uint64_t seed = 1);

// Fraction of exact matches over identical document sets.
double eval_primary_accuracy(const std::map<std::string, std::string>& predictions,
                             const std::map<std::string, std::string>& gold);

struct PrecisionRecallF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Per-frame binary scores with the usual 0/0 conventions: precision is 0
// with no predicted positives, recall is 0 with no gold positives, f1 is 0
// when precision + recall is 0.
std::map<std::string, PrecisionRecallF1> eval_all_frames_f1(
    const std::map<std::string, std::set<std::string>>& predictions,
    const std::map<std::string, std::set<std::string>>& gold);

struct LogRegConfig {
  double learning_rate = 2.0;
  double l2 = 1e-3;           // applied to weights, not the bias
  double tolerance = 1e-5;    // on the max absolute gradient component
  int max_iterations = 2000;
};

// One-vs-rest binary logistic regression per frame over binary bag-of-words
// features; a frame is predicted present when its probability reaches 0.5.
// Gold labels come from the any-annotator union of each training document's
// spans. Frames with single-class training labels are predicted constantly,
// with a warning.
std::map<std::string, std::set<std::string>> baseline_logreg(
    const Corpus& train, const Corpus& test,
    const std::vector<std::string>& frames, const LogRegConfig& config = {},
    WarningLog* warnings = nullptr);

struct IntruderSet {
  std::string id;  // "<frame>:<index>"
  std::string frame;
  std::vector<std::string> members;   // 5 words from the frame lexicon
  std::string intruder;               // from another frame, not in this lexicon
  std::vector<std::string> shuffled;  // the 6 words in presentation order
};

std::vector<IntruderSet> intruder_generate(
    const std::vector<ScoredLexicon>& lexicons, int sets_per_frame = 15,
    std::uint64_t seed = 1);

struct IntruderScores {
  double hard = 0.0;  // % of sets every annotator got right
  double soft = 0.0;  // % of sets at least one annotator got right
  double avg = 0.0;   // mean % of annotators right per set
};

// responses: annotator -> (set id -> chosen word). Every annotator must
// answer every set, with a word drawn from that set.
std::map<std::string, IntruderScores> intruder_score(
    const std::vector<IntruderSet>& sets,
    const std::map<std::string, std::map<std::string, std::string>>& responses);

}  // namespace newsframes
