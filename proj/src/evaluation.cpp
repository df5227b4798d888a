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

#include "newsframes/evaluation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "newsframes/rng.h"

namespace newsframes {

FoldSplit kfold_split(const std::vector<std::string>& doc_ids, int k,
                      std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("fold count must be >= 1");
  if (static_cast<std::size_t>(k) > doc_ids.size())
    throw std::invalid_argument("fold count " + std::to_string(k) +
                                " exceeds the " + std::to_string(doc_ids.size()) +
                                " documents");
  std::vector<std::string> shuffled = doc_ids;
  SplitMix64 rng(seed);
  rng.shuffle(shuffled);
  FoldSplit split;
  split.k = k;
  for (std::size_t i = 0; i < shuffled.size(); ++i)
    split.assignment[shuffled[i]] = static_cast<int>(i % static_cast<std::size_t>(k));
  return split;
}

double eval_primary_accuracy(const std::map<std::string, std::string>& predictions,
                             const std::map<std::string, std::string>& gold) {
  if (predictions.size() != gold.size())
    throw std::invalid_argument("prediction and gold document sets differ");
  if (gold.empty()) throw std::invalid_argument("no documents to score");
  std::size_t correct = 0;
  for (const auto& [id, label] : gold) {
    const auto it = predictions.find(id);
    if (it == predictions.end())
      throw std::invalid_argument("no prediction for document '" + id + "'");
    if (it->second == label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

std::map<std::string, PrecisionRecallF1> eval_all_frames_f1(
    const std::map<std::string, std::set<std::string>>& predictions,
    const std::map<std::string, std::set<std::string>>& gold) {
  if (predictions.size() != gold.size())
    throw std::invalid_argument("prediction and gold document sets differ");
  std::set<std::string> frames;
  for (const auto& [id, labels] : gold) {
    if (predictions.count(id) == 0)
      throw std::invalid_argument("no prediction for document '" + id + "'");
    frames.insert(labels.begin(), labels.end());
  }
  for (const auto& [id, labels] : predictions)
    frames.insert(labels.begin(), labels.end());

  std::map<std::string, PrecisionRecallF1> scores;
  for (const auto& frame : frames) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (const auto& [id, gold_labels] : gold) {
      const bool has_gold = gold_labels.count(frame) != 0;
      const bool has_pred = predictions.at(id).count(frame) != 0;
      if (has_gold && has_pred) ++tp;
      if (!has_gold && has_pred) ++fp;
      if (has_gold && !has_pred) ++fn;
    }
    PrecisionRecallF1 s;
    s.precision = (tp + fp) == 0 ? 0.0
                                 : static_cast<double>(tp) /
                                       static_cast<double>(tp + fp);
    s.recall = (tp + fn) == 0
                   ? 0.0
                   : static_cast<double>(tp) / static_cast<double>(tp + fn);
    s.f1 = (s.precision + s.recall) == 0.0
               ? 0.0
               : 2.0 * s.precision * s.recall / (s.precision + s.recall);
    scores[frame] = s;
  }
  return scores;
}

std::map<std::string, std::set<std::string>> baseline_logreg(
    const Corpus& train, const Corpus& test,
    const std::vector<std::string>& frames, const LogRegConfig& config,
    WarningLog* warnings) {
  if (train.empty()) throw std::invalid_argument("empty training corpus");

  // Binary bag-of-words features over the training vocabulary.
  std::unordered_map<std::string, int> feature_index;
  for (const auto& doc : train.docs())
    for (const auto& token : doc.tokens)
      feature_index.emplace(token, static_cast<int>(feature_index.size()));
  const int n_features = static_cast<int>(feature_index.size());

  const auto featurize = [&](const Document& doc) {
    std::vector<int> active;
    std::set<std::string> seen;
    for (const auto& token : doc.tokens) {
      if (!seen.insert(token).second) continue;
      const auto it = feature_index.find(token);
      if (it != feature_index.end()) active.push_back(it->second);
    }
    std::sort(active.begin(), active.end());
    return active;
  };

  std::vector<std::vector<int>> train_features;
  train_features.reserve(train.size());
  for (const auto& doc : train.docs()) train_features.push_back(featurize(doc));

  std::map<std::string, std::set<std::string>> predictions;
  for (const auto& doc : test.docs()) predictions[doc.id];

  const auto sigmoid = [](double x) {
    if (x > 30.0) return 1.0;
    if (x < -30.0) return 0.0;
    return 1.0 / (1.0 + std::exp(-x));
  };

  for (const auto& frame : frames) {
    std::vector<double> labels;
    labels.reserve(train.size());
    bool any_pos = false, any_neg = false;
    for (const auto& doc : train.docs()) {
      const bool positive = doc.gold_frames().count(frame) != 0;
      labels.push_back(positive ? 1.0 : 0.0);
      (positive ? any_pos : any_neg) = true;
    }
    if (!any_pos || !any_neg) {
      warn(warnings, "frame '" + frame + "': single-class training labels; " +
                         (any_pos ? "always" : "never") + " predicted");
      if (any_pos)
        for (const auto& doc : test.docs()) predictions[doc.id].insert(frame);
      continue;
    }

    std::vector<double> weights(n_features, 0.0);
    double bias = 0.0;
    const double inv_n = 1.0 / static_cast<double>(train.size());
    for (int iter = 0; iter < config.max_iterations; ++iter) {
      std::vector<double> grad(n_features, 0.0);
      double grad_bias = 0.0;
      for (std::size_t i = 0; i < train_features.size(); ++i) {
        double score = bias;
        for (int f : train_features[i]) score += weights[f];
        const double err = sigmoid(score) - labels[i];
        grad_bias += err;
        for (int f : train_features[i]) grad[f] += err;
      }
      double max_component = std::fabs(grad_bias * inv_n);
      for (int f = 0; f < n_features; ++f) {
        grad[f] = grad[f] * inv_n + config.l2 * weights[f];
        max_component = std::max(max_component, std::fabs(grad[f]));
      }
      for (int f = 0; f < n_features; ++f)
        weights[f] -= config.learning_rate * grad[f];
      bias -= config.learning_rate * grad_bias * inv_n;
      if (max_component < config.tolerance) break;
    }

    for (const auto& doc : test.docs()) {
      double score = bias;
      for (int f : featurize(doc)) score += weights[f];
      if (sigmoid(score) >= 0.5) predictions[doc.id].insert(frame);
    }
  }
  return predictions;
}

std::vector<IntruderSet> intruder_generate(
    const std::vector<ScoredLexicon>& lexicons, int sets_per_frame,
    std::uint64_t seed) {
  if (lexicons.size() < 2)
    throw std::invalid_argument("intruder task needs at least 2 frames");
  if (sets_per_frame < 1)
    throw std::invalid_argument("sets_per_frame must be >= 1");
  for (const auto& lexicon : lexicons)
    if (lexicon.entries.size() < 5)
      throw std::invalid_argument("frame '" + lexicon.frame +
                                  "' has fewer than 5 lexicon words");

  std::vector<std::set<std::string>> word_sets;
  word_sets.reserve(lexicons.size());
  for (const auto& lexicon : lexicons) {
    std::set<std::string> words;
    for (const auto& entry : lexicon.entries) words.insert(entry.word);
    word_sets.push_back(std::move(words));
  }

  SplitMix64 rng(seed);
  std::vector<IntruderSet> sets;
  for (std::size_t target = 0; target < lexicons.size(); ++target) {
    for (int s = 0; s < sets_per_frame; ++s) {
      IntruderSet set;
      set.frame = lexicons[target].frame;
      set.id = set.frame + ":" + std::to_string(s);

      // 5 distinct members from the target lexicon.
      std::vector<std::size_t> indices(lexicons[target].entries.size());
      for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
      rng.shuffle(indices);
      for (int m = 0; m < 5; ++m)
        set.members.push_back(lexicons[target].entries[indices[m]].word);

      // Intruder from a random other frame, absent from the target lexicon.
      const std::size_t other_offset =
          1 + rng.next_below(lexicons.size() - 1);
      const std::size_t other = (target + other_offset) % lexicons.size();
      std::vector<std::size_t> other_indices(lexicons[other].entries.size());
      for (std::size_t i = 0; i < other_indices.size(); ++i) other_indices[i] = i;
      rng.shuffle(other_indices);
      for (std::size_t i : other_indices) {
        const std::string& candidate = lexicons[other].entries[i].word;
        if (word_sets[target].count(candidate) == 0) {
          set.intruder = candidate;
          break;
        }
      }
      if (set.intruder.empty())
        throw std::runtime_error("no valid intruder for frame pair ('" +
                                 lexicons[target].frame + "', '" +
                                 lexicons[other].frame + "')");

      set.shuffled = set.members;
      set.shuffled.push_back(set.intruder);
      rng.shuffle(set.shuffled);
      sets.push_back(std::move(set));
    }
  }
  return sets;
}

std::map<std::string, IntruderScores> intruder_score(
    const std::vector<IntruderSet>& sets,
    const std::map<std::string, std::map<std::string, std::string>>& responses) {
  if (sets.empty()) throw std::invalid_argument("no intruder sets to score");
  if (responses.empty()) throw std::invalid_argument("no annotator responses");

  struct Tally {
    std::size_t sets = 0;
    std::size_t all_correct = 0;
    std::size_t any_correct = 0;
    double fraction_sum = 0.0;
  };
  std::map<std::string, Tally> tallies;

  for (const auto& set : sets) {
    std::size_t correct = 0;
    for (const auto& [annotator, answers] : responses) {
      const auto it = answers.find(set.id);
      if (it == answers.end())
        throw std::invalid_argument("annotator '" + annotator +
                                    "' has no response for set '" + set.id + "'");
      const std::string& chosen = it->second;
      if (std::find(set.shuffled.begin(), set.shuffled.end(), chosen) ==
          set.shuffled.end())
        throw std::invalid_argument("annotator '" + annotator + "' chose '" +
                                    chosen + "', which is not in set '" +
                                    set.id + "'");
      if (chosen == set.intruder) ++correct;
    }
    Tally& tally = tallies[set.frame];
    ++tally.sets;
    if (correct == responses.size()) ++tally.all_correct;
    if (correct > 0) ++tally.any_correct;
    tally.fraction_sum +=
        static_cast<double>(correct) / static_cast<double>(responses.size());
  }

  std::map<std::string, IntruderScores> scores;
  for (const auto& [frame, tally] : tallies) {
    IntruderScores s;
    const double n = static_cast<double>(tally.sets);
    s.hard = 100.0 * static_cast<double>(tally.all_correct) / n;
    s.soft = 100.0 * static_cast<double>(tally.any_correct) / n;
    s.avg = 100.0 * tally.fraction_sum / n;
    scores[frame] = s;
  }
  return scores;
}

}  // namespace newsframes
