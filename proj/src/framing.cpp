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

#include "newsframes/framing.h"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace newsframes {

FrameAssignment assign_frames(const Document& doc,
                              const std::vector<ScoredLexicon>& lexicons,
                              int threshold, FrameCountMode mode) {
  if (lexicons.empty())
    throw std::invalid_argument("cannot assign frames without lexicons");
  if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");

  FrameAssignment assignment;
  assignment.doc_id = doc.id;
  for (const auto& lexicon : lexicons) {
    std::unordered_set<std::string> words;
    words.reserve(lexicon.entries.size());
    for (const auto& entry : lexicon.entries) words.insert(entry.word);

    int count = 0;
    if (mode == FrameCountMode::token_occurrences) {
      for (const auto& token : doc.tokens)
        if (words.count(token) != 0) ++count;
    } else {
      std::unordered_set<std::string> seen;
      for (const auto& token : doc.tokens)
        if (words.count(token) != 0 && seen.insert(token).second) ++count;
    }
    assignment.counts[lexicon.frame] = count;
    if (count >= threshold) assignment.present.insert(lexicon.frame);
  }

  if (assignment.present.empty()) {
    assignment.primary = kOtherFrame;
  } else {
    // Highest count wins; ties go to the lexicographically smallest label.
    // std::map iterates labels in ascending order, so strict > keeps it.
    int best = -1;
    for (const auto& [frame, count] : assignment.counts) {
      if (count > best) {
        best = count;
        assignment.primary = frame;
      }
    }
  }
  return assignment;
}

DocPredicate entity_focus(const EntityAliasSet& aliases,
                          std::size_t min_mentions) {
  return [aliases, min_mentions](const Document& doc) {
    return entity_mention_count(doc, aliases) >= min_mentions;
  };
}

double npmi(const Corpus& corpus, const DocPredicate& focus,
            const std::string& frame, const std::vector<ScoredLexicon>& lexicons,
            int threshold, FrameCountMode mode) {
  if (corpus.empty()) throw std::invalid_argument("npmi over an empty corpus");
  std::size_t n_focus = 0, n_frame = 0, n_both = 0;
  for (const auto& doc : corpus.docs()) {
    const bool x = focus(doc);
    const auto assignment = assign_frames(doc, lexicons, threshold, mode);
    const bool y = assignment.present.count(frame) != 0;
    if (x) ++n_focus;
    if (y) ++n_frame;
    if (x && y) ++n_both;
  }
  const double total = static_cast<double>(corpus.size());
  const double px = static_cast<double>(n_focus) / total;
  const double py = static_cast<double>(n_frame) / total;
  const double pxy = static_cast<double>(n_both) / total;
  if (px == 0.0) throw std::runtime_error("npmi: focus event is empty");
  if (py == 0.0)
    throw std::runtime_error("npmi: frame event for '" + frame + "' is empty");
  if (pxy == 0.0) return -1.0;
  if (pxy == 1.0) return 1.0;  // both events happen in every document
  return (std::log(pxy) - std::log(px) - std::log(py)) / (-std::log(pxy));
}

}  // namespace newsframes
