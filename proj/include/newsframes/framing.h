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

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "newsframes/corpus.h"
#include "newsframes/lexicon.h"

namespace newsframes {

// Label assigned when no frame reaches the presence threshold.
inline const std::string kOtherFrame = "Other";

struct FrameAssignment {
  std::string doc_id;
  std::map<std::string, int> counts;   // every scored frame, zeros included
  std::set<std::string> present;       // counts >= threshold
  std::string primary;                 // highest count; "Other" iff none present
};

// "at least 3 instances" can be read as token occurrences (default: a word
// repeated 3 times suffices) or as distinct lexicon words.
enum class FrameCountMode { token_occurrences, distinct_words };

FrameAssignment assign_frames(const Document& doc,
                              const std::vector<ScoredLexicon>& lexicons,
                              int threshold = 3,
                              FrameCountMode mode = FrameCountMode::token_occurrences);

using DocPredicate = std::function<bool(const Document&)>;

// The usual focus event: the document mentions the entity >= min_mentions times.
DocPredicate entity_focus(const EntityAliasSet& aliases,
                          std::size_t min_mentions = 2);

// Normalized PMI between the focus event and frame presence, over document
// level binary events:
//   [ln p(x,y) - ln p(x) - ln p(y)] / (-ln p(x,y))
// Returns -1 when the events never co-occur and 1 when they always do (the
// p(x,y) = 1 limit). An empty marginal is an error naming the event.
double npmi(const Corpus& corpus, const DocPredicate& focus,
            const std::string& frame, const std::vector<ScoredLexicon>& lexicons,
            int threshold = 3,
            FrameCountMode mode = FrameCountMode::token_occurrences);

}  // namespace newsframes
