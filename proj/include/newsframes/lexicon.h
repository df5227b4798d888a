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
#include <unordered_map>
#include <vector>

#include "newsframes/corpus.h"

namespace newsframes {

enum class Provenance { base, translated, expanded, final_stage };

std::string provenance_name(Provenance p);
Provenance parse_provenance(std::string_view name);

struct LexiconEntry {
  std::string word;
  double score = 0.0;
};

// Scored word list for one frame. Entries are unique words sorted by score
// descending (ties by word ascending).
struct ScoredLexicon {
  std::string frame;
  std::vector<LexiconEntry> entries;
  Provenance provenance = Provenance::base;

  bool contains(const std::string& word) const;
  std::size_t size() const { return entries.size(); }
};

// Fraction of documents containing each word, over a stated reference corpus.
struct DocFrequencyTable {
  std::unordered_map<std::string, double> fraction;
  std::size_t corpus_size = 0;

  double at(const std::string& word) const {
    const auto it = fraction.find(word);
    return it == fraction.end() ? 0.0 : it->second;
  }
};

DocFrequencyTable doc_frequencies(const Corpus& corpus);

// Word association with a frame: ln P(w|F) / P(w), where P(w|F) counts token
// unigrams inside the union of frame-F spans and P(w) counts the whole
// corpus. Words never seen inside an F span are omitted. Result is sorted by
// score descending, ties by higher in-span count then word ascending.
std::vector<LexiconEntry> pmi_scores(const Corpus& corpus,
                                     const std::string& frame);

// Document-frequency band applied to base lexicons and final projections:
// keep df_min <= df(w) <= df_max.
inline constexpr double kDefaultDfMin = 0.005;
inline constexpr double kDefaultDfMax = 0.98;

// Drops words outside the document-frequency band, then keeps the top `size`
// scores (all, if fewer remain). Errors when nothing survives.
ScoredLexicon build_base_lexicon(const std::string& frame,
                                 const std::vector<LexiconEntry>& scores,
                                 const DocFrequencyTable& df,
                                 std::size_t size = 250,
                                 double df_min = kDefaultDfMin,
                                 double df_max = kDefaultDfMax);

// UTF-8 TSV: "# frame=<label> provenance=<stage>", then word<TAB>score rows
// with six decimal places.
void write_lexicon_tsv(const ScoredLexicon& lexicon, const std::string& path);
ScoredLexicon read_lexicon_tsv(const std::string& path);

}  // namespace newsframes
