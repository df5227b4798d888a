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

#include "newsframes/embedding.h"
#include "newsframes/lexicon.h"

namespace newsframes {

// Source word -> lowercased single-token target words. Entries with no usable
// translation are omitted rather than stored empty.
struct BilingualDictionary {
  std::unordered_map<std::string, std::vector<std::string>> translations;

  const std::vector<std::string>* find(const std::string& word) const {
    const auto it = translations.find(word);
    return it == translations.end() ? nullptr : &it->second;
  }
};

// TSV: source<TAB>target1,target2,...  Multi-word targets are dropped with a
// warning (lexicons are unigram).
BilingualDictionary read_dictionary_tsv(const std::string& path,
                                        WarningLog* warnings = nullptr);

// Union of the translations of the lexicon words; a translated word inherits
// the maximum score among its sources; untranslatable words are dropped.
ScoredLexicon translate_lexicon(const ScoredLexicon& lexicon,
                                const BilingualDictionary& dictionary);

// translate -> restrict to the vocab_cap most frequent target words ->
// replace-mode expansion -> document-frequency band filter on the target
// corpus. Warns (does not fail) when the final size falls outside [100, 300].
ScoredLexicon project_lexicon(const ScoredLexicon& base,
                              const BilingualDictionary& dictionary,
                              const EmbeddingSpace& target_space,
                              const DocFrequencyTable& target_df,
                              const ExpansionConfig& cfg,
                              WarningLog* warnings = nullptr);

// Share of entries the two lexicons have in common, relative to the smaller
// one. Reported by the projection pipeline; overlap is never removed.
double lexicon_overlap_fraction(const ScoredLexicon& a, const ScoredLexicon& b);

}  // namespace newsframes
