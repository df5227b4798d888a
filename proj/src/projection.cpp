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

#include "newsframes/projection.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace newsframes {

BilingualDictionary read_dictionary_tsv(const std::string& path,
                                        WarningLog* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dictionary file '" + path + "'");
  BilingualDictionary dictionary;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("dictionary line " + std::to_string(line_no) +
                               ": expected source<TAB>targets");
    const std::string source = line.substr(0, tab);
    std::vector<std::string> targets;
    const std::string field = line.substr(tab + 1);
    std::size_t pos = 0;
    while (pos <= field.size()) {
      const auto comma = field.find(',', pos);
      const std::string raw =
          field.substr(pos, comma == std::string::npos ? std::string::npos
                                                       : comma - pos);
      const auto tokens = tokenize(raw);
      if (tokens.size() == 1) {
        targets.push_back(tokens[0]);
      } else if (!raw.empty()) {
        warn(warnings, "dictionary line " + std::to_string(line_no) + ": " +
                           (tokens.empty() ? "untokenizable" : "multi-word") +
                           " translation '" + raw + "' dropped");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!targets.empty()) dictionary.translations[source] = std::move(targets);
  }
  return dictionary;
}

ScoredLexicon translate_lexicon(const ScoredLexicon& lexicon,
                                const BilingualDictionary& dictionary) {
  if (lexicon.provenance != Provenance::base)
    throw std::invalid_argument("frame '" + lexicon.frame +
                                "': only base lexicons are translated");
  std::map<std::string, double> best;
  for (const auto& entry : lexicon.entries) {
    const auto* targets = dictionary.find(entry.word);
    if (targets == nullptr) continue;
    for (const auto& target : *targets) {
      const auto it = best.find(target);
      if (it == best.end() || entry.score > it->second) best[target] = entry.score;
    }
  }
  if (best.empty())
    throw std::runtime_error("frame '" + lexicon.frame +
                             "': dictionary covers no lexicon words");
  ScoredLexicon out;
  out.frame = lexicon.frame;
  out.provenance = Provenance::translated;
  out.entries.reserve(best.size());
  for (const auto& [word, score] : best) out.entries.push_back({word, score});
  std::sort(out.entries.begin(), out.entries.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  return out;
}

ScoredLexicon project_lexicon(const ScoredLexicon& base,
                              const BilingualDictionary& dictionary,
                              const EmbeddingSpace& target_space,
                              const DocFrequencyTable& target_df,
                              const ExpansionConfig& cfg,
                              WarningLog* warnings) {
  cfg.validate();
  ScoredLexicon translated = translate_lexicon(base, dictionary);

  // Keep only translations inside the capped target vocabulary.
  ScoredLexicon capped;
  capped.frame = translated.frame;
  capped.provenance = translated.provenance;
  for (const auto& entry : translated.entries) {
    const int rank = target_space.find(entry.word);
    if (rank >= 0 && rank < cfg.vocab_cap) capped.entries.push_back(entry);
  }

  ScoredLexicon expanded = expand_lexicon(capped, target_space, cfg);

  ScoredLexicon final_lexicon;
  final_lexicon.frame = expanded.frame;
  final_lexicon.provenance = Provenance::final_stage;
  for (const auto& entry : expanded.entries) {
    const double frac = target_df.at(entry.word);
    if (frac < kDefaultDfMin || frac > kDefaultDfMax) continue;
    final_lexicon.entries.push_back(entry);
  }
  if (final_lexicon.entries.empty())
    throw std::runtime_error(
        "frame '" + base.frame +
        "': projection is empty after the document-frequency filter");
  if (final_lexicon.entries.size() < 100 || final_lexicon.entries.size() > 300)
    warn(warnings, "frame '" + base.frame + "': final lexicon has " +
                       std::to_string(final_lexicon.entries.size()) +
                       " words, outside the expected [100, 300] band");
  return final_lexicon;
}

double lexicon_overlap_fraction(const ScoredLexicon& a, const ScoredLexicon& b) {
  if (a.entries.empty() || b.entries.empty()) return 0.0;
  std::set<std::string> words_a;
  for (const auto& e : a.entries) words_a.insert(e.word);
  std::size_t shared = 0;
  for (const auto& e : b.entries)
    if (words_a.count(e.word) != 0) ++shared;
  return static_cast<double>(shared) /
         static_cast<double>(std::min(a.entries.size(), b.entries.size()));
}

}  // namespace newsframes
