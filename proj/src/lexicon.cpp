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

#include "newsframes/lexicon.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

namespace newsframes {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::base: return "base";
    case Provenance::translated: return "translated";
    case Provenance::expanded: return "expanded";
    case Provenance::final_stage: return "final";
  }
  return "?";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "base") return Provenance::base;
  if (name == "translated") return Provenance::translated;
  if (name == "expanded") return Provenance::expanded;
  if (name == "final") return Provenance::final_stage;
  throw std::invalid_argument("unknown lexicon provenance '" +
                              std::string(name) + "'");
}

bool ScoredLexicon::contains(const std::string& word) const {
  for (const auto& e : entries)
    if (e.word == word) return true;
  return false;
}

DocFrequencyTable doc_frequencies(const Corpus& corpus) {
  DocFrequencyTable table;
  table.corpus_size = corpus.size();
  if (corpus.empty()) return table;
  std::unordered_map<std::string, std::size_t> doc_counts;
  for (const auto& doc : corpus.docs()) {
    std::set<std::string> seen(doc.tokens.begin(), doc.tokens.end());
    for (const auto& w : seen) ++doc_counts[w];
  }
  const double n = static_cast<double>(corpus.size());
  for (const auto& [word, count] : doc_counts)
    table.fraction[word] = static_cast<double>(count) / n;
  return table;
}

std::vector<LexiconEntry> pmi_scores(const Corpus& corpus,
                                     const std::string& frame) {
  std::unordered_map<std::string, long long> corpus_counts;
  std::unordered_map<std::string, long long> span_counts;
  long long corpus_total = 0;
  long long span_total = 0;

  for (const auto& doc : corpus.docs()) {
    for (const auto& token : doc.tokens) {
      ++corpus_counts[token];
      ++corpus_total;
    }
    // Union of this frame's spans: a token inside two annotators' spans
    // counts once.
    std::vector<bool> in_span(doc.tokens.size(), false);
    for (const auto& span : doc.annotations) {
      if (span.frame != frame) continue;
      for (std::size_t t = span.start; t < span.end && t < doc.tokens.size(); ++t)
        in_span[t] = true;
    }
    for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
      if (!in_span[t]) continue;
      ++span_counts[doc.tokens[t]];
      ++span_total;
    }
  }

  if (span_total == 0)
    throw std::runtime_error("frame '" + frame + "' has no annotated tokens");

  std::vector<LexiconEntry> scores;
  scores.reserve(span_counts.size());
  for (const auto& [word, in_frame] : span_counts) {
    const double p_w_given_f =
        static_cast<double>(in_frame) / static_cast<double>(span_total);
    const double p_w = static_cast<double>(corpus_counts[word]) /
                       static_cast<double>(corpus_total);
    scores.push_back({word, std::log(p_w_given_f / p_w)});
  }
  std::sort(scores.begin(), scores.end(),
            [&](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              const long long ca = span_counts.at(a.word);
              const long long cb = span_counts.at(b.word);
              if (ca != cb) return ca > cb;
              return a.word < b.word;
            });
  return scores;
}

ScoredLexicon build_base_lexicon(const std::string& frame,
                                 const std::vector<LexiconEntry>& scores,
                                 const DocFrequencyTable& df, std::size_t size,
                                 double df_min, double df_max) {
  ScoredLexicon lexicon;
  lexicon.frame = frame;
  lexicon.provenance = Provenance::base;
  for (const auto& entry : scores) {
    const double frac = df.at(entry.word);
    if (frac < df_min || frac > df_max) continue;
    lexicon.entries.push_back(entry);
    if (lexicon.entries.size() == size) break;
  }
  if (lexicon.entries.empty())
    throw std::runtime_error("frame '" + frame +
                             "': no words survive the document-frequency filter");
  return lexicon;
}

void write_lexicon_tsv(const ScoredLexicon& lexicon, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write lexicon file '" + path + "'");
  out << "# frame=" << lexicon.frame
      << " provenance=" << provenance_name(lexicon.provenance) << '\n';
  for (const auto& entry : lexicon.entries)
    out << entry.word << '\t' << format_fixed(entry.score, 6) << '\n';
}

ScoredLexicon read_lexicon_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file '" + path + "'");
  std::string header;
  if (!std::getline(in, header) || header.rfind("# frame=", 0) != 0)
    throw std::runtime_error("lexicon file '" + path +
                             "' is missing the '# frame=' header");
  const auto prov_pos = header.rfind(" provenance=");
  if (prov_pos == std::string::npos)
    throw std::runtime_error("lexicon file '" + path +
                             "' header is missing 'provenance='");
  ScoredLexicon lexicon;
  lexicon.frame = header.substr(8, prov_pos - 8);
  lexicon.provenance = parse_provenance(header.substr(prov_pos + 12));

  std::string line;
  std::size_t line_no = 1;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("lexicon file '" + path + "' line " +
                               std::to_string(line_no) +
                               ": expected word<TAB>score");
    LexiconEntry entry;
    entry.word = line.substr(0, tab);
    try {
      entry.score = std::stod(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("lexicon file '" + path + "' line " +
                               std::to_string(line_no) + ": bad score");
    }
    if (!seen.insert(entry.word).second)
      throw std::runtime_error("lexicon file '" + path + "' line " +
                               std::to_string(line_no) + ": duplicate word '" +
                               entry.word + "'");
    lexicon.entries.push_back(std::move(entry));
  }
  // Hand-edited files may arrive unordered; the score-descending invariant
  // is restored here.
  std::sort(lexicon.entries.begin(), lexicon.entries.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  return lexicon;
}

}  // namespace newsframes
