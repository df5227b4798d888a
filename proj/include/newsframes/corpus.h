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

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "newsframes/common.h"
#include "newsframes/period.h"

namespace newsframes {

// Annotated text segment, in token offsets ([start, end)).
struct FrameSpan {
  std::string frame;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string annotator;
};

struct Document {
  std::string id;
  Date date;
  std::vector<std::string> tokens;
  std::vector<FrameSpan> annotations;
  std::string language;
  // Optional document-level gold label, used only by the evaluation harness.
  std::string gold_primary;

  // Union of frames any annotator marked somewhere in the document.
  std::set<std::string> gold_frames() const;
};

// Canonical entity with its lowercased token-sequence aliases.
struct EntityAliasSet {
  std::string entity;
  std::vector<std::vector<std::string>> aliases;  // each non-empty

  static EntityAliasSet make(std::string entity,
                             std::vector<std::vector<std::string>> aliases);
};

struct TimeSlice {
  Period period;
  std::vector<std::string> documents;  // ids, in corpus order
};

struct Token {
  std::string text;
  std::size_t begin = 0;  // codepoint offsets into the raw text
  std::size_t end = 0;
};

// Lowercased maximal runs of letters/digits; everything else separates.
// Implemented over UTF-8 codepoints with explicit case folding for ASCII,
// Latin-1/Extended, Greek and Cyrillic, so results do not depend on locale.
std::vector<std::string> tokenize(std::string_view text);
std::vector<Token> tokenize_with_offsets(std::string_view text);

// Non-overlapping alias occurrences, matched greedily left to right with
// longest alias first at each position. A multi-token match counts once.
std::size_t entity_mention_count(const Document& doc,
                                 const EntityAliasSet& aliases);

// Immutable after ingestion; all reads are safe concurrently.
class Corpus {
 public:
  void add(Document doc);  // rejects duplicate ids

  const std::vector<Document>& docs() const { return docs_; }
  const Document* find(const std::string& id) const;
  std::size_t size() const { return docs_.size(); }
  bool empty() const { return docs_.empty(); }

 private:
  std::vector<Document> docs_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

// Every document lands in exactly one slice; empty periods between the first
// and last document are emitted so downstream series are gap-free.
std::vector<TimeSlice> slice_corpus(const Corpus& corpus, Granularity g);

// The 14 lexicalizable Policy Frames Codebook frames plus "Other".
const std::vector<std::string>& default_frame_inventory();

// Newline-delimited records: {"id", "date", "text", "annotations"?, "lang"?,
// "primary"?}. Annotation char offsets (codepoints) are converted to token
// offsets here; a span covers every token it overlaps. If `inventory` is
// non-empty, span frames outside it are ingestion errors.
Corpus read_corpus_jsonl(const std::string& path,
                         const std::vector<std::string>& inventory = {},
                         WarningLog* warnings = nullptr);
void write_corpus_jsonl(const Corpus& corpus, const std::string& path);

// TSV: entity<TAB>alias1,alias2,...  Aliases are tokenized and lowercased.
std::vector<EntityAliasSet> read_alias_sets_tsv(const std::string& path);

// Hook for callers that want alias sets produced by an external recognizer
// instead of a config file. Nothing in this library requires it; entity
// matching itself stays deterministic either way.
using EntityRecognizer =
    std::function<std::vector<EntityAliasSet>(const Corpus&)>;

}  // namespace newsframes
