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

#include "newsframes/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace newsframes {

namespace {

// Minimal UTF-8 decoder. Malformed bytes decode to U+FFFD, which is not a
// token character and therefore acts as a separator.
std::uint32_t decode_utf8(std::string_view text, std::size_t& i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  const auto cont = [&](std::size_t k) {
    return k < text.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    const std::uint32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
    i += 2;
    return cp >= 0x80 ? cp : 0xFFFD;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    const std::uint32_t cp = ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) |
                             (byte(i + 2) & 0x3Fu);
    i += 3;
    return cp >= 0x800 ? cp : 0xFFFD;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    const std::uint32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                             ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
    i += 4;
    return cp >= 0x10000 && cp <= 0x10FFFF ? cp : 0xFFFD;
  }
  i += 1;
  return 0xFFFD;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_token_char(std::uint32_t cp) {
  if (cp < 0x80)
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;  // Latin
  if (cp >= 0x370 && cp <= 0x3FF) return true;                     // Greek
  if (cp >= 0x400 && cp <= 0x52F) return true;                     // Cyrillic
  return false;
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++n) decode_utf8(text, i);
  return n;
}

std::uint32_t fold_case(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;    // Latin-1
  // Latin Extended-A pairs upper/lower codepoints.
  if (cp >= 0x100 && cp <= 0x137) return cp % 2 == 0 ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return cp % 2 == 1 ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return cp % 2 == 0 ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;                                    // Ÿ
  if (cp >= 0x179 && cp <= 0x17E) return cp % 2 == 1 ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20; // Greek
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;                // Ё etc.
  return cp;
}

}  // namespace

std::vector<Token> tokenize_with_offsets(std::string_view text) {
  std::vector<Token> out;
  std::string current;
  std::size_t cp_index = 0;
  std::size_t token_begin = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::uint32_t cp = decode_utf8(text, i);
    if (is_token_char(cp)) {
      if (current.empty()) token_begin = cp_index;
      encode_utf8(fold_case(cp), current);
    } else if (!current.empty()) {
      out.push_back({std::move(current), token_begin, cp_index});
      current.clear();
    }
    ++cp_index;
  }
  if (!current.empty()) out.push_back({std::move(current), token_begin, cp_index});
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize_with_offsets(text)) out.push_back(std::move(t.text));
  return out;
}

std::set<std::string> Document::gold_frames() const {
  std::set<std::string> frames;
  for (const auto& span : annotations) frames.insert(span.frame);
  return frames;
}

EntityAliasSet EntityAliasSet::make(
    std::string entity, std::vector<std::vector<std::string>> aliases) {
  if (aliases.empty())
    throw std::invalid_argument("entity '" + entity + "' has no aliases");
  for (auto& alias : aliases) {
    if (alias.empty())
      throw std::invalid_argument("entity '" + entity + "' has an empty alias");
    for (auto& token : alias) {
      const auto folded = tokenize(token);
      if (folded.size() != 1)
        throw std::invalid_argument("alias token '" + token + "' for entity '" +
                                    entity + "' is not a single token");
      token = folded[0];
    }
  }
  return EntityAliasSet{std::move(entity), std::move(aliases)};
}

std::size_t entity_mention_count(const Document& doc,
                                 const EntityAliasSet& aliases) {
  // Longest alias first so that e.g. "white house" beats "white".
  std::vector<const std::vector<std::string>*> by_length;
  by_length.reserve(aliases.aliases.size());
  for (const auto& a : aliases.aliases) by_length.push_back(&a);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [](const auto* a, const auto* b) { return a->size() > b->size(); });

  std::size_t count = 0;
  std::size_t i = 0;
  const auto& tokens = doc.tokens;
  while (i < tokens.size()) {
    bool matched = false;
    for (const auto* alias : by_length) {
      const std::size_t n = alias->size();
      if (i + n > tokens.size()) continue;
      if (std::equal(alias->begin(), alias->end(), tokens.begin() + i)) {
        ++count;
        i += n;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return count;
}

void Corpus::add(Document doc) {
  if (by_id_.count(doc.id) != 0)
    throw std::runtime_error("duplicate document id '" + doc.id + "'");
  by_id_.emplace(doc.id, docs_.size());
  docs_.push_back(std::move(doc));
}

const Document* Corpus::find(const std::string& id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &docs_[it->second];
}

std::vector<TimeSlice> slice_corpus(const Corpus& corpus, Granularity g) {
  std::vector<TimeSlice> slices;
  if (corpus.empty()) return slices;

  std::map<Period, std::vector<std::string>> buckets;
  for (const auto& doc : corpus.docs())
    buckets[Period::of_date(doc.date, g)].push_back(doc.id);

  for (Period p = buckets.begin()->first;; p = p.next()) {
    TimeSlice slice;
    slice.period = p;
    const auto it = buckets.find(p);
    if (it != buckets.end()) slice.documents = it->second;
    slices.push_back(std::move(slice));
    if (p == buckets.rbegin()->first) break;
  }
  return slices;
}

const std::vector<std::string>& default_frame_inventory() {
  static const std::vector<std::string> kFrames = {
      "Capacity and Resources",
      "Crime and Punishment",
      "Cultural Identity",
      "Economic",
      "External Regulation and Reputation",
      "Fairness and Equality",
      "Health and Safety",
      "Legality Constitutionality and Jurisdiction",
      "Morality",
      "Policy Prescription and Evaluation",
      "Political",
      "Public Sentiment",
      "Quality of Life",
      "Security and Defense",
      "Other",
  };
  return kFrames;
}

Corpus read_corpus_jsonl(const std::string& path,
                         const std::vector<std::string>& inventory,
                         WarningLog* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");

  const std::set<std::string> allowed(inventory.begin(), inventory.end());
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("corpus line " + std::to_string(line_no) +
                               ": invalid JSON: " + e.what());
    }
    if (!record.contains("id") || !record["id"].is_string())
      throw std::runtime_error("corpus line " + std::to_string(line_no) +
                               ": missing string field 'id'");
    Document doc;
    doc.id = record["id"].get<std::string>();
    if (!record.contains("date") || !record["date"].is_string())
      throw std::runtime_error("document '" + doc.id + "': missing date");
    try {
      doc.date = Date::parse_iso(record["date"].get<std::string>());
    } catch (const std::exception& e) {
      throw std::runtime_error("document '" + doc.id + "': " + e.what());
    }
    if (!record.contains("text") || !record["text"].is_string())
      throw std::runtime_error("document '" + doc.id + "': missing text");
    const std::string text = record["text"].get<std::string>();
    const std::vector<Token> tokens = tokenize_with_offsets(text);
    if (tokens.empty())
      throw std::runtime_error("document '" + doc.id +
                               "': no tokens after tokenization");
    doc.tokens.reserve(tokens.size());
    for (const auto& t : tokens) doc.tokens.push_back(t.text);
    if (record.contains("lang")) doc.language = record["lang"].get<std::string>();
    if (record.contains("primary"))
      doc.gold_primary = record["primary"].get<std::string>();

    if (record.contains("annotations")) {
      for (const auto& a : record["annotations"]) {
        const std::string frame = a.at("frame").get<std::string>();
        const long long start_char = a.at("start_char").get<long long>();
        const long long end_char = a.at("end_char").get<long long>();
        const std::string annotator =
            a.contains("annotator") ? a.at("annotator").get<std::string>() : "";
        if (!allowed.empty() && allowed.count(frame) == 0)
          throw std::runtime_error("document '" + doc.id + "': frame '" + frame +
                                   "' is not in the configured inventory");
        if (start_char < 0 || end_char <= start_char)
          throw std::runtime_error("document '" + doc.id +
                                   "': invalid span offsets");
        // A span covers every token overlapping [start_char, end_char).
        std::size_t tok_start = tokens.size();
        std::size_t tok_end = 0;
        for (std::size_t t = 0; t < tokens.size(); ++t) {
          if (tokens[t].begin < static_cast<std::size_t>(end_char) &&
              tokens[t].end > static_cast<std::size_t>(start_char)) {
            tok_start = std::min(tok_start, t);
            tok_end = std::max(tok_end, t + 1);
          }
        }
        if (tok_start >= tok_end) {
          warn(warnings, "document '" + doc.id + "': span for frame '" + frame +
                             "' covers no tokens; dropped");
          continue;
        }
        doc.annotations.push_back({frame, tok_start, tok_end, annotator});
      }
    }
    corpus.add(std::move(doc));
  }
  return corpus;
}

void write_corpus_jsonl(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write corpus file '" + path + "'");
  for (const auto& doc : corpus.docs()) {
    nlohmann::json record;
    record["id"] = doc.id;
    record["date"] = doc.date.str();
    std::string text;
    // Token character offsets must survive a round trip, so the rebuilt text
    // is the tokens joined by single spaces.
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      if (i) text.push_back(' ');
      text += doc.tokens[i];
    }
    record["text"] = text;
    if (!doc.language.empty()) record["lang"] = doc.language;
    if (!doc.gold_primary.empty()) record["primary"] = doc.gold_primary;
    if (!doc.annotations.empty()) {
      nlohmann::json spans = nlohmann::json::array();
      // Convert token offsets back to codepoint offsets in the joined text.
      std::vector<std::size_t> starts(doc.tokens.size() + 1, 0);
      std::size_t cp = 0;
      for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
        starts[i] = cp;
        cp += codepoint_count(doc.tokens[i]) + 1;  // token + separating space
      }
      starts[doc.tokens.size()] = cp;
      for (const auto& span : doc.annotations) {
        nlohmann::json s;
        s["frame"] = span.frame;
        s["start_char"] = starts[span.start];
        s["end_char"] = starts[span.end] - 1;  // drop the trailing space
        if (!span.annotator.empty()) s["annotator"] = span.annotator;
        spans.push_back(std::move(s));
      }
      record["annotations"] = std::move(spans);
    }
    out << record.dump() << '\n';
  }
}

std::vector<EntityAliasSet> read_alias_sets_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open alias file '" + path + "'");
  std::vector<EntityAliasSet> sets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("alias file line " + std::to_string(line_no) +
                               ": expected entity<TAB>aliases");
    const std::string entity = line.substr(0, tab);
    std::vector<std::vector<std::string>> aliases;
    std::string field = line.substr(tab + 1);
    std::size_t pos = 0;
    while (pos <= field.size()) {
      const auto comma = field.find(',', pos);
      const std::string alias =
          field.substr(pos, comma == std::string::npos ? std::string::npos
                                                       : comma - pos);
      const auto tokens = tokenize(alias);
      if (tokens.empty())
        throw std::runtime_error("alias file line " + std::to_string(line_no) +
                                 ": alias '" + alias + "' has no tokens");
      aliases.push_back(tokens);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    sets.push_back(EntityAliasSet::make(entity, std::move(aliases)));
  }
  return sets;
}

}  // namespace newsframes
