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
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "newsframes/corpus.h"
#include "newsframes/lexicon.h"

namespace newsframes {

// Dense word vectors; words are stored in frequency-rank order (rank 0 is the
// most frequent word). Immutable after construction.
struct EmbeddingSpace {
  int dimension = 0;
  std::vector<std::string> words;  // index == frequency rank
  std::vector<double> data;        // row-major, words.size() x dimension

  std::span<const double> vec(std::size_t rank) const {
    return {data.data() + rank * static_cast<std::size_t>(dimension),
            static_cast<std::size_t>(dimension)};
  }
  // Frequency rank of `word`, or -1 when absent.
  int find(const std::string& word) const {
    const auto it = rank_.find(word);
    return it == rank_.end() ? -1 : it->second;
  }
  std::size_t size() const { return words.size(); }
  void rebuild_index();

 private:
  std::unordered_map<std::string, int> rank_;
};

// 1 - (u.v)/(|u||v|). Zero-length inputs are rejected; callers exclude
// zero vectors from neighbor candidacy.
double cosine_distance(std::span<const double> u, std::span<const double> v);

struct ExpansionConfig {
  int max_neighbors = 500;         // K
  double distance_threshold = 0.4; // t, cosine distance in [0, 2]
  enum class Mode { augment, replace } mode = Mode::augment;
  int vocab_cap = 50000;

  void validate() const;
};

struct CbowConfig {
  int dimension = 200;
  int window = 5;
  int epochs = 5;
  int negatives = 5;
  double initial_lr = 0.025;
  int min_count = 5;
  int workers = 1;  // 1 => bit-reproducible for a fixed seed
  std::uint64_t seed = 1;
};

// Continuous-bag-of-words with negative sampling over the corpus tokens.
// Words below min_count are dropped from the vocabulary before training.
EmbeddingSpace train_cbow(const Corpus& corpus, const CbowConfig& config);

// Text format: optional "<vocab> <dimension>" first line, then
// "word v1 v2 ... vd" per line. Dimension is inferred from the first data
// row; frequency rank follows file order.
EmbeddingSpace load_embeddings(const std::string& path);
void write_embeddings(const EmbeddingSpace& space, const std::string& path);

// Centroid-based query expansion. The candidate vocabulary is the
// cfg.vocab_cap most frequent words; the centroid is the vector sum of the
// lexicon words found there. Up to K nearest candidates within the distance
// threshold are returned, scored 1 - cosine distance. augment keeps the
// lexicon words found in the capped vocabulary alongside the neighbors;
// replace keeps the neighbors only.
ScoredLexicon expand_lexicon(const ScoredLexicon& lexicon,
                             const EmbeddingSpace& space,
                             const ExpansionConfig& cfg);

}  // namespace newsframes
