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

#include "newsframes/embedding.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "newsframes/rng.h"

namespace newsframes {

namespace {

constexpr std::size_t kUnigramTableSize = 1u << 20;
constexpr double kUnigramPower = 0.75;
constexpr double kMaxExp = 30.0;

double sigmoid(double x) {
  if (x > kMaxExp) return 1.0;
  if (x < -kMaxExp) return 0.0;
  return 1.0 / (1.0 + std::exp(-x));
}

struct TrainState {
  const std::vector<std::vector<int>>* sentences;
  std::vector<double>* syn0;
  std::vector<double>* syn1;
  std::vector<std::uint32_t>* unigram_table;
  const CbowConfig* config;
  long long total_tokens;
  std::atomic<long long> processed{0};
};

void train_worker(TrainState& state, int worker_id) {
  const CbowConfig& cfg = *state.config;
  const int dim = cfg.dimension;
  SplitMix64 rng(cfg.seed + 0x9e3779b9ULL * static_cast<std::uint64_t>(worker_id));
  std::vector<double> hidden(dim);
  std::vector<double> hidden_err(dim);
  std::vector<int> context;

  double lr = cfg.initial_lr;
  long long since_update = 0;
  const double total_work =
      static_cast<double>(cfg.epochs) * static_cast<double>(state.total_tokens) + 1.0;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (std::size_t s = worker_id; s < state.sentences->size();
         s += static_cast<std::size_t>(cfg.workers)) {
      const std::vector<int>& sentence = (*state.sentences)[s];
      const int len = static_cast<int>(sentence.size());
      for (int pos = 0; pos < len; ++pos) {
        if (++since_update >= 1000) {
          state.processed += since_update;
          since_update = 0;
          const double remaining =
              1.0 - static_cast<double>(state.processed.load()) / total_work;
          lr = cfg.initial_lr * std::max(remaining, 1e-4);
        }
        // Dynamic window: an effective radius in [1, window].
        const int shrink = static_cast<int>(rng.next_below(
            static_cast<std::uint64_t>(cfg.window)));
        context.clear();
        for (int off = shrink - cfg.window; off <= cfg.window - shrink; ++off) {
          if (off == 0) continue;
          const int j = pos + off;
          if (j < 0 || j >= len) continue;
          context.push_back(sentence[j]);
        }
        if (context.empty()) continue;

        const int word = sentence[pos];
        std::fill(hidden.begin(), hidden.end(), 0.0);
        for (int ctx : context) {
          const double* v = state.syn0->data() + static_cast<std::size_t>(ctx) * dim;
          for (int d = 0; d < dim; ++d) hidden[d] += v[d];
        }
        const double inv_ctx = 1.0 / static_cast<double>(context.size());
        for (int d = 0; d < dim; ++d) hidden[d] *= inv_ctx;
        std::fill(hidden_err.begin(), hidden_err.end(), 0.0);

        for (int k = 0; k <= cfg.negatives; ++k) {
          int target;
          double label;
          if (k == 0) {
            target = word;
            label = 1.0;
          } else {
            target = static_cast<int>((*state.unigram_table)[rng.next_below(
                kUnigramTableSize)]);
            if (target == word) continue;
            label = 0.0;
          }
          double* out = state.syn1->data() + static_cast<std::size_t>(target) * dim;
          double f = 0.0;
          for (int d = 0; d < dim; ++d) f += hidden[d] * out[d];
          const double g = (label - sigmoid(f)) * lr;
          for (int d = 0; d < dim; ++d) {
            hidden_err[d] += g * out[d];
            out[d] += g * hidden[d];
          }
        }
        for (int ctx : context) {
          double* v = state.syn0->data() + static_cast<std::size_t>(ctx) * dim;
          for (int d = 0; d < dim; ++d) v[d] += hidden_err[d];
        }
      }
    }
  }
  state.processed += since_update;
}

}  // namespace

void EmbeddingSpace::rebuild_index() {
  rank_.clear();
  rank_.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    rank_.emplace(words[i], static_cast<int>(i));
}

double cosine_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("cosine distance of mismatched dimensions");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0)
    throw std::invalid_argument("cosine distance of a zero vector");
  return 1.0 - dot / (std::sqrt(nu) * std::sqrt(nv));
}

void ExpansionConfig::validate() const {
  if (max_neighbors < 1)
    throw std::invalid_argument("expansion K must be >= 1");
  if (vocab_cap < 1) throw std::invalid_argument("vocab cap must be >= 1");
  if (distance_threshold < 0.0 || distance_threshold > 2.0)
    throw std::invalid_argument("distance threshold must lie in [0, 2]");
}

EmbeddingSpace train_cbow(const Corpus& corpus, const CbowConfig& config) {
  if (config.dimension < 2)
    throw std::invalid_argument("embedding dimension must be >= 2");
  if (config.window < 1) throw std::invalid_argument("window must be >= 1");
  if (config.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (corpus.empty()) throw std::runtime_error("cannot train on an empty corpus");

  // Vocabulary: words at or above min_count, ranked by count descending.
  std::unordered_map<std::string, long long> counts;
  for (const auto& doc : corpus.docs())
    for (const auto& token : doc.tokens) ++counts[token];
  std::vector<std::pair<std::string, long long>> vocab(counts.begin(),
                                                       counts.end());
  std::erase_if(vocab, [&](const auto& e) { return e.second < config.min_count; });
  std::sort(vocab.begin(), vocab.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (vocab.empty())
    throw std::runtime_error("no word reaches the minimum count cutoff");

  EmbeddingSpace space;
  space.dimension = config.dimension;
  space.words.reserve(vocab.size());
  for (const auto& [word, count] : vocab) space.words.push_back(word);
  space.rebuild_index();

  std::vector<std::vector<int>> sentences;
  sentences.reserve(corpus.size());
  long long total_tokens = 0;
  for (const auto& doc : corpus.docs()) {
    std::vector<int> ids;
    ids.reserve(doc.tokens.size());
    for (const auto& token : doc.tokens) {
      const int r = space.find(token);
      if (r >= 0) ids.push_back(r);
    }
    total_tokens += static_cast<long long>(ids.size());
    if (!ids.empty()) sentences.push_back(std::move(ids));
  }
  if (total_tokens < config.window)
    throw std::runtime_error("corpus is smaller than the context window");

  // Negative-sampling table over counts^0.75.
  std::vector<std::uint32_t> unigram_table(kUnigramTableSize);
  double pow_sum = 0.0;
  for (const auto& [word, count] : vocab)
    pow_sum += std::pow(static_cast<double>(count), kUnigramPower);
  std::size_t w = 0;
  double cumulative =
      std::pow(static_cast<double>(vocab[0].second), kUnigramPower) / pow_sum;
  for (std::size_t i = 0; i < kUnigramTableSize; ++i) {
    unigram_table[i] = static_cast<std::uint32_t>(w);
    const double frac =
        static_cast<double>(i + 1) / static_cast<double>(kUnigramTableSize);
    if (frac > cumulative && w + 1 < vocab.size()) {
      ++w;
      cumulative +=
          std::pow(static_cast<double>(vocab[w].second), kUnigramPower) / pow_sum;
    }
  }

  const std::size_t matrix_size =
      vocab.size() * static_cast<std::size_t>(config.dimension);
  std::vector<double> syn0(matrix_size);
  std::vector<double> syn1(matrix_size, 0.0);
  SplitMix64 init_rng(config.seed);
  for (auto& v : syn0)
    v = (init_rng.next_unit() - 0.5) / static_cast<double>(config.dimension);

  TrainState state;
  state.sentences = &sentences;
  state.syn0 = &syn0;
  state.syn1 = &syn1;
  state.unigram_table = &unigram_table;
  state.config = &config;
  state.total_tokens = total_tokens;

  if (config.workers == 1) {
    train_worker(state, 0);
  } else {
    // Lock-free updates on the shared matrices; ordering across workers is
    // unspecified, so multi-worker runs are not reproducible.
    std::vector<std::thread> threads;
    threads.reserve(config.workers);
    for (int t = 0; t < config.workers; ++t)
      threads.emplace_back(train_worker, std::ref(state), t);
    for (auto& t : threads) t.join();
  }

  space.data = std::move(syn0);
  return space;
}

EmbeddingSpace load_embeddings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embeddings file '" + path + "'");
  EmbeddingSpace space;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_row = true;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    std::vector<double> values;
    double v;
    while (row >> v) values.push_back(v);
    if (line_no == 1 && values.size() == 1 && !word.empty() &&
        word.find_first_not_of("0123456789") == std::string::npos) {
      continue;  // "<vocab> <dimension>" header
    }
    if (values.empty())
      throw std::runtime_error("embeddings file '" + path + "' line " +
                               std::to_string(line_no) + ": no vector values");
    for (double value : values)
      if (!std::isfinite(value))
        throw std::runtime_error("embeddings file '" + path + "' line " +
                                 std::to_string(line_no) +
                                 ": non-finite vector value");
    if (first_data_row) {
      space.dimension = static_cast<int>(values.size());
      first_data_row = false;
    } else if (static_cast<int>(values.size()) != space.dimension) {
      throw std::runtime_error(
          "embeddings file '" + path + "' line " + std::to_string(line_no) +
          ": expected " + std::to_string(space.dimension) + " values, got " +
          std::to_string(values.size()));
    }
    if (!seen.insert(word).second)
      throw std::runtime_error("embeddings file '" + path + "' line " +
                               std::to_string(line_no) + ": duplicate word '" +
                               word + "'");
    space.words.push_back(word);
    space.data.insert(space.data.end(), values.begin(), values.end());
  }
  if (space.words.empty())
    throw std::runtime_error("embeddings file '" + path + "' contains no vectors");
  space.rebuild_index();
  return space;
}

void write_embeddings(const EmbeddingSpace& space, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write embeddings file '" + path + "'");
  out << space.words.size() << ' ' << space.dimension << '\n';
  for (std::size_t i = 0; i < space.words.size(); ++i) {
    out << space.words[i];
    const auto v = space.vec(i);
    for (double value : v) out << ' ' << format_general(value, 17);
    out << '\n';
  }
}

ScoredLexicon expand_lexicon(const ScoredLexicon& lexicon,
                             const EmbeddingSpace& space,
                             const ExpansionConfig& cfg) {
  cfg.validate();
  const std::size_t cap =
      std::min<std::size_t>(space.size(), static_cast<std::size_t>(cfg.vocab_cap));
  const int dim = space.dimension;

  const auto is_zero = [&](std::size_t rank) {
    const auto v = space.vec(rank);
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };

  // Centroid: vector sum over the lexicon words found in the capped vocab.
  std::vector<double> centroid(dim, 0.0);
  std::vector<std::size_t> seed_ranks;
  for (const auto& entry : lexicon.entries) {
    const int r = space.find(entry.word);
    if (r < 0 || static_cast<std::size_t>(r) >= cap || is_zero(r)) continue;
    const auto v = space.vec(r);
    for (int d = 0; d < dim; ++d) centroid[d] += v[d];
    seed_ranks.push_back(static_cast<std::size_t>(r));
  }
  if (seed_ranks.empty())
    throw std::runtime_error("frame '" + lexicon.frame +
                             "': no lexicon word is in the embedding vocabulary");
  if (std::all_of(centroid.begin(), centroid.end(),
                  [](double x) { return x == 0.0; }))
    throw std::runtime_error("frame '" + lexicon.frame +
                             "': lexicon centroid is the zero vector");

  struct Candidate {
    std::size_t rank;
    double distance;
  };
  std::vector<Candidate> candidates;
  for (std::size_t r = 0; r < cap; ++r) {
    if (is_zero(r)) continue;
    const double d = cosine_distance(space.vec(r), centroid);
    if (d <= cfg.distance_threshold) candidates.push_back({r, d});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.rank < b.rank;
            });
  if (candidates.size() > static_cast<std::size_t>(cfg.max_neighbors))
    candidates.resize(static_cast<std::size_t>(cfg.max_neighbors));

  std::set<std::size_t> kept;
  for (const auto& c : candidates) kept.insert(c.rank);
  if (cfg.mode == ExpansionConfig::Mode::augment)
    for (std::size_t r : seed_ranks) kept.insert(r);

  ScoredLexicon out;
  out.frame = lexicon.frame;
  out.provenance = Provenance::expanded;
  out.entries.reserve(kept.size());
  for (std::size_t r : kept)
    out.entries.push_back(
        {space.words[r], 1.0 - cosine_distance(space.vec(r), centroid)});
  std::sort(out.entries.begin(), out.entries.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.word < b.word;
            });
  return out;
}

}  // namespace newsframes
