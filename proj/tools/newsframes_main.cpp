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

// Batch front end: one subcommand per pipeline stage. Configuration comes
// from an INI-style file ([section] + key = value) and every key can be
// overridden on the command line as --section.key=value. Reports are
// deterministic for a fixed config and seeds; each run also writes a
// machine-readable manifest with input/output content hashes.

#include <algorithm>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "newsframes/corpus.h"
#include "newsframes/embedding.h"
#include "newsframes/evaluation.h"
#include "newsframes/framing.h"
#include "newsframes/lexicon.h"
#include "newsframes/projection.h"
#include "newsframes/salience.h"
#include "newsframes/timeseries.h"

namespace fs = std::filesystem;
using namespace newsframes;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char kUsage[] =
    "usage: newsframes <command> [--config=FILE] [--section.key=value ...]\n"
    "\n"
    "commands:\n"
    "  induce          induce base frame lexicons from an annotated corpus\n"
    "  project         project base lexicons into a target language\n"
    "  assign          assign frames to every document\n"
    "  coverage        entity coverage time series (article and word level)\n"
    "  correlate       Pearson correlation between two series\n"
    "  granger         Granger-causality test between two series\n"
    "  npmi            frame-entity association scores\n"
    "  agendalex       words gaining salience after downturns\n"
    "  eval-primary    k-fold primary-frame accuracy\n"
    "  eval-frames     k-fold per-frame F1 vs. a logistic baseline\n"
    "  intruder-gen    generate intruder-detection word sets\n"
    "  intruder-score  score annotator responses to intruder sets\n";

// --------------------------------------------------------------------------
// configuration

class Config {
 public:
  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::string line;
    std::string section;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      if (line.empty() || line[0] == '#' || line[0] == ';') continue;
      if (line.front() == '[' && line.back() == ']') {
        section = line.substr(1, line.size() - 2);
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": expected key = value");
      std::string key = line.substr(0, eq);
      std::string value = line.substr(eq + 1);
      const auto trim = [](std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
      };
      trim(key);
      trim(value);
      if (!section.empty()) key = section + "." + key;
      values_[key] = value;
    }
  }

  void set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    const std::string value = it == values_.end() ? fallback : it->second;
    used_[key] = value;
    return value;
  }

  std::string require(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end() || it->second.empty())
      throw std::runtime_error("missing required config key '" + key + "'");
    used_[key] = it->second;
    return it->second;
  }

  int get_int(const std::string& key, int fallback) const {
    const std::string raw = get(key, std::to_string(fallback));
    try {
      return std::stoi(raw);
    } catch (const std::exception&) {
      throw std::runtime_error("config key '" + key + "' is not an integer: '" +
                               raw + "'");
    }
  }

  double get_double(const std::string& key, double fallback) const {
    const std::string raw = get(key, format_general(fallback, 17));
    try {
      return std::stod(raw);
    } catch (const std::exception&) {
      throw std::runtime_error("config key '" + key + "' is not a number: '" +
                               raw + "'");
    }
  }

  bool get_bool(const std::string& key, bool fallback) const {
    const std::string raw = get(key, fallback ? "true" : "false");
    if (raw == "true" || raw == "1" || raw == "yes") return true;
    if (raw == "false" || raw == "0" || raw == "no") return false;
    throw std::runtime_error("config key '" + key + "' is not a boolean: '" +
                             raw + "'");
  }

  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const {
    const std::string raw = get(key, std::to_string(fallback));
    try {
      return std::stoull(raw);
    } catch (const std::exception&) {
      throw std::runtime_error("config key '" + key + "' is not a seed: '" +
                               raw + "'");
    }
  }

  const std::map<std::string, std::string>& used() const { return used_; }

 private:
  std::map<std::string, std::string> values_;
  mutable std::map<std::string, std::string> used_;
};

// --------------------------------------------------------------------------
// manifest

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot hash missing file '" + path + "'");
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  char buffer[1 << 14];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buffer[i]);
      h *= 1099511628211ULL;
    }
    if (got < static_cast<std::streamsize>(sizeof(buffer))) break;
  }
  char hex[24];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

class RunManifest {
 public:
  RunManifest(std::string command, fs::path out_dir)
      : command_(std::move(command)), out_dir_(std::move(out_dir)) {}

  void input(const std::string& path) { inputs_[path] = file_hash(path); }
  void output(const std::string& path) { outputs_[path] = file_hash(path); }
  void note(const std::string& key, const nlohmann::json& value) {
    notes_[key] = value;
  }

  void write(const Config& config, const WarningLog& warnings) const {
    nlohmann::json manifest;
    manifest["command"] = command_;
    manifest["parameters"] = config.used();
    manifest["inputs"] = inputs_;
    manifest["outputs"] = outputs_;
    manifest["warnings"] = warnings;
    for (const auto& [key, value] : notes_) manifest[key] = value;
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    manifest["generated_at"] = stamp;
    std::ofstream out(out_dir_ / ("manifest_" + command_ + ".json"));
    out << manifest.dump(2) << '\n';
  }

 private:
  std::string command_;
  fs::path out_dir_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> outputs_;
  std::map<std::string, nlohmann::json> notes_;
};

// --------------------------------------------------------------------------
// shared loading helpers

std::vector<std::string> frame_inventory(const Config& config) {
  const std::string raw = config.get("corpus.frames", "");
  if (raw.empty()) return default_frame_inventory();
  std::vector<std::string> frames;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    const auto comma = raw.find(',', pos);
    std::string frame = raw.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto b = frame.find_first_not_of(' ');
    const auto e = frame.find_last_not_of(' ');
    if (b != std::string::npos) frames.push_back(frame.substr(b, e - b + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (frames.empty()) throw std::runtime_error("corpus.frames is empty");
  return frames;
}

Corpus load_corpus(const Config& config, RunManifest& manifest,
                   WarningLog* warnings, const std::string& key = "corpus.path") {
  const std::string path = config.require(key);
  manifest.input(path);
  return read_corpus_jsonl(path, frame_inventory(config), warnings);
}

EntityAliasSet load_entity(const Config& config, RunManifest& manifest) {
  const std::string path = config.require("corpus.aliases");
  manifest.input(path);
  const auto sets = read_alias_sets_tsv(path);
  if (sets.empty()) throw std::runtime_error("alias file has no entries");
  const std::string entity = config.get("corpus.entity", sets[0].entity);
  for (const auto& set : sets)
    if (set.entity == entity) return set;
  throw std::runtime_error("entity '" + entity + "' not found in alias file");
}

std::vector<ScoredLexicon> load_lexicons(const Config& config,
                                         RunManifest& manifest) {
  const std::string dir = config.require("lexicons.dir");
  const std::string stage = config.get("lexicons.stage", "base");
  parse_provenance(stage);  // validates the name
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(stage + "_", 0) == 0 && name.ends_with(".tsv"))
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::runtime_error("no '" + stage + "_*.tsv' lexicons in '" + dir + "'");
  std::vector<ScoredLexicon> lexicons;
  for (const auto& file : files) {
    manifest.input(file);
    lexicons.push_back(read_lexicon_tsv(file));
  }
  return lexicons;
}

ExpansionConfig expansion_config(const Config& config) {
  ExpansionConfig cfg;
  cfg.max_neighbors = config.get_int("expansion.k", 500);
  cfg.distance_threshold = config.get_double("expansion.t", 0.4);
  cfg.vocab_cap = config.get_int("expansion.vocab_cap", 50000);
  const std::string mode = config.get("expansion.mode", "augment");
  if (mode == "augment") {
    cfg.mode = ExpansionConfig::Mode::augment;
  } else if (mode == "replace") {
    cfg.mode = ExpansionConfig::Mode::replace;
  } else {
    throw std::runtime_error("expansion.mode must be augment or replace");
  }
  cfg.validate();
  return cfg;
}

EmbeddingSpace load_or_train_embeddings(const Config& config,
                                        const Corpus& target,
                                        RunManifest& manifest) {
  const std::string source = config.get("embedding.source", "train");
  if (source == "load") {
    const std::string path = config.require("embedding.path");
    manifest.input(path);
    return load_embeddings(path);
  }
  if (source != "train")
    throw std::runtime_error("embedding.source must be train or load");
  CbowConfig cbow;
  cbow.dimension = config.get_int("embedding.dimension", 200);
  cbow.window = config.get_int("embedding.window", 5);
  cbow.epochs = config.get_int("embedding.epochs", 5);
  cbow.negatives = config.get_int("embedding.negatives", 5);
  cbow.initial_lr = config.get_double("embedding.learning_rate", 0.025);
  cbow.min_count = config.get_int("embedding.min_count", 5);
  cbow.workers = config.get_int("embedding.workers", 1);
  cbow.seed = config.get_seed("embedding.seed", 1);
  return train_cbow(target, cbow);
}

FrameCountMode count_mode(const Config& config) {
  const std::string raw = config.get("assign.count_mode", "tokens");
  if (raw == "tokens") return FrameCountMode::token_occurrences;
  if (raw == "distinct") return FrameCountMode::distinct_words;
  throw std::runtime_error("assign.count_mode must be tokens or distinct");
}

std::string csv_number(double value) { return format_general(value, 6); }

// --------------------------------------------------------------------------
// per-fold lexicon induction shared by the eval commands

std::vector<ScoredLexicon> induce_lexicons(const Corpus& corpus,
                                           const std::vector<std::string>& frames,
                                           std::size_t size, double df_min,
                                           double df_max, WarningLog* warnings) {
  const DocFrequencyTable df = doc_frequencies(corpus);
  std::vector<ScoredLexicon> lexicons;
  for (const auto& frame : frames) {
    if (frame == kOtherFrame) continue;  // "Other" never gets a lexicon
    try {
      lexicons.push_back(
          build_base_lexicon(frame, pmi_scores(corpus, frame), df, size, df_min,
                             df_max));
    } catch (const std::exception& e) {
      warn(warnings, std::string("skipping frame: ") + e.what());
    }
  }
  if (lexicons.empty())
    throw std::runtime_error("no frame produced a lexicon");
  return lexicons;
}

Corpus subset(const Corpus& corpus, const std::function<bool(const Document&)>&
                                        keep) {
  Corpus out;
  for (const auto& doc : corpus.docs())
    if (keep(doc)) out.add(doc);
  return out;
}

// --------------------------------------------------------------------------
// commands

int cmd_induce(const Config& config, const fs::path& out_dir,
               RunManifest& manifest, WarningLog& warnings) {
  const Corpus corpus = load_corpus(config, manifest, &warnings);
  const auto frames = frame_inventory(config);
  const auto lexicons = induce_lexicons(
      corpus, frames, static_cast<std::size_t>(config.get_int("lexicons.size", 250)),
      config.get_double("lexicons.df_min", kDefaultDfMin),
      config.get_double("lexicons.df_max", kDefaultDfMax), &warnings);
  for (const auto& lexicon : lexicons) {
    const std::string path =
        (out_dir / ("base_" + slugify(lexicon.frame) + ".tsv")).string();
    write_lexicon_tsv(lexicon, path);
    manifest.output(path);
  }
  return 0;
}

int cmd_project(const Config& config, const fs::path& out_dir,
                RunManifest& manifest, WarningLog& warnings) {
  const auto bases = load_lexicons(config, manifest);
  const std::string dict_path = config.require("dictionary.path");
  manifest.input(dict_path);
  const auto dictionary = read_dictionary_tsv(dict_path, &warnings);
  const Corpus target = load_corpus(config, manifest, &warnings, "target.path");
  const auto target_df = doc_frequencies(target);
  const auto space = load_or_train_embeddings(config, target, manifest);
  const auto cfg = expansion_config(config);

  const std::string save_path = config.get("embedding.save", "");
  if (!save_path.empty()) {
    write_embeddings(space, save_path);
    manifest.output(save_path);
  }

  std::vector<ScoredLexicon> finals;
  for (const auto& base : bases) {
    if (base.provenance != Provenance::base)
      throw std::runtime_error("projection expects base lexicons; '" +
                               base.frame + "' is " +
                               provenance_name(base.provenance));
    finals.push_back(
        project_lexicon(base, dictionary, space, target_df, cfg, &warnings));
    const std::string path =
        (out_dir / ("final_" + slugify(base.frame) + ".tsv")).string();
    write_lexicon_tsv(finals.back(), path);
    manifest.output(path);
  }

  // Cross-frame overlap is reported, never removed.
  nlohmann::json overlap;
  for (std::size_t i = 0; i < finals.size(); ++i)
    for (std::size_t j = i + 1; j < finals.size(); ++j)
      overlap[finals[i].frame + " / " + finals[j].frame] =
          lexicon_overlap_fraction(finals[i], finals[j]);
  manifest.note("lexicon_overlap", overlap);
  return 0;
}

int cmd_assign(const Config& config, const fs::path& out_dir,
               RunManifest& manifest, WarningLog& warnings) {
  const Corpus corpus = load_corpus(config, manifest, &warnings);
  const auto lexicons = load_lexicons(config, manifest);
  const int threshold = config.get_int("assign.threshold", 3);
  const FrameCountMode mode = count_mode(config);

  const std::string path = (out_dir / "assignments.jsonl").string();
  std::ofstream out(path);
  for (const auto& doc : corpus.docs()) {
    const auto assignment = assign_frames(doc, lexicons, threshold, mode);
    nlohmann::json record;
    record["doc_id"] = assignment.doc_id;
    record["primary"] = assignment.primary;
    record["present"] = assignment.present;
    record["counts"] = assignment.counts;
    out << record.dump() << '\n';
  }
  out.close();
  manifest.output(path);
  return 0;
}

int cmd_coverage(const Config& config, const fs::path& out_dir,
                 RunManifest& manifest, WarningLog& warnings) {
  const Corpus corpus = load_corpus(config, manifest, &warnings);
  const auto entity = load_entity(config, manifest);
  const Granularity g =
      parse_granularity(config.get("coverage.granularity", "month"));
  const std::size_t min_mentions =
      static_cast<std::size_t>(config.get_int("coverage.min_mentions", 2));
  const auto slices = slice_corpus(corpus, g);

  const auto article =
      article_coverage(slices, corpus, entity, min_mentions, &warnings);
  const auto word = word_coverage(slices, corpus, entity, &warnings);
  const std::string article_path = (out_dir / "coverage_article.csv").string();
  const std::string word_path = (out_dir / "coverage_word.csv").string();
  write_series_csv(article, article_path);
  write_series_csv(word, word_path);
  manifest.output(article_path);
  manifest.output(word_path);
  return 0;
}

// Intersect two series on their common periods so externally supplied
// indicators do not need to match the corpus range exactly.
std::pair<TimeSeries, TimeSeries> align_series(const TimeSeries& a,
                                               const TimeSeries& b) {
  if (a.granularity != b.granularity)
    throw std::runtime_error("series granularities differ; cannot align");
  const Period start =
      std::max(a.points.front().period, b.points.front().period);
  const Period end = std::min(a.points.back().period, b.points.back().period);
  TimeSeries out_a, out_b;
  out_a.granularity = a.granularity;
  out_b.granularity = b.granularity;
  for (const auto& p : a.points)
    if (start <= p.period && p.period <= end) out_a.points.push_back(p);
  for (const auto& p : b.points)
    if (start <= p.period && p.period <= end) out_b.points.push_back(p);
  if (out_a.points.empty())
    throw std::runtime_error("series share no overlapping periods");
  return {out_a, out_b};
}

std::pair<TimeSeries, TimeSeries> load_series_pair(const Config& config,
                                                   RunManifest& manifest) {
  const std::string path_a = config.require("series.a");
  const std::string path_b = config.require("series.b");
  manifest.input(path_a);
  manifest.input(path_b);
  auto [a, b] = align_series(read_series_csv(path_a), read_series_csv(path_b));
  if (config.get_bool("series.percent_change", false)) {
    a = percent_change(a);
    b = percent_change(b);
  }
  return {a, b};
}

int cmd_correlate(const Config& config, const fs::path& out_dir,
                  RunManifest& manifest, WarningLog& warnings) {
  (void)warnings;
  const auto [a, b] = load_series_pair(config, manifest);
  const double r = pearson(a, b);
  const std::string path = (out_dir / "correlate.csv").string();
  std::ofstream out(path);
  out << "statistic,value\n";
  out << "pearson," << csv_number(r) << '\n';
  out << "n_periods," << a.points.size() << '\n';
  out << "first_period," << a.points.front().period.str() << '\n';
  out << "last_period," << a.points.back().period.str() << '\n';
  out.close();
  manifest.output(path);
  return 0;
}

void write_granger_rows(std::ofstream& out, const std::string& direction,
                        const GrangerResult& result) {
  for (std::size_t i = 0; i < result.names.size(); ++i) {
    out << direction << ',' << result.names[i] << ','
        << csv_number(result.coefficients[i]) << ','
        << csv_number(result.std_errors[i]) << ','
        << csv_number(result.t_stats[i]) << ','
        << csv_number(result.p_values[i]) << '\n';
  }
  out << direction << ",n_obs," << result.n_obs << ",,,\n";
  out << direction << ",residual_variance,"
      << csv_number(result.residual_variance) << ",,,\n";
}

int cmd_granger(const Config& config, const fs::path& out_dir,
                RunManifest& manifest, WarningLog& warnings) {
  const auto [target, predictor] = load_series_pair(config, manifest);
  const int own_lags = config.get_int("granger.own_lags", 1);
  const int predictor_lags = config.get_int("granger.predictor_lags", 1);
  const bool intercept = config.get_bool("granger.intercept", true);

  const auto forward = granger_test(target, predictor, own_lags, predictor_lags,
                                    intercept, &warnings);
  const auto reverse = granger_test(predictor, target, own_lags, predictor_lags,
                                    intercept, &warnings);
  const std::string path = (out_dir / "granger.csv").string();
  std::ofstream out(path);
  out << "direction,term,coefficient,std_error,t_stat,p_value\n";
  write_granger_rows(out, "forward", forward);
  write_granger_rows(out, "reverse", reverse);
  out.close();
  manifest.output(path);
  return 0;
}

int cmd_npmi(const Config& config, const fs::path& out_dir,
             RunManifest& manifest, WarningLog& warnings) {
  const Corpus corpus = load_corpus(config, manifest, &warnings);
  const auto entity = load_entity(config, manifest);
  const auto lexicons = load_lexicons(config, manifest);
  const int threshold = config.get_int("assign.threshold", 3);
  const FrameCountMode mode = count_mode(config);
  const auto focus = entity_focus(
      entity, static_cast<std::size_t>(config.get_int("npmi.min_mentions", 2)));

  const std::string path = (out_dir / "npmi.csv").string();
  std::ofstream out(path);
  out << "frame,npmi\n";
  for (const auto& lexicon : lexicons) {
    try {
      const double value =
          npmi(corpus, focus, lexicon.frame, lexicons, threshold, mode);
      out << lexicon.frame << ',' << csv_number(value) << '\n';
    } catch (const std::runtime_error& e) {
      warn(&warnings, std::string("npmi skipped: ") + e.what());
    }
  }
  out.close();
  manifest.output(path);
  return 0;
}

int cmd_agendalex(const Config& config, const fs::path& out_dir,
                  RunManifest& manifest, WarningLog& warnings) {
  const Corpus corpus = load_corpus(config, manifest, &warnings);
  const auto entity = load_entity(config, manifest);
  const auto lexicons = load_lexicons(config, manifest);
  const std::string indicator_path = config.require("indicator.path");
  manifest.input(indicator_path);
  const TimeSeries indicator = read_series_csv(indicator_path);

  const auto partition =
      partition_months(indicator, config.get_double("agendalex.decile", 0.10));
  const auto prior = corpus_scaled_prior(
      corpus, config.get_double("agendalex.prior_scale", 500.0));
  const auto focus = entity_focus(
      entity,
      static_cast<std::size_t>(config.get_int("agendalex.min_mentions", 2)));
  const int threshold = config.get_int("assign.threshold", 3);
  const FrameCountMode mode = count_mode(config);
  const std::size_t top_n =
      static_cast<std::size_t>(config.get_int("agendalex.top_n", 500));

  std::unordered_map<std::string, FrameAssignment> assignments;
  for (const auto& doc : corpus.docs())
    assignments[doc.id] = assign_frames(doc, lexicons, threshold, mode);

  const std::string only = config.get("agendalex.frame", "");
  const auto slices = slice_corpus(corpus, Granularity::month);
  for (const auto& lexicon : lexicons) {
    if (!only.empty() && lexicon.frame != only) continue;
    const auto result = build_agendalex_scored(
        lexicon.frame, corpus, assignments, partition, focus, prior, top_n);

    ScoredLexicon agenda;
    agenda.frame = lexicon.frame;
    agenda.provenance = Provenance::final_stage;
    for (const auto& word : result.words)
      agenda.entries.push_back({word, result.rising_z.at(word)});
    std::sort(agenda.entries.begin(), agenda.entries.end(),
              [](const LexiconEntry& a, const LexiconEntry& b) {
                if (a.score != b.score) return a.score > b.score;
                return a.word < b.word;
              });
    const std::string slug = slugify(lexicon.frame);
    const std::string lex_path =
        (out_dir / ("agendalex_" + slug + ".tsv")).string();
    write_lexicon_tsv(agenda, lex_path);
    manifest.output(lex_path);

    const auto series =
        lexicon_frequency_series(result.words, slices, corpus, focus, &warnings);
    const std::string series_path =
        (out_dir / ("agendalex_series_" + slug + ".csv")).string();
    write_series_csv(series, series_path);
    manifest.output(series_path);
  }
  return 0;
}

int cmd_eval_primary(const Config& config, const fs::path& out_dir,
                     RunManifest& manifest, WarningLog& warnings) {
  const Corpus corpus = load_corpus(config, manifest, &warnings);
  for (const auto& doc : corpus.docs())
    if (doc.gold_primary.empty())
      throw std::runtime_error("document '" + doc.id +
                               "' has no gold 'primary' field");
  const auto frames = frame_inventory(config);
  const int k = config.get_int("eval.folds", 10);
  const std::uint64_t seed = config.get_seed("eval.seed", 1);
  const std::size_t size =
      static_cast<std::size_t>(config.get_int("lexicons.size", 250));
  const double df_min = config.get_double("lexicons.df_min", kDefaultDfMin);
  const double df_max = config.get_double("lexicons.df_max", kDefaultDfMax);
  const int threshold = config.get_int("assign.threshold", 3);
  const FrameCountMode mode = count_mode(config);

  std::vector<std::string> ids;
  for (const auto& doc : corpus.docs()) ids.push_back(doc.id);
  const auto split = kfold_split(ids, k, seed);

  const std::string path = (out_dir / "eval_primary.csv").string();
  std::ofstream out(path);
  out << "fold,n_docs,accuracy\n";
  std::map<std::string, std::string> pooled_predictions, pooled_gold;
  for (int fold = 0; fold < k; ++fold) {
    const Corpus train = subset(corpus, [&](const Document& d) {
      return split.assignment.at(d.id) != fold;
    });
    const Corpus test = subset(corpus, [&](const Document& d) {
      return split.assignment.at(d.id) == fold;
    });
    const auto lexicons =
        induce_lexicons(train, frames, size, df_min, df_max, &warnings);
    std::map<std::string, std::string> predictions, gold;
    for (const auto& doc : test.docs()) {
      predictions[doc.id] = assign_frames(doc, lexicons, threshold, mode).primary;
      gold[doc.id] = doc.gold_primary;
    }
    const double accuracy = eval_primary_accuracy(predictions, gold);
    out << fold << ',' << gold.size() << ',' << csv_number(accuracy) << '\n';
    pooled_predictions.insert(predictions.begin(), predictions.end());
    pooled_gold.insert(gold.begin(), gold.end());
  }
  out << "overall," << pooled_gold.size() << ','
      << csv_number(eval_primary_accuracy(pooled_predictions, pooled_gold))
      << '\n';
  out.close();
  manifest.output(path);
  return 0;
}

int cmd_eval_frames(const Config& config, const fs::path& out_dir,
                    RunManifest& manifest, WarningLog& warnings) {
  const Corpus corpus = load_corpus(config, manifest, &warnings);
  const auto frames = frame_inventory(config);
  const int k = config.get_int("eval.folds", 10);
  const std::uint64_t seed = config.get_seed("eval.seed", 1);
  const std::size_t size =
      static_cast<std::size_t>(config.get_int("lexicons.size", 250));
  const double df_min = config.get_double("lexicons.df_min", kDefaultDfMin);
  const double df_max = config.get_double("lexicons.df_max", kDefaultDfMax);
  const int threshold = config.get_int("assign.threshold", 3);
  const FrameCountMode mode = count_mode(config);
  LogRegConfig logreg;
  logreg.max_iterations = config.get_int("eval.baseline_iterations", 500);
  logreg.l2 = config.get_double("eval.baseline_l2", 1e-3);

  std::vector<std::string> ids;
  for (const auto& doc : corpus.docs()) ids.push_back(doc.id);
  const auto split = kfold_split(ids, k, seed);

  std::map<std::string, std::set<std::string>> ours, baseline, gold;
  std::vector<std::string> scorable;  // frames lexicalizable from annotations
  for (const auto& frame : frames)
    if (frame != kOtherFrame) scorable.push_back(frame);

  for (int fold = 0; fold < k; ++fold) {
    const Corpus train = subset(corpus, [&](const Document& d) {
      return split.assignment.at(d.id) != fold;
    });
    const Corpus test = subset(corpus, [&](const Document& d) {
      return split.assignment.at(d.id) == fold;
    });
    const auto lexicons =
        induce_lexicons(train, frames, size, df_min, df_max, &warnings);
    for (const auto& doc : test.docs()) {
      ours[doc.id] = assign_frames(doc, lexicons, threshold, mode).present;
      gold[doc.id] = doc.gold_frames();
    }
    const auto fold_baseline =
        baseline_logreg(train, test, scorable, logreg, &warnings);
    baseline.insert(fold_baseline.begin(), fold_baseline.end());
  }

  const auto ours_scores = eval_all_frames_f1(ours, gold);
  const auto baseline_scores = eval_all_frames_f1(baseline, gold);
  const std::string path = (out_dir / "eval_frames.csv").string();
  std::ofstream out(path);
  out << "frame,ours_precision,ours_recall,ours_f1,"
         "baseline_precision,baseline_recall,baseline_f1\n";
  for (const auto& frame : scorable) {
    const auto none = PrecisionRecallF1{};
    const auto o = ours_scores.count(frame) ? ours_scores.at(frame) : none;
    const auto b =
        baseline_scores.count(frame) ? baseline_scores.at(frame) : none;
    out << frame << ',' << csv_number(o.precision) << ','
        << csv_number(o.recall) << ',' << csv_number(o.f1) << ','
        << csv_number(b.precision) << ',' << csv_number(b.recall) << ','
        << csv_number(b.f1) << '\n';
  }
  out.close();
  manifest.output(path);
  return 0;
}

int cmd_intruder_gen(const Config& config, const fs::path& out_dir,
                     RunManifest& manifest, WarningLog& warnings) {
  (void)warnings;
  const auto lexicons = load_lexicons(config, manifest);
  const int sets_per_frame = config.get_int("intruder.sets_per_frame", 15);
  const std::uint64_t seed = config.get_seed("intruder.seed", 1);
  const auto sets = intruder_generate(lexicons, sets_per_frame, seed);

  const std::string sets_path = (out_dir / "intruder_sets.tsv").string();
  const std::string key_path = (out_dir / "intruder_key.tsv").string();
  std::ofstream sets_out(sets_path);
  std::ofstream key_out(key_path);
  for (const auto& set : sets) {
    sets_out << set.id << '\t' << set.frame << '\t';
    for (std::size_t i = 0; i < set.shuffled.size(); ++i) {
      if (i) sets_out << ',';
      sets_out << set.shuffled[i];
    }
    sets_out << '\n';
    key_out << set.id << '\t' << set.intruder << '\n';
  }
  sets_out.close();
  key_out.close();
  manifest.output(sets_path);
  manifest.output(key_path);
  return 0;
}

std::vector<IntruderSet> read_intruder_sets(const std::string& sets_path,
                                            const std::string& key_path) {
  std::map<std::string, std::string> key;
  {
    std::ifstream in(key_path);
    if (!in) throw std::runtime_error("cannot open key file '" + key_path + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw std::runtime_error("key file: expected set_id<TAB>intruder");
      key[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }
  std::vector<IntruderSet> sets;
  std::ifstream in(sets_path);
  if (!in) throw std::runtime_error("cannot open sets file '" + sets_path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos
                                                : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos)
      throw std::runtime_error("sets file line " + std::to_string(line_no) +
                               ": expected set_id<TAB>frame<TAB>words");
    IntruderSet set;
    set.id = line.substr(0, tab1);
    set.frame = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string words = line.substr(tab2 + 1);
    std::size_t pos = 0;
    while (pos <= words.size()) {
      const auto comma = words.find(',', pos);
      set.shuffled.push_back(words.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    const auto key_it = key.find(set.id);
    if (key_it == key.end())
      throw std::runtime_error("set '" + set.id + "' missing from the key file");
    set.intruder = key_it->second;
    for (const auto& word : set.shuffled)
      if (word != set.intruder) set.members.push_back(word);
    if (set.members.size() + 1 != set.shuffled.size())
      throw std::runtime_error("set '" + set.id +
                               "' does not contain its intruder exactly once");
    sets.push_back(std::move(set));
  }
  return sets;
}

int cmd_intruder_score(const Config& config, const fs::path& out_dir,
                       RunManifest& manifest, WarningLog& warnings) {
  (void)warnings;
  const std::string sets_path = config.require("intruder.sets");
  const std::string key_path = config.require("intruder.key");
  const std::string responses_path = config.require("intruder.responses");
  manifest.input(sets_path);
  manifest.input(key_path);
  manifest.input(responses_path);

  const auto sets = read_intruder_sets(sets_path, key_path);
  std::map<std::string, std::map<std::string, std::string>> responses;
  {
    std::ifstream in(responses_path);
    if (!in)
      throw std::runtime_error("cannot open responses file '" + responses_path +
                               "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      const auto tab1 = line.find('\t');
      const auto tab2 = tab1 == std::string::npos ? std::string::npos
                                                  : line.find('\t', tab1 + 1);
      if (tab2 == std::string::npos)
        throw std::runtime_error(
            "responses line " + std::to_string(line_no) +
            ": expected annotator<TAB>set_id<TAB>chosen_word");
      responses[line.substr(0, tab1)][line.substr(tab1 + 1, tab2 - tab1 - 1)] =
          line.substr(tab2 + 1);
    }
  }

  const auto scores = intruder_score(sets, responses);
  const std::string path = (out_dir / "intruder_scores.csv").string();
  std::ofstream out(path);
  out << "frame,hard,soft,avg\n";
  for (const auto& [frame, s] : scores)
    out << frame << ',' << csv_number(s.hard) << ',' << csv_number(s.soft)
        << ',' << csv_number(s.avg) << '\n';
  out.close();
  manifest.output(path);
  return 0;
}

// --------------------------------------------------------------------------

using CommandFn = int (*)(const Config&, const fs::path&, RunManifest&,
                          WarningLog&);

const std::map<std::string, CommandFn>& command_table() {
  static const std::map<std::string, CommandFn> kCommands = {
      {"induce", cmd_induce},
      {"project", cmd_project},
      {"assign", cmd_assign},
      {"coverage", cmd_coverage},
      {"correlate", cmd_correlate},
      {"granger", cmd_granger},
      {"npmi", cmd_npmi},
      {"agendalex", cmd_agendalex},
      {"eval-primary", cmd_eval_primary},
      {"eval-frames", cmd_eval_frames},
      {"intruder-gen", cmd_intruder_gen},
      {"intruder-score", cmd_intruder_score},
  };
  return kCommands;
}

int run(int argc, char** argv) {
  if (argc < 2) throw UsageError("no command given");
  const std::string command = argv[1];
  if (command == "help" || command == "--help" || command == "-h") {
    std::cout << kUsage;
    return 0;
  }
  const auto it = command_table().find(command);
  if (it == command_table().end())
    throw UsageError("unknown command '" + command + "'");

  Config config;
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--", 0) != 0)
      throw UsageError("unexpected argument '" + arg + "'");
    const auto eq = arg.find('=');
    if (eq == std::string::npos)
      throw UsageError("expected --key=value, got '" + arg + "'");
    const std::string key = arg.substr(2, eq - 2);
    const std::string value = arg.substr(eq + 1);
    if (key == "config") {
      config_path = value;
    } else {
      overrides.emplace_back(key, value);
    }
  }
  if (!config_path.empty()) config.load_file(config_path);
  for (const auto& [key, value] : overrides) config.set(key, value);

  const fs::path out_dir = config.require("output.dir");
  fs::create_directories(out_dir);

  RunManifest manifest(command, out_dir);
  WarningLog warnings;
  const int status = it->second(config, out_dir, manifest, warnings);
  for (const auto& warning : warnings)
    std::cerr << "warning: " << warning << '\n';
  manifest.write(config, warnings);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
