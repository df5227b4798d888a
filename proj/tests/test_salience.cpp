#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "newsframes/rng.h"
#include "newsframes/salience.h"
#include "support/fixtures.h"

using namespace newsframes;
using newsframes::testing::monthly_series;

TEST_CASE("partition sizes follow the ceil rule") {
  // 20 months -> 19 defined changes -> ceil(1.9) = 2 per decile.
  std::vector<double> values;
  double v = 100.0;
  SplitMix64 rng(3);
  for (int i = 0; i < 20; ++i) {
    values.push_back(v);
    v *= 1.0 + 0.001 * static_cast<double>(i + 1) *
                   (i % 2 == 0 ? 1.0 : -1.0);  // distinct changes
  }
  const auto partition = partition_months(monthly_series("2003-01", values), 0.10);
  CHECK(partition.up_months.size() == 2);
  CHECK(partition.down_months.size() == 2);
}

TEST_CASE("monotone series still yields a bottom decile") {
  // Strictly growing values with distinct growth rates: the "declines" are
  // the months with the smallest (still positive) growth.
  std::vector<double> values = {100};
  const std::vector<double> rates = {0.30, 0.01, 0.25, 0.02, 0.20, 0.03,
                                     0.15, 0.04, 0.10, 0.05, 0.09};
  for (double r : rates) values.push_back(values.back() * (1.0 + r));
  const auto partition = partition_months(monthly_series("2003-01", values), 0.10);
  REQUIRE(partition.down_months.size() == 2);
  // smallest changes are 0.01 (landing on month 2) and 0.02 (month 4)
  CHECK(partition.down_months[0].str() == "2003-03");
  CHECK(partition.down_months[1].str() == "2003-05");
  CHECK(partition.up_months[0].str() == "2003-02");
}

TEST_CASE("successors past the series end are dropped") {
  // Make the largest decline land on the final month.
  std::vector<double> values = {100, 101, 103, 102, 104, 106, 105, 107, 109,
                                108, 110, 60};
  const auto partition = partition_months(monthly_series("2003-01", values), 0.10);
  REQUIRE(partition.down_months.size() == 2);
  CHECK(partition.down_months.back().str() == "2003-12");
  CHECK(partition.after_down.size() == 1);  // successor of 2003-12 is dropped
  CHECK(partition.after_up.size() == partition.up_months.size());
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(
      partition_months(monthly_series("2003-01", {1, 2, 3, 4, 5, 6, 7, 8, 9})),
      std::invalid_argument);
  // all changes tied: the deciles are ambiguous
  CHECK_THROWS_AS(partition_months(monthly_series(
                      "2003-01", {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024})),
                  std::runtime_error);
  TimeSeries yearly;
  yearly.granularity = Granularity::year;
  for (int i = 0; i < 12; ++i)
    yearly.points.push_back({Period{Granularity::year, 2000 + i, 0}, 1.0 + i});
  CHECK_THROWS_AS(partition_months(yearly), std::invalid_argument);
}

TEST_CASE("log odds hand-computed fixture") {
  const TokenCounts counts_i = {{"a", 5}, {"b", 1}};
  const TokenCounts counts_j = {{"a", 1}, {"b", 5}};
  const PriorCounts prior = {{"a", 1.0}, {"b", 1.0}};
  const auto result = log_odds_dirichlet(counts_i, counts_j, prior);
  REQUIRE(result.size() == 2);
  CHECK(result.at("a").delta ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-12));
  CHECK(result.at("a").variance == doctest::Approx(1.0 / 6.0 + 0.5).epsilon(1e-12));
  CHECK(result.at("a").z ==
        doctest::Approx(2.0 * std::log(3.0) / std::sqrt(2.0 / 3.0))
            .epsilon(1e-9));
  CHECK(result.at("a").z == doctest::Approx(2.6911).epsilon(1e-4));
  // b mirrors a
  CHECK(result.at("b").delta ==
        doctest::Approx(-2.0 * std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("log odds is zero under identical counts and symmetric priors") {
  const TokenCounts counts = {{"x", 7}, {"y", 2}, {"z", 11}};
  const PriorCounts prior = {{"x", 0.5}, {"y", 1.5}, {"z", 2.0}};
  for (const auto& [word, entry] : log_odds_dirichlet(counts, counts, prior)) {
    CHECK(entry.delta == 0.0);
    CHECK(entry.z == 0.0);
  }
}

TEST_CASE("log odds antisymmetry is exact on random tables") {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    TokenCounts counts_i, counts_j;
    PriorCounts prior;
    const std::size_t vocab = 2 + rng.next_below(20);
    for (std::size_t w = 0; w < vocab; ++w) {
      const std::string word = "w" + std::to_string(w);
      if (rng.next_below(4) != 0) counts_i[word] = 1 + rng.next_below(50);
      if (rng.next_below(4) != 0) counts_j[word] = 1 + rng.next_below(50);
      prior[word] = 0.1 + rng.next_unit() * 5.0;
    }
    if (counts_i.empty() || counts_j.empty()) continue;
    const auto forward = log_odds_dirichlet(counts_i, counts_j, prior);
    const auto backward = log_odds_dirichlet(counts_j, counts_i, prior);
    REQUIRE(forward.size() == backward.size());
    for (const auto& [word, entry] : forward) {
      CHECK(entry.delta == -backward.at(word).delta);
      CHECK(entry.z == -backward.at(word).z);
      CHECK(entry.variance == backward.at(word).variance);
    }
  }
}

TEST_CASE("log odds rejects non-positive and missing priors") {
  const TokenCounts counts = {{"a", 3}};
  CHECK_THROWS_AS(log_odds_dirichlet(counts, counts, {{"a", 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(log_odds_dirichlet(counts, counts, {{"b", 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("equal added mass shrinks delta toward zero") {
  const PriorCounts prior = {{"a", 1.0}, {"b", 1.0}};
  const TokenCounts counts_i = {{"a", 9}, {"b", 1}};
  const TokenCounts counts_j = {{"a", 1}, {"b", 9}};
  const double before =
      log_odds_dirichlet(counts_i, counts_j, prior).at("a").delta;
  const TokenCounts bumped_i = {{"a", 19}, {"b", 1}};
  const TokenCounts bumped_j = {{"a", 11}, {"b", 9}};
  const double after =
      log_odds_dirichlet(bumped_i, bumped_j, prior).at("a").delta;
  CHECK(after < before);
  CHECK(after > 0.0);
}

TEST_CASE("corpus-scaled prior sums to alpha0") {
  const auto fixture = testing::make_agenda_fixture();
  const auto prior = corpus_scaled_prior(fixture.corpus, 500.0);
  double total = 0.0;
  for (const auto& [word, pseudo] : prior) {
    CHECK(pseudo > 0.0);
    total += pseudo;
  }
  CHECK(total == doctest::Approx(500.0).epsilon(1e-9));
}

TEST_CASE("agendalex finds the planted word and skips the control") {
  const auto fixture = testing::make_agenda_fixture();
  const auto partition = partition_months(fixture.indicator);
  REQUIRE(partition.up_months.size() == 2);
  CHECK(partition.up_months[0].str() == "2003-06");
  CHECK(partition.up_months[1].str() == "2004-01");
  CHECK(partition.down_months[0].str() == "2003-09");
  CHECK(partition.down_months[1].str() == "2004-05");

  std::unordered_map<std::string, FrameAssignment> assignments;
  for (const auto& doc : fixture.corpus.docs())
    assignments[doc.id] = assign_frames(doc, fixture.lexicons);
  const auto focus = entity_focus(fixture.aliases, 2);
  const auto prior = corpus_scaled_prior(fixture.corpus, 500.0);

  const auto agendalex =
      build_agendalex(fixture.frame, fixture.corpus, assignments, partition,
                      focus, prior, 500);
  CHECK(agendalex.count(fixture.planted_word) == 1);
  CHECK(agendalex.count(fixture.control_word) == 0);
  // every output word occurs in frame-bearing focus documents
  for (const auto& word : agendalex) {
    bool seen = false;
    for (const auto& doc : fixture.corpus.docs())
      for (const auto& token : doc.tokens)
        if (token == word) seen = true;
    CHECK(seen);
  }
}

TEST_CASE("agendalex errors when a pool has no qualifying documents") {
  auto fixture = testing::make_agenda_fixture();
  const auto partition = partition_months(fixture.indicator);
  // Lexicon that no document satisfies: frame never present -> empty pools.
  ScoredLexicon ghost;
  ghost.frame = fixture.frame;
  ghost.provenance = Provenance::final_stage;
  ghost.entries = {{"nonexistent", 1.0}};
  std::unordered_map<std::string, FrameAssignment> assignments;
  for (const auto& doc : fixture.corpus.docs())
    assignments[doc.id] = assign_frames(doc, {ghost});
  const auto focus = entity_focus(fixture.aliases, 2);
  const auto prior = corpus_scaled_prior(fixture.corpus, 500.0);
  CHECK_THROWS_WITH_AS(
      build_agendalex(fixture.frame, fixture.corpus, assignments, partition,
                      focus, prior, 500),
      doctest::Contains("pool"), std::runtime_error);
}

TEST_CASE("agendalex is empty when no word moves") {
  // Identical document templates in every month: all log-odds are exactly
  // zero, so neither test has positively favored words.
  const auto fixture = testing::make_agenda_fixture(5, 5, 5);
  const auto partition = partition_months(fixture.indicator);
  std::unordered_map<std::string, FrameAssignment> assignments;
  for (const auto& doc : fixture.corpus.docs())
    assignments[doc.id] = assign_frames(doc, fixture.lexicons);
  const auto agendalex = build_agendalex(
      fixture.frame, fixture.corpus, assignments, partition,
      entity_focus(fixture.aliases, 2),
      corpus_scaled_prior(fixture.corpus, 500.0), 500);
  CHECK(agendalex.empty());
}

TEST_CASE("a top_n of the whole vocabulary reduces to the z-sign rule") {
  const auto fixture = testing::make_agenda_fixture();
  const auto partition = partition_months(fixture.indicator);
  std::unordered_map<std::string, FrameAssignment> assignments;
  for (const auto& doc : fixture.corpus.docs())
    assignments[doc.id] = assign_frames(doc, fixture.lexicons);
  const auto focus = entity_focus(fixture.aliases, 2);
  const auto prior = corpus_scaled_prior(fixture.corpus, 500.0);
  const auto capped = build_agendalex(fixture.frame, fixture.corpus,
                                      assignments, partition, focus, prior, 500);
  const auto uncapped =
      build_agendalex(fixture.frame, fixture.corpus, assignments, partition,
                      focus, prior, 100000);
  // 500 already exceeds the fixture vocabulary, so both equal the set of
  // words with the right z sign in both tests.
  CHECK(capped == uncapped);
  CHECK(uncapped.count(fixture.planted_word) == 1);
}

TEST_CASE("disjoint pool vocabularies produce an empty agendalex") {
  // With the planted word present only in the after-down months, the rising
  // and falling tests rank disjoint positive sets.
  const TokenCounts only_i = {{"p", 10}, {"shared", 10}};
  const TokenCounts only_j = {{"q", 10}, {"shared", 10}};
  PriorCounts prior = {{"p", 1.0}, {"q", 1.0}, {"shared", 1.0}};
  const auto rising = log_odds_dirichlet(only_i, only_j, prior);
  const auto falling = log_odds_dirichlet(only_j, only_i, prior);
  // words favored by the first table
  CHECK(rising.at("p").z > 0.0);
  CHECK(falling.at("q").z > 0.0);
  CHECK(rising.at("q").z < 0.0);
  // intersection of {p} and {q} is empty
}

TEST_CASE("lexicon frequency series") {
  const auto fixture = testing::make_agenda_fixture();
  const auto slices = slice_corpus(fixture.corpus, Granularity::month);
  const auto focus = entity_focus(fixture.aliases, 2);

  // The control word has a constant planted density of 5 per 100 tokens.
  const auto series = lexicon_frequency_series({fixture.control_word}, slices,
                                               fixture.corpus, focus);
  for (const auto& point : series.points)
    CHECK(point.value == doctest::Approx(0.05));

  // A lexicon covering every token scores 1; an empty one scores 0.
  std::set<std::string> everything;
  for (const auto& doc : fixture.corpus.docs())
    everything.insert(doc.tokens.begin(), doc.tokens.end());
  const auto full =
      lexicon_frequency_series(everything, slices, fixture.corpus, focus);
  for (const auto& point : full.points) CHECK(point.value == 1.0);
  const auto empty =
      lexicon_frequency_series({}, slices, fixture.corpus, focus);
  for (const auto& point : empty.points) CHECK(point.value == 0.0);
}

TEST_CASE("lexicon frequency warns on slices without focus documents") {
  using newsframes::testing::make_doc;
  Corpus corpus;
  corpus.add(make_doc("a", "2003-01-05", {"сша", "сша", "word"}));
  corpus.add(make_doc("b", "2003-02-05", {"word", "word", "word"}));
  const auto aliases =
      EntityAliasSet::make("us", {std::vector<std::string>{"сша"}});
  const auto slices = slice_corpus(corpus, Granularity::month);
  WarningLog warnings;
  const auto series = lexicon_frequency_series({"word"}, slices, corpus,
                                               entity_focus(aliases, 2),
                                               &warnings);
  CHECK(series.points[1].value == 0.0);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("2003-02") != std::string::npos);
}
