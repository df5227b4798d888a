#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "newsframes/corpus.h"
#include "newsframes/rng.h"
#include "support/fixtures.h"

using namespace newsframes;
using newsframes::testing::make_doc;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nf_corpus_" + name);
}

}  // namespace

TEST_CASE("tokenize lowercases and splits on punctuation") {
  CHECK(tokenize("The U.S.A. rallied!") ==
        std::vector<std::string>{"the", "u", "s", "a", "rallied"});
  CHECK(tokenize("") == std::vector<std::string>{});
  CHECK(tokenize("Россия-США 2008") ==
        std::vector<std::string>{"россия", "сша", "2008"});
  CHECK(tokenize("  \t\n ") == std::vector<std::string>{});
  CHECK(tokenize("Ёлка ёлка") == std::vector<std::string>{"ёлка", "ёлка"});
}

TEST_CASE("tokenize offsets count codepoints") {
  const auto tokens = tokenize_with_offsets("Россия-США 2008");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].begin == 0);
  CHECK(tokens[0].end == 6);
  CHECK(tokens[1].begin == 7);
  CHECK(tokens[1].end == 10);
  CHECK(tokens[2].begin == 11);
  CHECK(tokens[2].end == 15);
}

TEST_CASE("tokenize survives malformed and exotic input") {
  // Truncated and stray continuation bytes act as separators.
  CHECK(tokenize("ab\xC3 cd") == std::vector<std::string>{"ab", "cd"});
  CHECK(tokenize("\x80\xBFok") == std::vector<std::string>{"ok"});
  CHECK(tokenize("a\xF0\x9F\x98\x80垂b") == std::vector<std::string>{"a", "b"});
  // An overlong encoding of '/' must not become a token character.
  CHECK(tokenize("x\xC0\xAFy") == std::vector<std::string>{"x", "y"});
  CHECK(tokenize("Łódź Ç élan") ==
        std::vector<std::string>{"łódź", "ç", "élan"});
}

TEST_CASE("tokenize is idempotent on its own output") {
  SplitMix64 rng(77);
  const std::vector<std::string> pieces = {"Quick", "БЫСТРО", "42", "!!", "—",
                                           "u.s.", "élan", "x9y", "...", "ё"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    const std::size_t n = 1 + rng.next_below(12);
    for (std::size_t i = 0; i < n; ++i) {
      text += pieces[rng.next_below(pieces.size())];
      text += rng.next_below(2) == 0 ? " " : "-";
    }
    const auto once = tokenize(text);
    std::string joined;
    for (std::size_t i = 0; i < once.size(); ++i) {
      if (i) joined += ' ';
      joined += once[i];
    }
    CHECK(tokenize(joined) == once);
  }
}

TEST_CASE("entity mention counting") {
  using Alias = std::vector<std::string>;
  const auto aliases = EntityAliasSet::make("x", {Alias{"сша"}});
  CHECK(entity_mention_count(
            make_doc("d", "2003-01-01", {"сша", "едут", "в", "сша"}), aliases) == 2);
  const auto multi = EntityAliasSet::make("wh", {Alias{"white", "house"}});
  CHECK(entity_mention_count(make_doc("d", "2003-01-01", {"white", "house"}),
                             multi) == 1);
  const auto other = EntityAliasSet::make("x", {Alias{"америка"}});
  CHECK(entity_mention_count(make_doc("d", "2003-01-01", {"сша"}), other) == 0);
}

TEST_CASE("entity matches are non-overlapping, longest alias first") {
  using Alias = std::vector<std::string>;
  const auto aliases = EntityAliasSet::make(
      "us", {Alias{"white", "house"}, Alias{"white"}, Alias{"house"}});
  // "white house" consumes both tokens: one mention, and the trailing
  // "white" matches alone.
  CHECK(entity_mention_count(
            make_doc("d", "2003-01-01", {"white", "house", "white"}), aliases) ==
        2);
  // Greedy left-to-right: the first "white house" wins over a later start.
  CHECK(entity_mention_count(
            make_doc("d", "2003-01-01", {"white", "house", "house"}), aliases) ==
        2);
}

TEST_CASE("entity counting survives retokenization") {
  SplitMix64 rng(13);
  const auto aliases =
      EntityAliasSet::make("us", {std::vector<std::string>{"us"},
                                  std::vector<std::string>{"united", "states"}});
  const std::vector<std::string> vocabulary = {"us", "united", "states", "the",
                                               "market", "fell", "2008"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> tokens;
    const std::size_t n = 1 + rng.next_below(20);
    for (std::size_t i = 0; i < n; ++i)
      tokens.push_back(vocabulary[rng.next_below(vocabulary.size())]);
    const auto doc = make_doc("d", "2003-01-01", tokens);
    std::string joined;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) joined += ' ';
      joined += tokens[i];
    }
    const auto redoc = make_doc("d", "2003-01-01", tokenize(joined));
    CHECK(entity_mention_count(doc, aliases) ==
          entity_mention_count(redoc, aliases));
  }
}

TEST_CASE("slice_corpus buckets, fills gaps, and partitions") {
  Corpus corpus;
  corpus.add(make_doc("a", "2003-01-05", {"x"}));
  corpus.add(make_doc("b", "2003-01-20", {"x"}));
  corpus.add(make_doc("c", "2003-02-01", {"x"}));

  auto monthly = slice_corpus(corpus, Granularity::month);
  REQUIRE(monthly.size() == 2);
  CHECK(monthly[0].documents.size() == 2);
  CHECK(monthly[1].documents.size() == 1);

  auto yearly = slice_corpus(corpus, Granularity::year);
  REQUIRE(yearly.size() == 1);
  CHECK(yearly[0].documents.size() == 3);

  Corpus gapped;
  gapped.add(make_doc("a", "2003-01-05", {"x"}));
  gapped.add(make_doc("b", "2003-03-01", {"x"}));
  auto slices = slice_corpus(gapped, Granularity::month);
  REQUIRE(slices.size() == 3);
  CHECK(slices[1].documents.empty());
  CHECK(slices[1].period.str() == "2003-02");
}

TEST_CASE("slice partition property on random corpora") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Corpus corpus;
    const std::size_t n = 1 + rng.next_below(60);
    for (std::size_t i = 0; i < n; ++i) {
      const int year = 2003 + static_cast<int>(rng.next_below(3));
      const int month = 1 + static_cast<int>(rng.next_below(12));
      const int day = 1 + static_cast<int>(rng.next_below(28));
      corpus.add(make_doc("d" + std::to_string(i),
                          Date{year, month, day}.str(), {"x"}));
    }
    for (auto g : {Granularity::year, Granularity::quarter, Granularity::month}) {
      const auto slices = slice_corpus(corpus, g);
      std::size_t total = 0;
      for (std::size_t s = 0; s < slices.size(); ++s) {
        total += slices[s].documents.size();
        if (s > 0) CHECK(slices[s - 1].period.next() == slices[s].period);
      }
      CHECK(total == corpus.size());
    }
  }
}

TEST_CASE("date and period parsing") {
  CHECK_THROWS_AS(Date::parse_iso("2003-13-01"), std::invalid_argument);
  CHECK_THROWS_AS(Date::parse_iso("2003-02-29"), std::invalid_argument);
  CHECK(Date::parse_iso("2004-02-29").day == 29);  // leap year
  CHECK_THROWS_AS(Date::parse_iso("garbage"), std::invalid_argument);

  CHECK(Period::parse("2003").granularity == Granularity::year);
  CHECK(Period::parse("2003-Q4").index == 4);
  CHECK(Period::parse("2003-12").next().str() == "2004-01");
  CHECK(Period::parse("2003-Q4").next().str() == "2004-Q1");
  CHECK_THROWS_AS(Period::parse("2003-Q5"), std::invalid_argument);
}

TEST_CASE("jsonl ingestion converts char spans to token spans") {
  const auto path = temp_file("spans.jsonl");
  {
    std::ofstream out(path);
    out << R"({"id":"d1","date":"2003-05-01","text":"The budget deficit grew fast.",)"
        << R"("annotations":[{"frame":"Economic","start_char":4,"end_char":18,"annotator":"a1"}],)"
        << R"("lang":"en"})" << '\n';
  }
  const Corpus corpus = read_corpus_jsonl(path.string());
  REQUIRE(corpus.size() == 1);
  const Document& doc = *corpus.find("d1");
  CHECK(doc.tokens ==
        std::vector<std::string>{"the", "budget", "deficit", "grew", "fast"});
  REQUIRE(doc.annotations.size() == 1);
  // chars [4, 18) cover "budget deficit" and nothing else
  CHECK(doc.annotations[0].start == 1);
  CHECK(doc.annotations[0].end == 3);
  CHECK(doc.annotations[0].annotator == "a1");
  std::filesystem::remove(path);
}

TEST_CASE("jsonl ingestion errors name the document") {
  const auto path = temp_file("bad.jsonl");
  {
    std::ofstream out(path);
    out << R"({"id":"d9","date":"2003-02-30","text":"x y"})" << '\n';
  }
  CHECK_THROWS_WITH_AS(read_corpus_jsonl(path.string()),
                       doctest::Contains("d9"), std::runtime_error);
  {
    std::ofstream out(path);
    out << R"({"id":"empty","date":"2003-02-01","text":"..."})" << '\n';
  }
  CHECK_THROWS_WITH_AS(read_corpus_jsonl(path.string()),
                       doctest::Contains("empty"), std::runtime_error);
  {
    std::ofstream out(path);
    out << R"({"id":"d1","date":"2003-02-01","text":"a b c",)"
        << R"("annotations":[{"frame":"NotAFrame","start_char":0,"end_char":3}]})"
        << '\n';
  }
  CHECK_THROWS_WITH_AS(read_corpus_jsonl(path.string(), default_frame_inventory()),
                       doctest::Contains("NotAFrame"), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("jsonl round trip preserves tokens and spans") {
  const Corpus corpus = testing::make_annotated_corpus(4242, 20);
  const auto path = temp_file("roundtrip.jsonl");
  write_corpus_jsonl(corpus, path.string());
  const Corpus reread = read_corpus_jsonl(path.string());
  REQUIRE(reread.size() == corpus.size());
  for (const auto& doc : corpus.docs()) {
    const Document* other = reread.find(doc.id);
    REQUIRE(other != nullptr);
    CHECK(other->tokens == doc.tokens);
    REQUIRE(other->annotations.size() == doc.annotations.size());
    for (std::size_t i = 0; i < doc.annotations.size(); ++i) {
      CHECK(other->annotations[i].frame == doc.annotations[i].frame);
      CHECK(other->annotations[i].start == doc.annotations[i].start);
      CHECK(other->annotations[i].end == doc.annotations[i].end);
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("alias TSV loading") {
  const auto path = temp_file("aliases.tsv");
  {
    std::ofstream out(path);
    out << "U.S.\tus,united states,America\n";
    out << "# comment\n";
    out << "Russia\tроссия\n";
  }
  const auto sets = read_alias_sets_tsv(path.string());
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].entity == "U.S.");
  REQUIRE(sets[0].aliases.size() == 3);
  CHECK(sets[0].aliases[1] == std::vector<std::string>{"united", "states"});
  CHECK(sets[0].aliases[2] == std::vector<std::string>{"america"});
  CHECK(sets[1].aliases[0] == std::vector<std::string>{"россия"});
  std::filesystem::remove(path);
}

TEST_CASE("duplicate ids are rejected") {
  Corpus corpus;
  corpus.add(make_doc("same", "2003-01-01", {"x"}));
  CHECK_THROWS_AS(corpus.add(make_doc("same", "2003-01-02", {"y"})),
                  std::runtime_error);
}
