#include "support/fixtures.h"

#include <array>
#include <cstdio>

#include "newsframes/rng.h"

namespace newsframes::testing {

namespace {

std::string two_digits(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02zu", n);
  return buf;
}

std::string three_digits(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%03zu", n);
  return buf;
}

Period nth_month(std::size_t n) {
  Period p{Granularity::month, 2003, 1};
  for (std::size_t i = 0; i < n; ++i) p = p.next();
  return p;
}

Date mid_month(const Period& p, int day) { return Date{p.year, p.index, day}; }

}  // namespace

Document make_doc(std::string id, const std::string& iso_date,
                  std::vector<std::string> tokens, std::vector<FrameSpan> spans,
                  std::string lang) {
  Document doc;
  doc.id = std::move(id);
  doc.date = Date::parse_iso(iso_date);
  doc.tokens = std::move(tokens);
  doc.annotations = std::move(spans);
  doc.language = std::move(lang);
  return doc;
}

TimeSeries monthly_series(const std::string& first,
                          const std::vector<double>& values) {
  TimeSeries series;
  series.granularity = Granularity::month;
  Period p = Period::parse(first);
  for (double v : values) {
    series.points.push_back({p, v});
    p = p.next();
  }
  series.validate();
  return series;
}

const std::vector<std::string>& fixture_frames() {
  static const std::vector<std::string> kFrames = {"Economic", "Political",
                                                   "Security and Defense"};
  return kFrames;
}

Corpus make_annotated_corpus(std::uint64_t seed, std::size_t n_docs) {
  static const std::array<std::vector<std::string>, 3> kMarkers = {{
      {"tax", "budget", "market", "deficit", "trade", "bank", "inflation",
       "wage"},
      {"senate", "election", "vote", "party", "congress", "campaign",
       "governor", "bill"},
      {"military", "missile", "war", "terror", "army", "defense", "threat",
       "troops"},
  }};
  SplitMix64 rng(seed);
  Corpus corpus;
  for (std::size_t i = 0; i < n_docs; ++i) {
    const std::size_t f = i % fixture_frames().size();
    const Period month = nth_month(i / 2);
    const Date date = mid_month(month, i % 2 == 0 ? 7 : 21);

    std::vector<std::string> tokens;
    // Every fifth document stays out of the entity-focus event.
    if (i % 5 != 0) {
      tokens.push_back("us");
      tokens.push_back("us");
    }
    // Filler prefix.
    const std::size_t prefix = 4 + rng.next_below(4);
    for (std::size_t t = 0; t < prefix; ++t)
      tokens.push_back("w" + two_digits(rng.next_below(30)));
    // Annotated stretch dominated by this frame's markers.
    const std::size_t span_start = tokens.size();
    const std::size_t span_len = 6 + rng.next_below(5);
    for (std::size_t t = 0; t < span_len; ++t) {
      if (rng.next_below(10) < 7) {
        tokens.push_back(kMarkers[f][rng.next_below(kMarkers[f].size())]);
      } else {
        tokens.push_back("w" + two_digits(rng.next_below(30)));
      }
    }
    const std::size_t span_end = tokens.size();
    std::vector<FrameSpan> spans = {
        {fixture_frames()[f], span_start, span_end, "a1"}};
    // Occasionally a second annotator marks a sub-span of another frame.
    if (rng.next_below(3) == 0) {
      const std::size_t g = (f + 1) % fixture_frames().size();
      const std::size_t alt_start = tokens.size();
      for (std::size_t t = 0; t < 4; ++t)
        tokens.push_back(kMarkers[g][rng.next_below(kMarkers[g].size())]);
      spans.push_back({fixture_frames()[g], alt_start, tokens.size(), "a2"});
    }
    // Filler suffix.
    const std::size_t suffix = 6 + rng.next_below(6);
    for (std::size_t t = 0; t < suffix; ++t)
      tokens.push_back("w" + two_digits(rng.next_below(30)));

    Document doc = make_doc("doc" + three_digits(i), date.str(),
                            std::move(tokens), std::move(spans));
    doc.gold_primary = fixture_frames()[f];
    corpus.add(std::move(doc));
  }
  return corpus;
}

GrangerPair make_planted_granger_pair(std::uint64_t seed, std::size_t n) {
  SplitMix64 rng(seed);
  std::vector<double> predictor(n);
  for (std::size_t t = 0; t < n; ++t) predictor[t] = 0.15 * rng.next_gaussian();
  std::vector<double> target(n);
  target[0] = 0.05 * rng.next_gaussian();
  for (std::size_t t = 1; t < n; ++t)
    target[t] = 0.5 * target[t - 1] - 0.35 * predictor[t - 1] +
                0.05 * rng.next_gaussian();
  return {monthly_series("2003-01", target), monthly_series("2003-01", predictor)};
}

GrangerPair make_null_granger_pair(std::uint64_t seed, std::size_t n) {
  SplitMix64 rng(seed);
  std::vector<double> predictor(n);
  for (std::size_t t = 0; t < n; ++t) predictor[t] = 0.15 * rng.next_gaussian();
  std::vector<double> target(n);
  target[0] = 0.05 * rng.next_gaussian();
  for (std::size_t t = 1; t < n; ++t)
    target[t] = 0.5 * target[t - 1] + 0.05 * rng.next_gaussian();
  return {monthly_series("2003-01", target), monthly_series("2003-01", predictor)};
}

BilingualFixture make_bilingual_fixture(std::uint64_t seed,
                                        std::size_t docs_per_language) {
  BilingualFixture fixture;
  fixture.frames = fixture_frames();
  const std::array<std::string, 3> prefixes = {"eco", "pol", "sec"};
  constexpr std::size_t kPlanted = 30;
  constexpr std::size_t kBackground = 200;

  std::array<std::vector<std::string>, 3> source_planted;
  std::array<std::vector<std::string>, 3> target_planted;
  for (std::size_t f = 0; f < 3; ++f) {
    for (std::size_t w = 0; w < kPlanted; ++w) {
      source_planted[f].push_back(prefixes[f] + two_digits(w));
      target_planted[f].push_back("t" + prefixes[f] + two_digits(w));
    }
    fixture.planted_target[fixture.frames[f]] = {target_planted[f].begin(),
                                                 target_planted[f].end()};
  }
  std::vector<std::string> source_bg, target_bg;
  for (std::size_t w = 0; w < kBackground; ++w) {
    source_bg.push_back("bg" + three_digits(w));
    target_bg.push_back("tbg" + three_digits(w));
  }
  for (std::size_t f = 0; f < 3; ++f)
    for (std::size_t w = 0; w < kPlanted; ++w)
      fixture.dictionary.translations[source_planted[f][w]] = {
          target_planted[f][w]};
  for (std::size_t w = 0; w < kBackground; ++w)
    fixture.dictionary.translations[source_bg[w]] = {target_bg[w]};

  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < docs_per_language; ++i) {
    const std::size_t f = i % 3;
    const Date date = mid_month(nth_month((i / 60) % 168), 3 + i % 25);

    std::vector<std::string> tokens;
    for (std::size_t t = 0; t < 5; ++t)
      tokens.push_back(source_bg[rng.next_below(kBackground)]);
    const std::size_t span_start = tokens.size();
    for (std::size_t t = 0; t < 20; ++t) {
      if (rng.next_below(10) < 7) {
        tokens.push_back(source_planted[f][rng.next_below(kPlanted)]);
      } else {
        tokens.push_back(source_bg[rng.next_below(kBackground)]);
      }
    }
    const std::size_t span_end = tokens.size();
    for (std::size_t t = 0; t < 5; ++t)
      tokens.push_back(source_bg[rng.next_below(kBackground)]);

    fixture.source.add(make_doc(
        "src" + std::to_string(i), date.str(), std::move(tokens),
        {{fixture.frames[f], span_start, span_end, "a1"}}));
  }
  for (std::size_t i = 0; i < docs_per_language; ++i) {
    const std::size_t f = i % 3;
    const Date date = mid_month(nth_month((i / 60) % 168), 3 + i % 25);
    std::vector<std::string> tokens;
    for (std::size_t t = 0; t < 30; ++t) {
      if (rng.next_below(10) < 6) {
        tokens.push_back(target_planted[f][rng.next_below(kPlanted)]);
      } else {
        tokens.push_back(target_bg[rng.next_below(kBackground)]);
      }
    }
    fixture.target.add(make_doc("tgt" + std::to_string(i), date.str(),
                                std::move(tokens), {}, "xx"));
  }
  return fixture;
}

AgendaFixture make_agenda_fixture(std::size_t planted_base,
                                  std::size_t planted_after_down,
                                  std::size_t planted_after_up) {
  AgendaFixture fixture;
  fixture.frame = "Security and Defense";
  fixture.planted_word = "missile";
  fixture.control_word = "lamp";
  fixture.aliases =
      EntityAliasSet::make("U.S.", {{std::vector<std::string>{"сша"}}});

  // 20 months of indicator values. Percent changes are mostly small and
  // distinct; months 5 and 12 carry large rises, months 8 and 16 large drops
  // (0-based offsets from 2003-01), so the 10% decile picks exactly those.
  std::vector<double> values = {100.0};
  const std::vector<double> changes = {
      0.011, -0.012, 0.013,  -0.014, 0.40,  0.015,  -0.016, -0.30,  0.017,
      -0.018, 0.019, 0.35,   -0.021, 0.022, -0.023, -0.25,  0.024, -0.026,
      0.027};
  for (double c : changes) values.push_back(values.back() * (1.0 + c));
  fixture.indicator = monthly_series("2003-01", values);

  const std::set<std::size_t> after_down_offsets = {9, 17};
  const std::set<std::size_t> after_up_offsets = {6, 13};

  // Four identical documents per month; only the planted word's count moves.
  std::size_t doc_id = 0;
  for (std::size_t m = 0; m < values.size(); ++m) {
    const Period month = nth_month(m);
    std::size_t missile = planted_base;
    if (after_down_offsets.count(m) != 0) missile = planted_after_down;
    if (after_up_offsets.count(m) != 0) missile = planted_after_up;
    for (std::size_t d = 0; d < 4; ++d) {
      std::vector<std::string> tokens = {"сша", "сша", "guard", "guard",
                                         "guard"};
      for (std::size_t t = 0; t < missile; ++t) tokens.push_back("missile");
      for (std::size_t t = 0; t < 5; ++t) tokens.push_back("lamp");
      std::size_t filler = 0;
      while (tokens.size() < 100)
        tokens.push_back("f" + two_digits(filler++ % 20));
      fixture.corpus.add(make_doc("a" + three_digits(doc_id++),
                                  mid_month(month, 5 + static_cast<int>(d) * 7).str(),
                                  std::move(tokens), {}, "ru"));
    }
  }

  ScoredLexicon lexicon;
  lexicon.frame = fixture.frame;
  lexicon.provenance = Provenance::final_stage;
  lexicon.entries = {{"guard", 1.0}};
  fixture.lexicons = {lexicon};
  return fixture;
}

}  // namespace newsframes::testing
