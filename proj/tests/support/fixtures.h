#pragma once

// Deterministic synthetic data used by the unit and acceptance suites.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "newsframes/corpus.h"
#include "newsframes/projection.h"
#include "newsframes/timeseries.h"

namespace newsframes::testing {

Document make_doc(std::string id, const std::string& iso_date,
                  std::vector<std::string> tokens,
                  std::vector<FrameSpan> spans = {}, std::string lang = "en");

// Monthly series starting at `first` ("YYYY-MM") with the given values.
TimeSeries monthly_series(const std::string& first,
                          const std::vector<double>& values);

// Annotated corpus with three frames whose spans carry distinctive marker
// words; documents are dated two per month from 2003-01. Gold primaries are
// set. Used for PMI oracle checks and as the shipped CLI fixture.
Corpus make_annotated_corpus(std::uint64_t seed, std::size_t n_docs);

// Frame labels used by make_annotated_corpus.
const std::vector<std::string>& fixture_frames();

// Paired series for the planted-effect recovery check:
//   target_t = 0.5 target_{t-1} - 0.35 predictor_{t-1} + N(0, 0.05)
// with an independent N(0, 0.15) predictor. Both monthly from 2003-01.
struct GrangerPair {
  TimeSeries target;
  TimeSeries predictor;
};
GrangerPair make_planted_granger_pair(std::uint64_t seed, std::size_t n = 168);

// Null pair: AR(1) target, independent white-noise predictor.
GrangerPair make_null_granger_pair(std::uint64_t seed, std::size_t n = 168);

// Two-language corpus pair linked by a dictionary, with three frames whose
// 30-word vocabularies are planted in both languages.
struct BilingualFixture {
  Corpus source;  // span-annotated
  Corpus target;  // plain text
  BilingualDictionary dictionary;
  std::vector<std::string> frames;
  std::map<std::string, std::set<std::string>> planted_target;  // per frame
};
BilingualFixture make_bilingual_fixture(std::uint64_t seed,
                                        std::size_t docs_per_language = 2000);

// Deterministic monthly corpus with a word planted 5x denser in the months
// following a downturn and 5x sparser after an upturn, plus a uniform
// control word. Every document is entity-focused and carries the frame.
// Passing equal counts for all three phases produces a corpus where no word
// moves at all.
struct AgendaFixture {
  Corpus corpus;
  TimeSeries indicator;
  std::vector<ScoredLexicon> lexicons;  // single frame lexicon {"guard"}
  EntityAliasSet aliases;
  std::string frame;
  std::string planted_word;  // "missile"
  std::string control_word;  // "lamp"
};
AgendaFixture make_agenda_fixture(std::size_t planted_base = 5,
                                  std::size_t planted_after_down = 25,
                                  std::size_t planted_after_up = 1);

}  // namespace newsframes::testing
