#include <doctest.h>

#include <filesystem>

#include "helpers.hpp"
#include "tabcompare/canonical.hpp"
#include "tabcompare/errors.hpp"
#include "tabcompare/tabtext.hpp"

using namespace tabcompare;
using tabtest::bar_of;

namespace {

ParseError parse_error(const std::string& source) {
  try {
    parse_tabtext(source);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError for: " << source);
  return ParseError(0, 0, "", "");
}

}  // namespace

TEST_CASE("four quarter notes on string 3") {
  const Score s = parse_tabtext("\\title \"X\"\n\\track \"Gtr\"\n3.3.4 3.3.4 3.3.4 3.3.4 |");
  CHECK(s.title == "X");
  REQUIRE(s.tracks.size() == 1);
  CHECK(s.tracks[0].name == "Gtr");
  CHECK(s.tracks[0].tuning == Tuning{});
  REQUIRE(s.tracks[0].bars.size() == 1);
  const Bar& bar = s.tracks[0].bars[0];
  CHECK(bar.time_signature == TimeSignature{4, 4});
  REQUIRE(bar.beats.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(bar.beats[i].onset == Rational(i, 4));
    CHECK(bar.beats[i].duration == Rational(1, 4));
    CHECK(bar.beats[i].notes == std::vector<Note>{{3, 3, {}, false}});
  }
  CHECK(validate_score(s).empty());
}

TEST_CASE("chord with a shared technique") {
  const Bar bar = bar_of("(1.1 3.2).8{pm} r.8 r.4 r.2");
  const Beat& beat = bar.beats.at(0);
  CHECK(beat.duration == Rational(1, 8));
  REQUIRE(beat.notes.size() == 2);
  CHECK(beat.notes[0] == Note{1, 1, {Technique::PalmMute}, false});
  CHECK(beat.notes[1] == Note{2, 3, {Technique::PalmMute}, false});
}

TEST_CASE("string beyond the tuning is reported at the token") {
  const ParseError e = parse_error("\\track \"g\"\n0.1.4 3.7.4 r.2");
  CHECK(e.message() == "string 7 exceeds tuning");
  CHECK(e.line() == 2);
  CHECK(e.column() == 7);
  CHECK(e.snippet() == "0.1.4 3.7.4 r.2");
}

TEST_CASE("empty input needs a track") {
  CHECK(parse_error("").message() == "expected \\track");
  CHECK(parse_error("// only a comment\n").message() == "expected \\track");
  CHECK(parse_error("\\title \"a\"\n").message() == "expected \\track");
}

TEST_CASE("durations, dots, rests, ties and techniques") {
  const Bar bar = bar_of("5.3.8. 7.3.16{b v} r.4 (0.1 2.2{h}).4~ 3.6.4{x}~");
  REQUIRE(bar.beats.size() == 5);
  CHECK(bar.beats[0].duration == Rational(3, 16));
  CHECK(bar.beats[1].notes[0].techniques == TechniqueSet{Technique::Bend, Technique::Vibrato});
  CHECK(bar.beats[2].is_rest());
  CHECK(bar.beats[2].onset == Rational(1, 4));
  CHECK(bar.beats[3].notes[0] == Note{1, 0, {}, true});
  CHECK(bar.beats[3].notes[1] == Note{2, 2, {Technique::HammerOn}, true});
  CHECK(bar.beats[4].notes[0] == Note{6, 3, {Technique::DeadNote}, true});
}

TEST_CASE("every technique token is accepted") {
  const Bar bar = bar_of("0.1.1{b pm nh h p sl v lr st tp x}");
  CHECK(bar.beats[0].notes[0].techniques.size() == kAllTechniques.size());
}

TEST_CASE("meters, tunings and multiple tracks") {
  const Score s = parse_tabtext(
      "\\ts 3 4\n"
      "\\track \"A\"\n0.1.2. |\n\\ts 6 8\n0.1.4. 0.1.4. |\n"
      "\\track \"B\"\n\\tuning 43 38 33 28\n0.4.2. |\n");
  REQUIRE(s.tracks.size() == 2);
  CHECK(s.tracks[0].bars[0].time_signature == TimeSignature{3, 4});
  CHECK(s.tracks[0].bars[1].time_signature == TimeSignature{6, 8});
  CHECK(s.tracks[1].bars[0].time_signature == TimeSignature{3, 4});
  CHECK(s.tracks[1].tuning.pitches == std::vector<int>{43, 38, 33, 28});
  CHECK(s.tracks[1].bars[0].index == 0);
}

TEST_CASE("a final bar line is optional") {
  CHECK(parse_tabtext("\\track \"a\"\nr.1 |").tracks[0].bars.size() == 1);
  CHECK(parse_tabtext("\\track \"a\"\nr.1").tracks[0].bars.size() == 1);
  CHECK(parse_tabtext("\\track \"a\"\nr.1 | r.1").tracks[0].bars.size() == 2);
}

TEST_CASE("escaped and unicode strings") {
  const Score s = parse_tabtext("\\title \"a \\\"b\\\" \\\\ c\"\n\\track \"Caf\xC3\xA9\"\nr.1");
  CHECK(s.title == "a \"b\" \\ c");
  CHECK(s.tracks[0].name == "Caf\xC3\xA9");
}

TEST_CASE("malformed sources report a position and the expected construct") {
  struct Case {
    const char* source;
    const char* message;
    int line;
    int column;
  };
  const Case cases[] = {
      {"\\track \"a\"\n0.1.4 0.1.4 0.1.4 0.1.4 0.1.4 |", "bar overfull", 2, 25},
      {"\\track \"a\"\n0.1.4 |", "bar underfull", 2, 7},
      {"\\track \"a\"\n|", "empty bar", 2, 1},
      {"\\track \"a\"\n0.1.1{zz}", "unknown technique 'zz'", 2, 7},
      {"\\track \"a\"\n0.1.1{}", "empty technique list", 2, 6},
      {"\\track \"a\"\n0.1.3", "invalid duration", 2, 5},
      {"\\track \"a\"\n31.1.1", "fret 31 exceeds 30", 2, 1},
      {"\\track \"a\n0.1.1", "unterminated string", 1, 8},
      {"0.1.1", "expected \\track", 1, 1},
      {"\\track \"a\"\n(0.1 2.1).1", "two notes on string 1 in chord", 2, 6},
      {"\\track \"a\"\n\\tuning 200", "pitch 200 outside 0..127", 2, 9},
      {"\\track \"a\"\n0.1.4 \\ts 3 4", "\\ts inside a bar", 2, 7},
      {"\\track \"a\"\nr.1 | \\title \"x\"", "\\title must precede the first \\track", 2, 7},
      {"\\track \"a\"\n0.1.4{pm}x", "unexpected character", 2, 10},
      {"\\track \"a\"\nr.4{pm}", "a rest cannot carry techniques or ties", 2, 4},
      {"\\track \"a\"\n\\bogus", "unknown directive \\bogus", 2, 1},
  };
  for (const Case& c : cases) {
    CAPTURE(c.source);
    const ParseError e = parse_error(c.source);
    CHECK(e.message().rfind(c.message, 0) == 0);
    CHECK(e.line() == c.line);
    CHECK(e.column() == c.column);
  }
}

TEST_CASE("invalid UTF-8 in a name is rejected") {
  CHECK(parse_error("\\track \"\xC3\"\nr.1").message() == "string is not valid UTF-8");
  CHECK(parse_error("\\track \"\xED\xA0\x80\"\nr.1").message() == "string is not valid UTF-8");
}

TEST_CASE("list_tracks summarizes each track") {
  const auto two = list_tracks(tabtest::read_fixture("corpus/04_two_tracks.tabtxt"));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == TrackSummary{0, "Lead", 6, 2});
  CHECK(two[1] == TrackSummary{1, "Bass", 4, 2});
  const auto one = list_tracks("\\track \"Solo\"\nr.1 | r.1 | r.1");
  CHECK(one == std::vector<TrackSummary>{{0, "Solo", 6, 3}});
  CHECK_THROWS_AS(list_tracks(""), ParseError);
}

TEST_CASE("parse_any accepts both formats") {
  const std::string text = tabtest::read_fixture("corpus/19_three_tracks.tabtxt");
  const Score s = parse_any(text);
  CHECK(parse_any("\n  " + write_canonical(s)) == s);
}

TEST_CASE("every corpus file parses into a valid score") {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(tabtest::fixture_path("corpus"))) {
    CAPTURE(entry.path().string());
    const Score s = parse_tabtext(tabtest::read_text(entry.path().string()));
    CHECK(validate_score(s).empty());
    ++files;
  }
  CHECK(files >= 20);
}
