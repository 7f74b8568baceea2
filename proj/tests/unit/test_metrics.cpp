#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "helpers.hpp"
#include "tabcompare/canonical.hpp"
#include "tabcompare/metrics.hpp"

using namespace tabcompare;
using tabtest::bar_of;

TEST_CASE("note density") {
  CHECK(note_density(bar_of("r.1")) == 0);
  CHECK(note_density(bar_of("(3.2 5.3 5.4).4 r.4 3.2.2")) == 4);
  CHECK(note_density(bar_of("(3.2 5.3 5.4).4 r.4 3.2.4 r.8 r.8")) == 4);
  CHECK(note_density(bar_of("0.1.4 0.1.4~ 0.1.4~ 0.1.4~")) == 1);
}

TEST_CASE("fret positions") {
  CHECK(fret_position_mm(0, 648) == 0.0);
  CHECK(fret_position_mm(12, 648) == doctest::Approx(324.0).epsilon(1e-15));
  CHECK(std::abs(fret_position_mm(12, 648) - 324.0) <= 1e-9);
  // 648 * (1 - 2^(-5/12)) evaluated at 50 digits
  CHECK(std::abs(fret_position_mm(5, 648) - 162.54850709195519) <= 1e-9);
  CHECK(std::abs(fret_position_mm(1, 648) - 36.369445382262614) <= 1e-9);
  CHECK(fret_position_mm(24, 648) == doctest::Approx(486.0));
  for (int n = 0; n <= 28; ++n) {
    const double a = fret_position_mm(n + 1, 648) - fret_position_mm(n, 648);
    const double b = fret_position_mm(n + 2, 648) - fret_position_mm(n + 1, 648);
    CHECK(a > b);
  }
}

TEST_CASE("fret span") {
  CHECK_FALSE(fret_span(bar_of("(0.1 0.2 0.3).1"), 648).has_value());
  CHECK_FALSE(fret_span(bar_of("r.1"), 648).has_value());
  const auto span = fret_span(bar_of("1.2.2 (0.1 5.3).2"), 648);
  REQUIRE(span.has_value());
  CHECK(span->frets == 4);
  CHECK(std::abs(span->mm - 126.17906170969258) <= 1e-9);
  CHECK(std::abs(span->mm - 126.179) <= 1e-3);
  const auto flat = fret_span(bar_of("7.1.4 7.2.4 (7.3 7.4).2"), 648);
  REQUIRE(flat.has_value());
  CHECK(flat->frets == 0);
  CHECK(flat->mm == 0.0);
  // dead notes carry no fret position
  const auto dead = fret_span(bar_of("3.1.2 12.2.2{x}"), 648);
  REQUIRE(dead.has_value());
  CHECK(dead->frets == 0);
}

TEST_CASE("technique counts") {
  CHECK(techniques_in_bar(bar_of("0.1.1")).empty());
  const TechniqueCounts mixed = techniques_in_bar(bar_of("(3.2 5.3).2{pm} 7.1.2{b v}"));
  CHECK(mixed == TechniqueCounts{{Technique::Bend, 1}, {Technique::PalmMute, 2}, {Technique::Vibrato, 1}});
  const TechniqueCounts eight = techniques_in_bar(
      bar_of("0.6.8{pm} 0.6.8{pm} 0.6.8{pm} 0.6.8{pm} 0.6.8{pm} 0.6.8{pm} 0.6.8{pm} 0.6.8{pm}"));
  CHECK(eight == TechniqueCounts{{Technique::PalmMute, 8}});
}

TEST_CASE("metrics survive re-serialization") {
  tabtest::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Score s = tabtest::random_score(rng);
    const Score back = read_canonical(write_canonical(s));
    for (std::size_t t = 0; t < s.tracks.size(); ++t) {
      for (std::size_t b = 0; b < s.tracks[t].bars.size(); ++b) {
        const BarMetrics m1 = bar_metrics(s.tracks[t].bars[b]);
        const BarMetrics m2 = bar_metrics(back.tracks[t].bars[b]);
        CHECK(m1 == m2);
        CHECK(m1.density >= 0);
        if (m1.fret_span) {
          CHECK(m1.fret_span->frets >= 0);
          CHECK(m1.fret_span->frets <= 30);
          CHECK(m1.fret_span->mm >= 0.0);
        }
      }
    }
  }
}
