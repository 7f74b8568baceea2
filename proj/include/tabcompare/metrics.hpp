#pragma once

#include <map>
#include <optional>

#include "tabcompare/score.hpp"

namespace tabcompare {

inline constexpr double kDefaultScaleLengthMm = 648.0;  // 25.5"

/// Count per technique; techniques that do not occur are absent.
using TechniqueCounts = std::map<Technique, int>;

struct FretSpan {
  int frets = 0;
  double mm = 0.0;

  bool operator==(const FretSpan&) const = default;
};

struct BarMetrics {
  int density = 0;
  std::optional<FretSpan> fret_span;  // absent when the bar has no fretted note
  TechniqueCounts techniques;

  bool operator==(const BarMetrics&) const = default;
};

/// Notes attacked in the bar: every chord member counts, tied continuations do not.
int note_density(const Bar& bar);

/// Distance of a fret from the nut for the given scale length.
double fret_position_mm(int fret, double scale_length_mm);

/// Min-max extent of fretted notes (fret >= 1, dead notes excluded).
std::optional<FretSpan> fret_span(const Bar& bar, double scale_length_mm);

TechniqueCounts techniques_in_bar(const Bar& bar);

BarMetrics bar_metrics(const Bar& bar, double scale_length_mm = kDefaultScaleLengthMm);

}  // namespace tabcompare
