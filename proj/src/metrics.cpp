#include "tabcompare/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace tabcompare {

int note_density(const Bar& bar) {
  int count = 0;
  for (const Beat& beat : bar.beats) {
    count += static_cast<int>(
        std::count_if(beat.notes.begin(), beat.notes.end(), [](const Note& n) { return !n.tied; }));
  }
  return count;
}

double fret_position_mm(int fret, double scale_length_mm) {
  return scale_length_mm * (1.0 - std::exp2(-static_cast<double>(fret) / 12.0));
}

std::optional<FretSpan> fret_span(const Bar& bar, double scale_length_mm) {
  int lowest = kMaxFret + 1;
  int highest = 0;
  for (const Beat& beat : bar.beats) {
    for (const Note& note : beat.notes) {
      if (note.fret < 1 || note.techniques.contains(Technique::DeadNote)) continue;
      lowest = std::min(lowest, note.fret);
      highest = std::max(highest, note.fret);
    }
  }
  if (highest == 0) return std::nullopt;
  return FretSpan{highest - lowest, fret_position_mm(highest, scale_length_mm) -
                                        fret_position_mm(lowest, scale_length_mm)};
}

TechniqueCounts techniques_in_bar(const Bar& bar) {
  TechniqueCounts counts;
  for (const Beat& beat : bar.beats) {
    for (const Note& note : beat.notes) {
      for (Technique t : note.techniques) ++counts[t];
    }
  }
  return counts;
}

BarMetrics bar_metrics(const Bar& bar, double scale_length_mm) {
  return {note_density(bar), fret_span(bar, scale_length_mm), techniques_in_bar(bar)};
}

}  // namespace tabcompare
