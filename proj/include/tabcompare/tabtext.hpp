#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tabcompare/errors.hpp"
#include "tabcompare/score.hpp"

namespace tabcompare {

// The .tabtxt format, one construct per token, whitespace separated:
//
//   \title "Song"           score title (before the first \track)
//   \ts 3 4                 time signature, applies until changed
//   \track "Lead"           starts a track
//   \tuning 64 59 55 ...    MIDI pitches, string 1 first (before the track's first beat)
//   5.3.4                   fret 5 on string 3, quarter note
//   5.3.8.                  dotted eighth
//   r.2                     half rest
//   (0.1 2.2 2.3).4         chord
//   {pm b}  ~               technique list / tie, attached to a note, chord or chord member
//   |                       bar line (trailing one optional)
//   // ...                  comment to end of line
//
// Technique tokens: b pm nh h p sl v lr st tp x.

/// Parses .tabtxt source. The first error aborts parsing and is thrown as ParseError.
Score parse_tabtext(std::string_view source);

struct TrackSummary {
  std::size_t index = 0;
  std::string name;
  std::size_t num_strings = 0;
  std::size_t num_bars = 0;

  bool operator==(const TrackSummary&) const = default;
};

std::vector<TrackSummary> summarize_tracks(const Score& score);
/// Track menu for a .tabtxt source; propagates ParseError.
std::vector<TrackSummary> list_tracks(std::string_view source);

/// Reads either format: canonical if the text starts with '{', .tabtxt otherwise.
Score parse_any(std::string_view source);

}  // namespace tabcompare
