#include "tabcompare/score.hpp"

#include <charconv>
#include <sstream>

namespace tabcompare {

namespace {

constexpr std::array<std::string_view, kAllTechniques.size()> kTechniqueNames = {
    "Bend",    "PalmMute", "NaturalHarmonic", "HammerOn", "PullOff", "Slide",
    "Vibrato", "LetRing",  "Staccato",        "Tap",      "DeadNote",
};

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::pair<std::int64_t, std::int64_t> split_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("expected \"n/d\", got '" + std::string(text) + "'");
  }
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto [num, den] = split_fraction(text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_valid_denominator(int denominator) {
  switch (denominator) {
    case 1: case 2: case 4: case 8: case 16: case 32:
      return true;
    default:
      return false;
  }
}

std::string to_string(const TimeSignature& ts) {
  return std::to_string(ts.numerator) + "/" + std::to_string(ts.denominator);
}

TimeSignature parse_time_signature(std::string_view text) {
  auto [num, den] = split_fraction(text);
  if (num <= 0 || num > 1024) {
    throw std::invalid_argument("time signature numerator out of range in '" + std::string(text) + "'");
  }
  if (!is_valid_denominator(static_cast<int>(den)) || den > 32) {
    throw std::invalid_argument("time signature denominator must be 1, 2, 4, 8, 16 or 32 in '" +
                                std::string(text) + "'");
  }
  return {static_cast<int>(num), static_cast<int>(den)};
}

std::string_view technique_name(Technique t) {
  return kTechniqueNames[static_cast<std::size_t>(t)];
}

std::optional<Technique> technique_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTechniqueNames.size(); ++i) {
    if (kTechniqueNames[i] == name) return kAllTechniques[i];
  }
  return std::nullopt;
}

int pitch_of(const Note& note, const Tuning& tuning) {
  if (note.string < 1 || static_cast<std::size_t>(note.string) > tuning.num_strings()) {
    throw ValidationError("string " + std::to_string(note.string) + " exceeds tuning of " +
                          std::to_string(tuning.num_strings()) + " strings");
  }
  return tuning.pitches[static_cast<std::size_t>(note.string - 1)] + note.fret;
}

void validate_bar(const Bar& bar, const Tuning& tuning, const std::string& path,
                  std::vector<Violation>& out) {
  const auto& ts = bar.time_signature;
  if (ts.numerator <= 0 || !is_valid_denominator(ts.denominator)) {
    out.push_back({path, "invalid time signature " + to_string(ts)});
    return;
  }
  const Rational capacity = ts.capacity();
  Rational expected_onset{0};
  bool overflowed = false;
  for (std::size_t b = 0; b < bar.beats.size(); ++b) {
    const Beat& beat = bar.beats[b];
    const std::string beat_path = path + ".beats[" + std::to_string(b) + "]";
    if (beat.duration <= 0) {
      out.push_back({beat_path, "duration must be positive"});
    }
    if (beat.onset != expected_onset) {
      out.push_back({beat_path, "onset " + to_string(beat.onset) +
                                    " is not the sum of preceding durations (" +
                                    to_string(expected_onset) + ")"});
    }
    if (!overflowed && beat.onset + beat.duration > capacity) {
      out.push_back({beat_path, "onset + duration exceeds bar capacity " + to_string(capacity)});
      overflowed = true;
    }
    expected_onset = beat.onset + beat.duration;

    int previous_string = 0;
    for (std::size_t n = 0; n < beat.notes.size(); ++n) {
      const Note& note = beat.notes[n];
      const std::string note_path = beat_path + ".notes[" + std::to_string(n) + "]";
      if (note.string < 1 || static_cast<std::size_t>(note.string) > tuning.num_strings()) {
        out.push_back({note_path, "string " + std::to_string(note.string) + " exceeds tuning"});
      }
      if (note.fret < 0 || note.fret > kMaxFret) {
        out.push_back({note_path, "fret " + std::to_string(note.fret) + " outside 0.." +
                                      std::to_string(kMaxFret)});
      }
      if (n > 0 && note.string == previous_string) {
        out.push_back({note_path, "two notes on string " + std::to_string(note.string)});
      } else if (n > 0 && note.string < previous_string) {
        out.push_back({note_path, "notes not sorted by string"});
      }
      previous_string = note.string;
    }
  }
  if (!overflowed && expected_onset < capacity) {
    out.push_back({path, "beats fill " + to_string(expected_onset) + " of bar capacity " +
                             to_string(capacity)});
  }
}

std::vector<Violation> validate_score(const Score& score) {
  std::vector<Violation> out;
  if (score.tracks.empty()) out.push_back({"tracks", "score has no tracks"});
  for (std::size_t t = 0; t < score.tracks.size(); ++t) {
    const Track& track = score.tracks[t];
    const std::string track_path = "tracks[" + std::to_string(t) + "]";
    const auto& pitches = track.tuning.pitches;
    if (pitches.empty() || pitches.size() > kMaxStrings) {
      out.push_back({track_path + ".tuning", "tuning must have 1.." + std::to_string(kMaxStrings) +
                                                 " strings"});
    }
    for (std::size_t i = 0; i < pitches.size(); ++i) {
      if (pitches[i] < 0 || pitches[i] > 127) {
        out.push_back({track_path + ".tuning[" + std::to_string(i) + "]",
                       "pitch " + std::to_string(pitches[i]) + " outside 0..127"});
      }
    }
    for (std::size_t b = 0; b < track.bars.size(); ++b) {
      const std::string bar_path = track_path + ".bars[" + std::to_string(b) + "]";
      if (track.bars[b].index != static_cast<int>(b)) {
        out.push_back({bar_path, "bar index " + std::to_string(track.bars[b].index) +
                                     " is not contiguous"});
      }
      validate_bar(track.bars[b], track.tuning, bar_path, out);
    }
  }
  return out;
}

}  // namespace tabcompare
