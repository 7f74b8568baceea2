#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace tabcompare {

/// Exact fraction of a whole note. Always kept in lowest terms.
using Rational = boost::rational<std::int64_t>;

inline constexpr int kMaxFret = 30;
inline constexpr std::size_t kMaxStrings = 12;

/// Renders a rational as "n/d" (denominator always written, "1/1" for a whole).
std::string to_string(const Rational& r);
/// Parses "n/d"; throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

struct TimeSignature {
  int numerator = 4;
  int denominator = 4;

  /// Length of the bar in whole notes.
  Rational capacity() const { return Rational(numerator, denominator); }
  bool operator==(const TimeSignature&) const = default;
};

bool is_valid_denominator(int denominator);
/// "n/d", unreduced ("4/4" stays "4/4").
std::string to_string(const TimeSignature& ts);
TimeSignature parse_time_signature(std::string_view text);

enum class Technique {
  Bend,
  PalmMute,
  NaturalHarmonic,
  HammerOn,
  PullOff,
  Slide,
  Vibrato,
  LetRing,
  Staccato,
  Tap,
  DeadNote,
};

inline constexpr std::array kAllTechniques = {
    Technique::Bend,     Technique::PalmMute, Technique::NaturalHarmonic, Technique::HammerOn,
    Technique::PullOff,  Technique::Slide,    Technique::Vibrato,         Technique::LetRing,
    Technique::Staccato, Technique::Tap,      Technique::DeadNote,
};

std::string_view technique_name(Technique t);
std::optional<Technique> technique_from_name(std::string_view name);

/// Ordered by enumeration order, which is also the serialization order.
using TechniqueSet = std::set<Technique>;

struct Note {
  int string = 1;  // 1 = highest-pitched string
  int fret = 0;
  TechniqueSet techniques;
  bool tied = false;

  bool operator==(const Note&) const = default;
};

struct Beat {
  Rational onset{0};
  Rational duration{1, 4};
  std::vector<Note> notes;  // empty = rest

  bool is_rest() const { return notes.empty(); }
  bool operator==(const Beat&) const = default;
};

struct Bar {
  int index = 0;
  TimeSignature time_signature;
  std::vector<Beat> beats;

  bool operator==(const Bar&) const = default;
};

struct Tuning {
  std::vector<int> pitches{64, 59, 55, 50, 45, 40};

  std::size_t num_strings() const { return pitches.size(); }
  bool operator==(const Tuning&) const = default;
};

struct Track {
  std::string name;
  Tuning tuning;
  std::vector<Bar> bars;

  bool operator==(const Track&) const = default;
};

struct Score {
  std::string title;
  std::vector<Track> tracks;

  bool operator==(const Score&) const = default;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// MIDI pitch of a fretted note. Throws ValidationError if the string is not in the tuning.
int pitch_of(const Note& note, const Tuning& tuning);

struct Violation {
  std::string path;  // e.g. "tracks[0].bars[2].beats[1]"
  std::string rule;

  bool operator==(const Violation&) const = default;
};

/// Checks every model invariant. Returns an empty list iff the score is well formed.
std::vector<Violation> validate_score(const Score& score);

/// Bar-level subset of validate_score; `path` prefixes the reported locations.
void validate_bar(const Bar& bar, const Tuning& tuning, const std::string& path,
                  std::vector<Violation>& out);

}  // namespace tabcompare
