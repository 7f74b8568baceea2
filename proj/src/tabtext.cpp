#include "tabcompare/tabtext.hpp"

#include <algorithm>
#include <optional>

#include "tabcompare/canonical.hpp"

namespace tabcompare {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alpha(char c) { return is_lower(c) || (c >= 'A' && c <= 'Z'); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    const std::uint32_t min_cp[] = {0, 0x80, 0x800, 0x10000};
    if (cp < min_cp[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += extra + 1;
  }
  return true;
}

std::optional<Technique> technique_from_token(std::string_view token) {
  if (token == "b") return Technique::Bend;
  if (token == "pm") return Technique::PalmMute;
  if (token == "nh") return Technique::NaturalHarmonic;
  if (token == "h") return Technique::HammerOn;
  if (token == "p") return Technique::PullOff;
  if (token == "sl") return Technique::Slide;
  if (token == "v") return Technique::Vibrato;
  if (token == "lr") return Technique::LetRing;
  if (token == "st") return Technique::Staccato;
  if (token == "tp") return Technique::Tap;
  if (token == "x") return Technique::DeadNote;
  return std::nullopt;
}

struct Suffix {
  TechniqueSet techniques;
  bool tied = false;
};

class Parser {
 public:
  explicit Parser(std::string_view source) : src_(source) {}

  Score run() {
    for (;;) {
      skip_space(true);
      if (at_end()) break;
      const char c = peek();
      if (c == '\\') {
        directive();
      } else if (c == '|') {
        bar_line();
      } else if (c == '(') {
        chord();
      } else if (c == 'r') {
        rest();
      } else if (is_digit(c)) {
        single_note();
      } else {
        fail(pos_, "unexpected character " + describe(c));
      }
    }
    if (!in_track_) fail(pos_, "expected \\track");
    close_track(pos_);
    return std::move(score_);
  }

 private:
  // -- low level ------------------------------------------------------------

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  static std::string describe(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x21 && u < 0x7F) return std::string("'") + c + "'";
    static const char* hex = "0123456789ABCDEF";
    return std::string("byte 0x") + hex[u >> 4] + hex[u & 0xF];
  }

  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    const auto column = static_cast<int>(std::min(at, src_.size()) - line_start) + 1;
    auto line_end = src_.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = src_.size();
    throw ParseError(line, column, message,
                     std::string(src_.substr(line_start, line_end - line_start)));
  }

  // Skips whitespace and // comments. With `newlines` false, stops at a line break.
  void skip_space(bool newlines) {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  void expect(char c, const std::string& what) {
    if (peek() != c) fail(pos_, "expected " + what);
    ++pos_;
  }

  int read_uint(const std::string& what) {
    const std::size_t start = pos_;
    if (!is_digit(peek())) fail(pos_, "expected " + what);
    int value = 0;
    while (is_digit(peek())) {
      if (pos_ - start >= 4) fail(start, what + " is too large");
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return value;
  }

  // After a beat token only whitespace, a bar line, a comment or the end may follow.
  void expect_delimiter() {
    if (at_end()) return;
    const char c = peek();
    if (is_space(c) || c == '|' || c == '/') return;
    fail(pos_, "unexpected character " + describe(c) + " after beat");
  }

  // -- directives -----------------------------------------------------------

  void directive() {
    const std::size_t start = pos_;
    ++pos_;
    const std::size_t name_start = pos_;
    while (is_alpha(peek())) ++pos_;
    const std::string_view name = src_.substr(name_start, pos_ - name_start);
    if (name == "title") {
      if (in_track_) fail(start, "\\title must precede the first \\track");
      if (title_seen_) fail(start, "duplicate \\title");
      title_seen_ = true;
      skip_space(false);
      score_.title = quoted();
    } else if (name == "ts") {
      if (!beats_.empty()) fail(start, "\\ts inside a bar");
      skip_space(false);
      const std::size_t num_pos = pos_;
      const int numerator = read_uint("time signature numerator");
      if (numerator < 1 || numerator > 64) fail(num_pos, "time signature numerator must be 1..64");
      skip_space(false);
      const std::size_t den_pos = pos_;
      const int denominator = read_uint("time signature denominator");
      if (!is_valid_denominator(denominator)) {
        fail(den_pos, "time signature denominator must be 1, 2, 4, 8, 16 or 32");
      }
      ts_ = {numerator, denominator};
      if (!in_track_) header_ts_ = ts_;
    } else if (name == "track") {
      if (in_track_) close_track(start);
      skip_space(false);
      Track track;
      track.name = quoted();
      score_.tracks.push_back(std::move(track));
      in_track_ = true;
      ts_ = header_ts_;
    } else if (name == "tuning") {
      if (!in_track_) fail(start, "\\tuning outside a track");
      Track& track = score_.tracks.back();
      if (!track.bars.empty() || !beats_.empty()) {
        fail(start, "\\tuning must precede the track's first beat");
      }
      std::vector<int> pitches;
      for (;;) {
        skip_space(false);
        if (!is_digit(peek())) break;
        const std::size_t p = pos_;
        const int pitch = read_uint("MIDI pitch");
        if (pitch > 127) fail(p, "pitch " + std::to_string(pitch) + " outside 0..127");
        pitches.push_back(pitch);
        if (pitches.size() > kMaxStrings) {
          fail(p, "tuning has more than " + std::to_string(kMaxStrings) + " strings");
        }
      }
      if (pitches.empty()) fail(pos_, "expected MIDI pitches after \\tuning");
      track.tuning.pitches = std::move(pitches);
    } else {
      fail(start, "unknown directive \\" + std::string(name));
    }
  }

  std::string quoted() {
    if (peek() != '"') fail(pos_, "expected quoted string");
    const std::size_t start = pos_;
    ++pos_;
    std::string out;
    for (;;) {
      if (at_end() || peek() == '\n') fail(start, "unterminated string");
      const char c = peek();
      ++pos_;
      if (c == '"') break;
      if (c == '\\') {
        const char e = peek();
        if (e != '"' && e != '\\') fail(pos_, "invalid escape in string");
        out.push_back(e);
        ++pos_;
      } else {
        out.push_back(c);
      }
    }
    if (!valid_utf8(out)) fail(start, "string is not valid UTF-8");
    return out;
  }

  // -- beats ----------------------------------------------------------------

  Rational duration() {
    const std::size_t start = pos_;
    const int value = read_uint("duration");
    if (!is_valid_denominator(value)) {
      fail(start, "invalid duration " + std::to_string(value) +
                      " (expected 1, 2, 4, 8, 16 or 32)");
    }
    Rational d(1, value);
    if (peek() == '.') {
      ++pos_;
      d *= Rational(3, 2);
    }
    return d;
  }

  Suffix suffix() {
    Suffix out;
    bool have_techniques = false;
    for (;;) {
      if (peek() == '{') {
        if (have_techniques) fail(pos_, "duplicate technique list");
        have_techniques = true;
        out.techniques = technique_list();
      } else if (peek() == '~') {
        if (out.tied) fail(pos_, "duplicate tie");
        out.tied = true;
        ++pos_;
      } else {
        return out;
      }
    }
  }

  TechniqueSet technique_list() {
    const std::size_t open = pos_;
    ++pos_;
    TechniqueSet out;
    for (;;) {
      skip_space(true);
      if (at_end()) fail(open, "unterminated technique list");
      if (peek() == '}') {
        ++pos_;
        break;
      }
      const std::size_t start = pos_;
      while (!at_end() && !is_space(peek()) && peek() != '}') ++pos_;
      const std::string_view token = src_.substr(start, pos_ - start);
      const auto technique = technique_from_token(token);
      if (!technique) fail(start, "unknown technique '" + std::string(token) + "'");
      if (!out.insert(*technique).second) {
        fail(start, "duplicate technique '" + std::string(token) + "'");
      }
    }
    if (out.empty()) fail(open, "empty technique list");
    return out;
  }

  Note note_body(std::size_t start) {
    Note note;
    const std::size_t fret_pos = pos_;
    note.fret = read_uint("fret");
    if (note.fret > kMaxFret) {
      fail(fret_pos, "fret " + std::to_string(note.fret) + " exceeds " + std::to_string(kMaxFret));
    }
    expect('.', "'.' between fret and string");
    note.string = read_uint("string");
    if (!in_track_) fail(start, "expected \\track");
    if (note.string < 1) fail(start, "string 0 is not valid (strings start at 1)");
    if (static_cast<std::size_t>(note.string) > score_.tracks.back().tuning.num_strings()) {
      fail(start, "string " + std::to_string(note.string) + " exceeds tuning");
    }
    return note;
  }

  void single_note() {
    const std::size_t start = pos_;
    Note note = note_body(start);
    expect('.', "'.' before duration");
    const Rational d = duration();
    const Suffix s = suffix();
    note.techniques = s.techniques;
    note.tied = s.tied;
    expect_delimiter();
    add_beat(start, d, {note});
  }

  void chord() {
    const std::size_t start = pos_;
    ++pos_;
    std::vector<Note> notes;
    for (;;) {
      skip_space(true);
      if (peek() == ')') {
        ++pos_;
        break;
      }
      if (at_end()) fail(start, "unterminated chord");
      const std::size_t note_start = pos_;
      Note note = note_body(note_start);
      const Suffix s = suffix();
      note.techniques = s.techniques;
      note.tied = s.tied;
      for (const Note& other : notes) {
        if (other.string == note.string) {
          fail(note_start, "two notes on string " + std::to_string(note.string) + " in chord");
        }
      }
      notes.push_back(std::move(note));
      if (!at_end() && !is_space(peek()) && peek() != ')') {
        fail(pos_, "unexpected character " + describe(peek()) + " in chord");
      }
    }
    if (notes.empty()) fail(start, "empty chord");
    expect('.', "'.' before duration");
    const Rational d = duration();
    const Suffix s = suffix();
    for (Note& note : notes) {
      note.techniques.insert(s.techniques.begin(), s.techniques.end());
      note.tied = note.tied || s.tied;
    }
    std::sort(notes.begin(), notes.end(),
              [](const Note& a, const Note& b) { return a.string < b.string; });
    expect_delimiter();
    add_beat(start, d, std::move(notes));
  }

  void rest() {
    const std::size_t start = pos_;
    ++pos_;
    expect('.', "'.' after 'r'");
    const Rational d = duration();
    if (peek() == '{' || peek() == '~') fail(pos_, "a rest cannot carry techniques or ties");
    expect_delimiter();
    add_beat(start, d, {});
  }

  void add_beat(std::size_t start, Rational d, std::vector<Note> notes) {
    if (!in_track_) fail(start, "expected \\track");
    const Rational capacity = ts_.capacity();
    if (onset_ + d > capacity) {
      fail(start, "bar overfull: beat ends at " + to_string(onset_ + d) + " beyond capacity " +
                      to_string(capacity));
    }
    beats_.push_back({onset_, d, std::move(notes)});
    onset_ += d;
  }

  // -- bars -----------------------------------------------------------------

  void bar_line() {
    if (!in_track_) fail(pos_, "expected \\track");
    if (beats_.empty()) fail(pos_, "empty bar");
    close_bar(pos_);
    ++pos_;
  }

  void close_bar(std::size_t at) {
    const Rational capacity = ts_.capacity();
    if (onset_ != capacity) {
      fail(at, "bar underfull: beats fill " + to_string(onset_) + " of capacity " +
                   to_string(capacity));
    }
    Track& track = score_.tracks.back();
    Bar bar;
    bar.index = static_cast<int>(track.bars.size());
    bar.time_signature = ts_;
    bar.beats = std::move(beats_);
    track.bars.push_back(std::move(bar));
    beats_.clear();
    onset_ = 0;
  }

  void close_track(std::size_t at) {
    if (!beats_.empty()) close_bar(at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Score score_;
  bool in_track_ = false;
  bool title_seen_ = false;
  TimeSignature header_ts_;
  TimeSignature ts_;
  std::vector<Beat> beats_;
  Rational onset_{0};
};

}  // namespace

Score parse_tabtext(std::string_view source) {
  return Parser(source).run();
}

std::vector<TrackSummary> summarize_tracks(const Score& score) {
  std::vector<TrackSummary> out;
  for (std::size_t i = 0; i < score.tracks.size(); ++i) {
    const Track& t = score.tracks[i];
    out.push_back({i, t.name, t.tuning.num_strings(), t.bars.size()});
  }
  return out;
}

std::vector<TrackSummary> list_tracks(std::string_view source) {
  return summarize_tracks(parse_tabtext(source));
}

Score parse_any(std::string_view source) {
  return looks_canonical(source) ? read_canonical(source) : parse_tabtext(source);
}

}  // namespace tabcompare
