#include "tabcompare/canonical.hpp"

#include "json_util.hpp"

namespace tabcompare {

namespace {

using namespace json_util;

// Bound on numerators/denominators accepted from documents; keeps onset
// arithmetic far away from int64 overflow.
constexpr std::int64_t kMaxRationalTerm = std::int64_t{1} << 20;

Rational duration_at(const Json& j, const std::string& path) {
  const std::string text = string_at(j, "duration", path);
  Rational d;
  try {
    d = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    fail(path + ".duration", e.what());
  }
  if (d <= 0) fail(path + ".duration", "duration must be positive");
  if (d.numerator() > kMaxRationalTerm || d.denominator() > kMaxRationalTerm) {
    fail(path + ".duration", "duration terms too large");
  }
  return d;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string line_text(std::string_view text, int line) {
  std::size_t start = 0;
  for (int l = 1; l < line && start < text.size(); ++l) {
    start = text.find('\n', start);
    if (start == std::string_view::npos) return {};
    ++start;
  }
  const auto end = text.find('\n', start);
  return std::string(text.substr(start, end == std::string_view::npos ? end : end - start));
}

}  // namespace

bool looks_canonical(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

Json techniques_to_json(const TechniqueSet& techniques) {
  Json out = Json::array();
  for (Technique t : techniques) out.push_back(std::string(technique_name(t)));
  return out;
}

TechniqueSet techniques_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  TechniqueSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) fail(item_path, "expected a technique name");
    const auto name = j[i].get<std::string>();
    const auto technique = technique_from_name(name);
    if (!technique) fail(item_path, "unknown technique \"" + name + "\"");
    if (!out.insert(*technique).second) fail(item_path, "duplicate technique \"" + name + "\"");
  }
  return out;
}

Json to_json(const Note& note) {
  Json j;
  j["string"] = note.string;
  j["fret"] = note.fret;
  j["tied"] = note.tied;
  j["techniques"] = techniques_to_json(note.techniques);
  return j;
}

Json to_json(const Beat& beat) {
  Json j;
  j["duration"] = to_string(beat.duration);
  Json notes = Json::array();
  for (const Note& n : beat.notes) notes.push_back(to_json(n));
  j["notes"] = std::move(notes);
  return j;
}

Json to_json(const Bar& bar) {
  Json j;
  j["timeSignature"] = to_string(bar.time_signature);
  Json beats = Json::array();
  for (const Beat& b : bar.beats) beats.push_back(to_json(b));
  j["beats"] = std::move(beats);
  return j;
}

Json to_json(const Track& track) {
  Json j;
  j["name"] = track.name;
  j["tuning"] = track.tuning.pitches;
  Json bars = Json::array();
  for (const Bar& b : track.bars) bars.push_back(to_json(b));
  j["bars"] = std::move(bars);
  return j;
}

Bar bar_from_json(const Json& j, int index, const Tuning& tuning, const std::string& path) {
  expect_keys(j, path, {"timeSignature", "beats"});
  Bar bar;
  bar.index = index;
  try {
    bar.time_signature = parse_time_signature(string_at(j, "timeSignature", path));
  } catch (const std::invalid_argument& e) {
    fail(path + ".timeSignature", e.what());
  }
  const Json& beats = array_at(j, "beats", path);
  Rational onset{0};
  for (std::size_t b = 0; b < beats.size(); ++b) {
    const std::string beat_path = path + ".beats[" + std::to_string(b) + "]";
    expect_keys(beats[b], beat_path, {"duration", "notes"});
    Beat beat;
    beat.onset = onset;
    beat.duration = duration_at(beats[b], beat_path);
    onset += beat.duration;
    if (onset.denominator() > kMaxRationalTerm || onset > bar.time_signature.capacity() * 2) {
      fail(beat_path, "beats overrun the bar");
    }
    const Json& notes = array_at(beats[b], "notes", beat_path);
    for (std::size_t n = 0; n < notes.size(); ++n) {
      const std::string note_path = beat_path + ".notes[" + std::to_string(n) + "]";
      expect_keys(notes[n], note_path, {"string", "fret", "tied", "techniques"});
      Note note;
      note.string = static_cast<int>(int_at(notes[n], "string", note_path));
      note.fret = static_cast<int>(int_at(notes[n], "fret", note_path));
      note.tied = bool_at(notes[n], "tied", note_path);
      note.techniques = techniques_from_json(notes[n].at("techniques"), note_path + ".techniques");
      beat.notes.push_back(std::move(note));
    }
    bar.beats.push_back(std::move(beat));
  }
  std::vector<Violation> violations;
  validate_bar(bar, tuning, path, violations);
  if (!violations.empty()) fail(violations.front().path, violations.front().rule);
  return bar;
}

Track track_from_json(const Json& j, const std::string& path) {
  expect_keys(j, path, {"name", "tuning", "bars"});
  Track track;
  track.name = string_at(j, "name", path);
  const Json& tuning = array_at(j, "tuning", path);
  if (tuning.empty() || tuning.size() > kMaxStrings) {
    fail(path + ".tuning", "tuning must have 1.." + std::to_string(kMaxStrings) + " strings");
  }
  track.tuning.pitches.clear();
  for (std::size_t i = 0; i < tuning.size(); ++i) {
    const std::string p = path + ".tuning[" + std::to_string(i) + "]";
    track.tuning.pitches.push_back(static_cast<int>(int_value(tuning[i], p, 0, 127)));
  }
  const Json& bars = array_at(j, "bars", path);
  for (std::size_t b = 0; b < bars.size(); ++b) {
    track.bars.push_back(bar_from_json(bars[b], static_cast<int>(b), track.tuning,
                                       path + ".bars[" + std::to_string(b) + "]"));
  }
  return track;
}

std::string write_canonical(const Score& score) {
  Json j;
  j["title"] = score.title;
  Json tracks = Json::array();
  for (const Track& t : score.tracks) tracks.push_back(to_json(t));
  j["tracks"] = std::move(tracks);
  return j.dump(2) + "\n";
}

Score read_canonical(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) {
      message = message.substr(pos);
    }
    throw ParseError(line, column, message, line_text(text, line));
  }
  expect_keys(j, "$", {"title", "tracks"});
  Score score;
  score.title = string_at(j, "title", "$");
  const Json& tracks = array_at(j, "tracks", "$");
  if (tracks.empty()) fail("$.tracks", "score has no tracks");
  for (std::size_t t = 0; t < tracks.size(); ++t) {
    score.tracks.push_back(track_from_json(tracks[t], "$.tracks[" + std::to_string(t) + "]"));
  }
  return score;
}

}  // namespace tabcompare
