#include "oracles.hpp"

#include <limits>
#include <map>

namespace tabtest {

using namespace tabcompare;

namespace {

struct Enumerator {
  std::size_t n, m;
  const std::function<double(std::size_t, std::size_t)>& cost;
  double gap;
  BruteForceResult result;
  std::vector<AlignedPair> path;

  void walk(std::size_t i, std::size_t j, double acc) {
    if (i == n && j == m) {
      ++result.alignments;
      if (acc < result.min_cost) {
        result.min_cost = acc;
        result.optimal.clear();
      }
      if (acc == result.min_cost) result.optimal.push_back(path);
      return;
    }
    if (i < n && j < m) step({i, j}, i + 1, j + 1, acc + cost(i, j));
    if (i < n) step({i, std::nullopt}, i + 1, j, acc + gap);
    if (j < m) step({std::nullopt, j}, i, j + 1, acc + gap);
  }

  void step(AlignedPair column, std::size_t i, std::size_t j, double acc) {
    path.push_back(column);
    walk(i, j, acc);
    path.pop_back();
  }
};

}  // namespace

BruteForceResult brute_force_align(std::size_t ref_len, std::size_t other_len,
                                   const std::function<double(std::size_t, std::size_t)>& cost,
                                   double gap_cost) {
  Enumerator e{ref_len, other_len, cost, gap_cost, {}, {}};
  e.result.min_cost = std::numeric_limits<double>::infinity();
  e.walk(0, 0, 0.0);
  return e.result;
}

double alignment_cost(const std::vector<AlignedPair>& columns,
                      const std::function<double(std::size_t, std::size_t)>& cost, double gap_cost) {
  double acc = 0.0;
  for (const AlignedPair& c : columns) acc = acc + ((c.ref && c.other) ? cost(*c.ref, *c.other) : gap_cost);
  return acc;
}

namespace {

struct WorkBeat {
  std::optional<Rational> rest;                 // set for a rest beat
  std::map<int, NoteState> notes;               // by string
};

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

bool apply_one(std::map<Rational, WorkBeat>& beats, TimeSignature& meter, const NoteEdit& e, std::string* why) {
  const std::string where = "edit at " + to_string(e.onset) + " string " + std::to_string(e.string);
  switch (e.subject()) {
    case EditSubject::Meter: {
      if (e.before && std::get<TimeSignature>(*e.before) != meter) return fail(why, where + ": meter mismatch");
      if (!e.after) return fail(why, where + ": meter edit without result");
      meter = std::get<TimeSignature>(*e.after);
      return true;
    }
    case EditSubject::Rest: {
      WorkBeat& beat = beats[e.onset];
      if (e.before) {
        if (beat.rest != std::get<RestState>(*e.before).duration) return fail(why, where + ": rest mismatch");
        beat.rest.reset();
      } else if (beat.rest) {
        return fail(why, where + ": rest already present");
      }
      if (e.after) beat.rest = std::get<RestState>(*e.after).duration;
      return true;
    }
    case EditSubject::Note: {
      WorkBeat& beat = beats[e.onset];
      auto it = beat.notes.find(e.string);
      if (e.before) {
        if (it == beat.notes.end() || it->second != std::get<NoteState>(*e.before)) {
          return fail(why, where + ": note mismatch");
        }
        beat.notes.erase(it);
      } else if (it != beat.notes.end()) {
        return fail(why, where + ": note already present");
      }
      if (e.after) beat.notes[e.string] = std::get<NoteState>(*e.after);
      return true;
    }
  }
  return fail(why, where + ": unknown subject");
}

}  // namespace

std::optional<Bar> apply_edits(const Bar& bar, const std::vector<NoteEdit>& edits, std::string* why) {
  std::map<Rational, WorkBeat> beats;
  for (const Beat& b : bar.beats) {
    WorkBeat& w = beats[b.onset];
    if (b.notes.empty()) w.rest = b.duration;
    for (const Note& n : b.notes) w.notes[n.string] = {n.fret, n.techniques, n.tied, b.duration};
  }
  TimeSignature meter = bar.time_signature;
  for (const NoteEdit& e : edits) {
    if (!apply_one(beats, meter, e, why)) return std::nullopt;
  }
  Bar out;
  out.index = bar.index;
  out.time_signature = meter;
  for (const auto& [onset, w] : beats) {
    if (!w.rest && w.notes.empty()) continue;
    if (w.rest && !w.notes.empty()) {
      fail(why, "beat at " + to_string(onset) + " is both rest and notes");
      return std::nullopt;
    }
    Beat beat;
    beat.onset = onset;
    if (w.rest) {
      beat.duration = *w.rest;
    } else {
      beat.duration = w.notes.begin()->second.duration;
      for (const auto& [string, state] : w.notes) {
        if (state.duration != beat.duration) {
          fail(why, "beat at " + to_string(onset) + " has notes of different durations");
          return std::nullopt;
        }
        beat.notes.push_back({string, state.fret, state.techniques, state.tied});
      }
    }
    out.beats.push_back(std::move(beat));
  }
  return out;
}

}  // namespace tabtest
