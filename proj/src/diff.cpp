#include "tabcompare/diff.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

namespace tabcompare {

namespace {

constexpr std::array<std::string_view, 4> kStatusNames = {"Same", "Changed", "MissingInVersion",
                                                          "ExtraInVersion"};
constexpr std::array<std::string_view, 3> kKindNames = {"Added", "Removed", "Modified"};
constexpr std::array<std::string_view, 3> kSubjectNames = {"note", "rest", "meter"};

NoteState state_of(const Note& note, const Beat& beat) {
  return {note.fret, note.techniques, note.tied, beat.duration};
}

const Note* find_string(const Beat& beat, int string) {
  for (const Note& n : beat.notes) {
    if (n.string == string) return &n;
  }
  return nullptr;
}

// Every edit a beat present on only one side contributes.
void one_sided(const Beat& beat, EditKind kind, std::vector<NoteEdit>& out) {
  auto place = [&](NoteEdit e, EditState s) {
    (kind == EditKind::Added ? e.after : e.before) = std::move(s);
    out.push_back(std::move(e));
  };
  if (beat.is_rest()) {
    place({kind, beat.onset, 0, {}, {}}, RestState{beat.duration});
    return;
  }
  for (const Note& n : beat.notes) place({kind, beat.onset, n.string, {}, {}}, state_of(n, beat));
}

void paired(const Beat& a, const Beat& b, std::vector<NoteEdit>& out) {
  if (a.is_rest() && b.is_rest()) {
    if (a.duration != b.duration) {
      out.push_back({EditKind::Modified, a.onset, 0, RestState{a.duration}, RestState{b.duration}});
    }
    return;
  }
  if (a.is_rest() || b.is_rest()) {
    one_sided(a, EditKind::Removed, out);
    one_sided(b, EditKind::Added, out);
    return;
  }
  for (const Note& n : a.notes) {
    const Note* m = find_string(b, n.string);
    if (!m) {
      out.push_back({EditKind::Removed, a.onset, n.string, state_of(n, a), std::nullopt});
    } else {
      const NoteState before = state_of(n, a);
      const NoteState after = state_of(*m, b);
      if (before != after) out.push_back({EditKind::Modified, a.onset, n.string, before, after});
    }
  }
  for (const Note& m : b.notes) {
    if (!find_string(a, m.string)) {
      out.push_back({EditKind::Added, b.onset, m.string, std::nullopt, state_of(m, b)});
    }
  }
}

}  // namespace

std::string_view status_name(ColumnStatus s) { return kStatusNames[static_cast<std::size_t>(s)]; }

std::optional<ColumnStatus> status_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    if (kStatusNames[i] == name) return static_cast<ColumnStatus>(i);
  }
  return std::nullopt;
}

std::string_view edit_kind_name(EditKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<EditKind> edit_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<EditKind>(i);
  }
  return std::nullopt;
}

std::string_view edit_subject_name(EditSubject s) {
  return kSubjectNames[static_cast<std::size_t>(s)];
}

EditSubject NoteEdit::subject() const {
  const auto& state = before ? before : after;
  return state ? static_cast<EditSubject>(state->index()) : EditSubject::Note;
}

bool bar_equal(const Bar& a, const Bar& b) {
  return a.time_signature == b.time_signature && a.beats == b.beats;
}

std::vector<NoteEdit> bar_diff(const Bar& ref_bar, const Bar& other_bar) {
  std::vector<NoteEdit> out;
  if (ref_bar.time_signature != other_bar.time_signature) {
    out.push_back({EditKind::Modified, Rational(0), 0, ref_bar.time_signature,
                   other_bar.time_signature});
  }
  auto a = ref_bar.beats.begin();
  auto b = other_bar.beats.begin();
  while (a != ref_bar.beats.end() || b != other_bar.beats.end()) {
    if (b == other_bar.beats.end() || (a != ref_bar.beats.end() && a->onset < b->onset)) {
      one_sided(*a++, EditKind::Removed, out);
    } else if (a == ref_bar.beats.end() || b->onset < a->onset) {
      one_sided(*b++, EditKind::Added, out);
    } else {
      paired(*a++, *b++, out);
    }
  }
  // (onset, string, subject) is unique per edit, so kind never decides the order.
  std::stable_sort(out.begin(), out.end(), [](const NoteEdit& x, const NoteEdit& y) {
    return std::make_tuple(x.onset, x.string, static_cast<int>(x.subject()),
                           static_cast<int>(x.kind)) <
           std::make_tuple(y.onset, y.string, static_cast<int>(y.subject()),
                           static_cast<int>(y.kind));
  });
  return out;
}

std::vector<std::vector<CellStatus>> column_statuses(const AlignmentGrid& grid,
                                                     std::span<const Track> versions) {
  const std::size_t ref = grid.reference_version;
  std::vector<std::vector<CellStatus>> out(grid.num_versions());
  for (std::size_t v = 0; v < grid.num_versions(); ++v) {
    out[v].resize(grid.num_columns());
    for (std::size_t c = 0; c < grid.num_columns(); ++c) {
      const BarRef& mine = grid.rows[v][c];
      const BarRef& theirs = grid.rows[ref][c];
      CellStatus& cell = out[v][c];
      if (!mine) {
        cell.status = ColumnStatus::MissingInVersion;
      } else if (!theirs) {
        cell.status = ColumnStatus::ExtraInVersion;
      } else {
        const Bar& ref_bar = versions[ref].bars.at(*theirs);
        const Bar& bar = versions[v].bars.at(*mine);
        if (v == ref || bar_equal(ref_bar, bar)) {
          cell.status = ColumnStatus::Same;
        } else {
          cell.status = ColumnStatus::Changed;
          cell.edits = bar_diff(ref_bar, bar);
        }
      }
    }
  }
  return out;
}

}  // namespace tabcompare
