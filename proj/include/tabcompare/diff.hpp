#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "tabcompare/alignment.hpp"
#include "tabcompare/score.hpp"

namespace tabcompare {

enum class ColumnStatus { Same, Changed, MissingInVersion, ExtraInVersion };

std::string_view status_name(ColumnStatus s);
std::optional<ColumnStatus> status_from_name(std::string_view name);

enum class EditKind { Added, Removed, Modified };

std::string_view edit_kind_name(EditKind k);
std::optional<EditKind> edit_kind_from_name(std::string_view name);

/// A note as it sits in its beat.
struct NoteState {
  int fret = 0;
  TechniqueSet techniques;
  bool tied = false;
  Rational duration{1, 4};  // of the enclosing beat

  bool operator==(const NoteState&) const = default;
};

/// A note-less beat.
struct RestState {
  Rational duration{1, 4};

  bool operator==(const RestState&) const = default;
};

/// What an edit is about: a note on a string, a rest beat, or the bar's meter.
using EditState = std::variant<NoteState, RestState, TimeSignature>;

enum class EditSubject { Note, Rest, Meter };

std::string_view edit_subject_name(EditSubject s);

struct NoteEdit {
  EditKind kind = EditKind::Modified;
  Rational onset{0};
  int string = 0;  // 0 for rest and meter edits
  std::optional<EditState> before;
  std::optional<EditState> after;

  EditSubject subject() const;
  bool operator==(const NoteEdit&) const = default;
};

/// Same meter and identical beats (onset, duration, string/fret/techniques/tie).
bool bar_equal(const Bar& a, const Bar& b);

/// Edits turning `ref_bar` into `other_bar`. Beats are paired by onset and
/// notes by string. Sorted by (onset, string, subject). Empty iff bar_equal.
std::vector<NoteEdit> bar_diff(const Bar& ref_bar, const Bar& other_bar);

struct CellStatus {
  ColumnStatus status = ColumnStatus::Same;
  std::vector<NoteEdit> edits;  // only for Changed

  bool operator==(const CellStatus&) const = default;
};

/// statuses[v][c] for every version row of the grid, diffed against the reference row.
std::vector<std::vector<CellStatus>> column_statuses(const AlignmentGrid& grid,
                                                     std::span<const Track> versions);

}  // namespace tabcompare
