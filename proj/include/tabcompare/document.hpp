#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tabcompare/alignment.hpp"
#include "tabcompare/canonical.hpp"
#include "tabcompare/diff.hpp"
#include "tabcompare/errors.hpp"
#include "tabcompare/features.hpp"
#include "tabcompare/metrics.hpp"
#include "tabcompare/score.hpp"
#include "tabcompare/similarity.hpp"

namespace tabcompare {

inline constexpr std::string_view kSchemaVersion = "1";

struct VersionSource {
  std::string source;  // content digest of the input file
  std::string name;    // display name, usually the file name
  int track = 0;

  bool operator==(const VersionSource&) const = default;
};

struct RunOptions {
  std::vector<VersionSource> versions;
  AlignParams align;
  FeatureWeights weights;
  double scale_length_mm = kDefaultScaleLengthMm;
  ColorMap colormap = ColorMap::default_map();

  bool operator==(const RunOptions&) const = default;
};

struct VersionInfo {
  std::string name;
  std::string source;
  int track_index = 0;
  double alignment_cost = 0.0;
  Track track;  // full bar content for rendering

  bool operator==(const VersionInfo&) const = default;
};

struct Similarity {
  double coordinate = 0.0;
  Rgb color;

  bool operator==(const Similarity&) const = default;
};

struct Cell {
  BarRef bar;
  std::optional<BarMetrics> metrics;
  std::optional<Similarity> similarity;
  ColumnStatus status = ColumnStatus::Same;
  std::vector<NoteEdit> edits;

  bool operator==(const Cell&) const = default;
};

struct Normalization {
  int max_density = 0;
  int max_fret_span_frets = 0;
  double max_fret_span_mm = 0.0;

  bool operator==(const Normalization&) const = default;
};

/// Everything the views need, self-contained. All reals are rounded to six
/// decimals when the document is built, so serialization is byte-stable.
struct ComparisonDocument {
  std::string schema_version{kSchemaVersion};
  RunOptions options;
  std::vector<VersionInfo> versions;
  std::size_t reference_index = 0;
  AlignmentGrid grid;
  std::vector<std::vector<Cell>> cells;  // [version][column]
  Normalization normalization;

  bool operator==(const ComparisonDocument&) const = default;
};

double round6(double x);

/// Throws ConfigError when the options do not fit the scores.
/// `scores[i]` is the parsed input named by `options.versions[i]`.
void check_options(std::span<const Score> scores, const RunOptions& options);

/// Runs the pipeline: track selection, reference choice, pairwise alignment,
/// grid merge, per-bar metrics, similarity coloring over all bars, and
/// statuses against the reference.
ComparisonDocument build_document(std::span<const Score> scores, const RunOptions& options);

Json options_to_json(const RunOptions& options);
/// Reads run options; missing numeric fields and colormap take their defaults.
RunOptions options_from_json(const Json& j);

Json to_json(const ComparisonDocument& doc);
std::string write_document(const ComparisonDocument& doc);

/// Strict reader. Throws ParseError with a JSON path on any structural problem.
ComparisonDocument document_from_json(const Json& j);
ComparisonDocument read_document(std::string_view text);

/// Cross-field invariants of a document (grid shape, cell/grid agreement,
/// statuses, colors). Returns human-readable problems; empty when consistent.
std::vector<std::string> check_document(const ComparisonDocument& doc);

/// Strict read plus check_document; never throws.
std::vector<std::string> validate_document_text(std::string_view text);

}  // namespace tabcompare
