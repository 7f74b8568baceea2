#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tabcompare/features.hpp"
#include "tabcompare/score.hpp"

namespace tabcompare {

/// Bar index, or nullopt for a gap (an inserted empty bar).
using BarRef = std::optional<std::size_t>;

struct AlignParams {
  double gap_cost = 0.75;

  bool operator==(const AlignParams&) const = default;
};

struct AlignedPair {
  BarRef ref;
  BarRef other;

  bool operator==(const AlignedPair&) const = default;
};

struct PairAlignment {
  std::vector<AlignedPair> columns;
  double total_cost = 0.0;

  bool operator==(const PairAlignment&) const = default;
};

/// Global column layout. rows[v][c] is the bar of version v shown in column c.
struct AlignmentGrid {
  std::size_t reference_version = 0;
  std::vector<std::vector<BarRef>> rows;

  std::size_t num_columns() const { return rows.empty() ? 0 : rows.front().size(); }
  std::size_t num_versions() const { return rows.size(); }
  bool operator==(const AlignmentGrid&) const = default;
};

class AlignmentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Index of the version with the most bars; ties go to the lowest index.
std::size_t choose_reference(std::span<const std::size_t> bar_counts);
std::size_t choose_reference(std::span<const Track> versions);

using SubstitutionCost = std::function<double(std::size_t ref, std::size_t other)>;

/// Needleman-Wunsch global alignment minimizing substitution costs plus
/// gap_cost per gap. Backtrace prefers substitution, then a gap in `other`,
/// then a gap in `ref`.
PairAlignment align_sequences(std::size_t ref_len, std::size_t other_len,
                              const SubstitutionCost& cost, const AlignParams& params);

PairAlignment align_features(std::span<const BarFeature> ref, std::span<const BarFeature> other,
                             const AlignParams& params);

PairAlignment align_pair(const Track& ref, const Track& other, const AlignParams& params,
                         const FeatureWeights& weights = {});

/// Throws AlignmentError unless the pair is a valid alignment of a
/// `ref_len`-long reference. Returns the other sequence's length.
std::size_t check_pair(std::size_t ref_len, const PairAlignment& pair);

/// Merges per-version alignments against the same reference into one grid.
/// `pairs[v]` aligns version v to the reference; `pairs[reference]` is ignored.
/// Extra bars of a version open insertion columns right after the reference
/// column that precedes them; insertions at the same spot stay separate and
/// are ordered by version index.
AlignmentGrid merge_alignments(std::size_t ref_len, std::span<const PairAlignment> pairs,
                               std::size_t reference);

}  // namespace tabcompare
