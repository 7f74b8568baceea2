#include "tabcompare/alignment.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tabcompare {

std::size_t choose_reference(std::span<const std::size_t> bar_counts) {
  if (bar_counts.empty()) throw std::invalid_argument("choose_reference: no versions");
  std::size_t best = 0;
  for (std::size_t i = 1; i < bar_counts.size(); ++i) {
    if (bar_counts[i] > bar_counts[best]) best = i;
  }
  return best;
}

std::size_t choose_reference(std::span<const Track> versions) {
  std::vector<std::size_t> counts;
  counts.reserve(versions.size());
  for (const Track& t : versions) counts.push_back(t.bars.size());
  return choose_reference(counts);
}

PairAlignment align_sequences(std::size_t ref_len, std::size_t other_len,
                              const SubstitutionCost& cost, const AlignParams& params) {
  if (!(params.gap_cost > 0.0)) throw std::invalid_argument("gap_cost must be positive");
  const double gap = params.gap_cost;
  const std::size_t width = other_len + 1;
  std::vector<double> table((ref_len + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return table[i * width + j]; };

  // Costs accumulate along the path from the start, so sums here match a
  // forward enumeration of the same path exactly.
  at(0, 0) = 0.0;
  for (std::size_t i = 1; i <= ref_len; ++i) at(i, 0) = at(i - 1, 0) + gap;
  for (std::size_t j = 1; j <= other_len; ++j) at(0, j) = at(0, j - 1) + gap;
  std::vector<double> sub((ref_len + 1) * width, 0.0);
  for (std::size_t i = 1; i <= ref_len; ++i) {
    for (std::size_t j = 1; j <= other_len; ++j) {
      const double s = cost(i - 1, j - 1);
      sub[i * width + j] = s;
      at(i, j) = std::min({at(i - 1, j - 1) + s, at(i - 1, j) + gap, at(i, j - 1) + gap});
    }
  }

  PairAlignment out;
  out.total_cost = at(ref_len, other_len);
  std::size_t i = ref_len;
  std::size_t j = other_len;
  while (i > 0 || j > 0) {
    const double here = at(i, j);
    if (i > 0 && j > 0 && here == at(i - 1, j - 1) + sub[i * width + j]) {
      out.columns.push_back({i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && here == at(i - 1, j) + gap) {
      out.columns.push_back({i - 1, std::nullopt});
      --i;
    } else {
      out.columns.push_back({std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(out.columns.begin(), out.columns.end());
  return out;
}

PairAlignment align_features(std::span<const BarFeature> ref, std::span<const BarFeature> other,
                             const AlignParams& params) {
  return align_sequences(
      ref.size(), other.size(),
      [&](std::size_t i, std::size_t j) { return bar_distance(ref[i], other[j]); }, params);
}

PairAlignment align_pair(const Track& ref, const Track& other, const AlignParams& params,
                         const FeatureWeights& weights) {
  auto features = [&](const Track& t) {
    std::vector<BarFeature> out;
    out.reserve(t.bars.size());
    for (const Bar& b : t.bars) out.push_back(bar_feature(b, t.tuning, weights));
    return out;
  };
  const auto ref_features = features(ref);
  const auto other_features = features(other);
  return align_features(ref_features, other_features, params);
}

std::size_t check_pair(std::size_t ref_len, const PairAlignment& pair) {
  std::size_t next_ref = 0;
  std::size_t next_other = 0;
  for (const AlignedPair& col : pair.columns) {
    if (!col.ref && !col.other) throw AlignmentError("alignment has a gap/gap column");
    if (col.ref) {
      if (*col.ref != next_ref) throw AlignmentError("reference indices out of order");
      ++next_ref;
    }
    if (col.other) {
      if (*col.other != next_other) throw AlignmentError("version indices out of order");
      ++next_other;
    }
  }
  if (next_ref != ref_len) {
    throw AlignmentError("alignment covers " + std::to_string(next_ref) + " of " +
                         std::to_string(ref_len) + " reference bars");
  }
  return next_other;
}

AlignmentGrid merge_alignments(std::size_t ref_len, std::span<const PairAlignment> pairs,
                               std::size_t reference) {
  const std::size_t num_versions = pairs.size();
  if (reference >= num_versions) throw AlignmentError("reference index out of range");

  // Reference-column cells per version, and insertion runs keyed by the
  // reference column they follow (0 = before the first reference bar,
  // k = after reference bar k-1).
  std::vector<std::vector<BarRef>> at_ref(num_versions, std::vector<BarRef>(ref_len));
  struct Insertion {
    std::size_t version;
    std::vector<std::size_t> bars;
  };
  std::vector<std::vector<Insertion>> insertions(ref_len + 1);

  for (std::size_t r = 0; r < ref_len; ++r) at_ref[reference][r] = r;
  for (std::size_t v = 0; v < num_versions; ++v) {
    if (v == reference) continue;
    check_pair(ref_len, pairs[v]);
    std::size_t slot = 0;
    bool in_run = false;
    for (const AlignedPair& col : pairs[v].columns) {
      if (col.ref) {
        at_ref[v][*col.ref] = col.other;
        slot = *col.ref + 1;
        in_run = false;
      } else {
        if (!in_run) insertions[slot].push_back({v, {}});
        insertions[slot].back().bars.push_back(*col.other);
        in_run = true;
      }
    }
  }

  AlignmentGrid grid;
  grid.reference_version = reference;
  grid.rows.assign(num_versions, {});
  auto emit_insertions = [&](std::size_t slot) {
    for (const Insertion& ins : insertions[slot]) {
      for (std::size_t bar : ins.bars) {
        for (std::size_t v = 0; v < num_versions; ++v) {
          grid.rows[v].push_back(v == ins.version ? BarRef(bar) : std::nullopt);
        }
      }
    }
  };
  emit_insertions(0);
  for (std::size_t r = 0; r < ref_len; ++r) {
    for (std::size_t v = 0; v < num_versions; ++v) grid.rows[v].push_back(at_ref[v][r]);
    emit_insertions(r + 1);
  }
  return grid;
}

}  // namespace tabcompare
