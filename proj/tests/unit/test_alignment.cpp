#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tabcompare/alignment.hpp"

using namespace tabcompare;

namespace {

const std::nullopt_t GAP = std::nullopt;

PairAlignment identity(std::size_t n) {
  PairAlignment p;
  for (std::size_t i = 0; i < n; ++i) p.columns.push_back({i, i});
  return p;
}

// Strips gaps from one side of the alignment.
std::vector<std::size_t> side(const PairAlignment& p, bool ref) {
  std::vector<std::size_t> out;
  for (const AlignedPair& c : p.columns) {
    const BarRef& r = ref ? c.ref : c.other;
    if (r) out.push_back(*r);
  }
  return out;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("choose_reference picks the longest, first on ties") {
  const std::vector<std::size_t> a{12, 16, 16};
  const std::vector<std::size_t> b{5};
  const std::vector<std::size_t> c{8, 8};
  CHECK(choose_reference(a) == 1);
  CHECK(choose_reference(b) == 0);
  CHECK(choose_reference(c) == 0);
}

TEST_CASE("identical sequences align diagonally at zero cost") {
  const Track t = tabtest::track_of("0.1.1 | 3.2.1 | r.1 | (0.1 0.2).1");
  const PairAlignment p = align_pair(t, t, {});
  CHECK(p.columns == identity(4).columns);
  CHECK(p.total_cost == 0.0);
}

TEST_CASE("a missing middle element becomes a gap") {
  // A=0, B=1, C=2 in ref; other = [A, C]
  auto cost = [](std::size_t r, std::size_t o) {
    const std::size_t other_id = o == 0 ? 0 : 2;
    return r == other_id ? 0.0 : 0.9;
  };
  const PairAlignment p = align_sequences(3, 2, cost, {0.75});
  CHECK(p.columns == std::vector<AlignedPair>{{0, 0}, {1, GAP}, {2, 1}});
  CHECK(p.total_cost == 0.75);
  const auto oracle = tabtest::brute_force_align(3, 2, cost, 0.75);
  CHECK(oracle.min_cost == 0.75);
}

TEST_CASE("a cheap substitution beats two gaps") {
  const PairAlignment p = align_sequences(1, 1, [](std::size_t, std::size_t) { return 0.4; }, {0.75});
  CHECK(p.columns == std::vector<AlignedPair>{{0, 0}});
  CHECK(p.total_cost == 0.4);
}

TEST_CASE("ties prefer substitution, then a gap in the other sequence") {
  // substitution 1.5 ties with two gaps
  const PairAlignment sub = align_sequences(1, 1, [](std::size_t, std::size_t) { return 1.5; }, {0.75});
  CHECK(sub.columns == std::vector<AlignedPair>{{0, 0}});
  const PairAlignment gaps = align_sequences(1, 1, [](std::size_t, std::size_t) { return 1.6; }, {0.75});
  // the backtrace runs from the end, so the preferred gap-in-other is the last column
  CHECK(gaps.columns == std::vector<AlignedPair>{{GAP, 0}, {0, GAP}});
}

TEST_CASE("empty sides") {
  const auto cost = [](std::size_t, std::size_t) { return 0.0; };
  CHECK(align_sequences(0, 0, cost, {}).columns.empty());
  CHECK(align_sequences(2, 0, cost, {}).columns == std::vector<AlignedPair>{{0, GAP}, {1, GAP}});
  CHECK(align_sequences(0, 2, cost, {}).total_cost == 1.5);
}

TEST_CASE("alignment matches brute-force enumeration on random bar sequences") {
  tabtest::Rng rng(21);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_real_distribution<double> gap(0.1, 1.2);
  const Tuning standard;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Bar> pool;
    for (int i = 0; i < 4; ++i) pool.push_back(tabtest::random_bar(rng));
    auto pick = [&](std::size_t n) {
      std::vector<BarFeature> out;
      for (std::size_t i = 0; i < n; ++i) {
        const Bar& base = pool[rng() % pool.size()];
        out.push_back(bar_feature(rng() % 3 == 0 ? tabtest::mutate_bar(rng, base) : base, standard));
      }
      return out;
    };
    const auto ref = pick(std::size_t(len(rng)));
    const auto other = pick(std::size_t(len(rng)));
    const AlignParams params{gap(rng)};
    const PairAlignment p = align_features(ref, other, params);
    auto cost = [&](std::size_t i, std::size_t j) { return bar_distance(ref[i], other[j]); };
    const auto oracle = tabtest::brute_force_align(ref.size(), other.size(), cost, params.gap_cost);
    CHECK(p.total_cost == oracle.min_cost);
    CHECK(tabtest::alignment_cost(p.columns, cost, params.gap_cost) == p.total_cost);
    CHECK(std::find(oracle.optimal.begin(), oracle.optimal.end(), p.columns) != oracle.optimal.end());
    CHECK(side(p, true) == iota(ref.size()));
    CHECK(side(p, false) == iota(other.size()));
    CHECK(check_pair(ref.size(), p) == other.size());
  }
}

TEST_CASE("check_pair rejects malformed alignments") {
  PairAlignment p;
  p.columns = {{GAP, GAP}};
  CHECK_THROWS_AS(check_pair(0, p), AlignmentError);
  p.columns = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(check_pair(2, p), AlignmentError);
  p.columns = {{0, 0}};
  CHECK_THROWS_AS(check_pair(2, p), AlignmentError);
  p.columns = {{0, 1}};
  CHECK_THROWS_AS(check_pair(1, p), AlignmentError);
}

TEST_CASE("merge without insertions keeps one column per reference bar") {
  PairAlignment missing;
  missing.columns = {{0, 0}, {1, GAP}, {2, 1}};
  const std::vector<PairAlignment> pairs{identity(3), identity(3), missing};
  const AlignmentGrid grid = merge_alignments(3, pairs, 0);
  CHECK(grid.num_columns() == 3);
  CHECK(grid.num_versions() == 3);
  CHECK(grid.rows[0] == std::vector<BarRef>{0, 1, 2});
  CHECK(grid.rows[1] == std::vector<BarRef>{0, 1, 2});
  CHECK(grid.rows[2] == std::vector<BarRef>{0, GAP, 1});
}

TEST_CASE("two extra bars after reference bar 3") {
  PairAlignment extra;
  extra.columns = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {GAP, 4}, {GAP, 5}, {4, 6}, {5, 7}};
  const std::vector<PairAlignment> pairs{identity(6), identity(6), extra};
  const AlignmentGrid grid = merge_alignments(6, pairs, 0);
  REQUIRE(grid.num_columns() == 8);
  CHECK(grid.rows[0] == std::vector<BarRef>{0, 1, 2, 3, GAP, GAP, 4, 5});
  CHECK(grid.rows[1] == std::vector<BarRef>{0, 1, 2, 3, GAP, GAP, 4, 5});
  CHECK(grid.rows[2] == std::vector<BarRef>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("insertions at the same spot are ordered by version") {
  PairAlignment v1;
  v1.columns = {{0, 0}, {GAP, 1}, {1, 2}, {2, 3}};
  PairAlignment v2;
  v2.columns = {{0, 0}, {GAP, 1}, {1, 2}, {2, 3}};
  const std::vector<PairAlignment> pairs{identity(3), v1, v2};
  const AlignmentGrid grid = merge_alignments(3, pairs, 0);
  REQUIRE(grid.num_columns() == 5);
  CHECK(grid.rows[0] == std::vector<BarRef>{0, GAP, GAP, 1, 2});
  CHECK(grid.rows[1] == std::vector<BarRef>{0, 1, GAP, 2, 3});
  CHECK(grid.rows[2] == std::vector<BarRef>{0, GAP, 1, 2, 3});
}

TEST_CASE("insertions before the first bar and a non-zero reference") {
  PairAlignment v0;
  v0.columns = {{GAP, 0}, {0, 1}, {1, 2}};
  const std::vector<PairAlignment> pairs{v0, identity(2)};
  const AlignmentGrid grid = merge_alignments(2, pairs, 1);
  CHECK(grid.reference_version == 1);
  CHECK(grid.rows[0] == std::vector<BarRef>{0, 1, 2});
  CHECK(grid.rows[1] == std::vector<BarRef>{GAP, 0, 1});
}

TEST_CASE("merge rejects inconsistent pairs") {
  PairAlignment bad;
  bad.columns = {{0, 0}};
  const std::vector<PairAlignment> pairs{identity(2), bad};
  CHECK_THROWS_AS(merge_alignments(2, pairs, 0), AlignmentError);
}

TEST_CASE("merged grids satisfy the grid invariants") {
  tabtest::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t versions = 2 + rng() % 3;
    std::vector<Track> tracks;
    for (std::size_t v = 0; v < versions; ++v) tracks.push_back(tabtest::random_track(rng, 1 + int(rng() % 6)));
    const std::size_t ref = choose_reference(tracks);
    std::vector<PairAlignment> pairs;
    for (std::size_t v = 0; v < versions; ++v) pairs.push_back(align_pair(tracks[ref], tracks[v], {}));
    const AlignmentGrid grid = merge_alignments(tracks[ref].bars.size(), pairs, ref);
    for (std::size_t v = 0; v < versions; ++v) {
      std::vector<std::size_t> seen;
      for (const BarRef& r : grid.rows[v]) {
        if (r) seen.push_back(*r);
      }
      CHECK(seen == iota(tracks[v].bars.size()));
    }
    for (std::size_t c = 0; c < grid.num_columns(); ++c) {
      bool any = false;
      for (std::size_t v = 0; v < versions; ++v) any = any || grid.rows[v][c].has_value();
      CHECK(any);
    }
  }
}
