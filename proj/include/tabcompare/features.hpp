#pragma once

#include <array>

#include "tabcompare/score.hpp"

namespace tabcompare {

inline constexpr std::size_t kChromaBins = 12;
inline constexpr std::size_t kOnsetSlots = 16;
inline constexpr std::size_t kFeatureDims = kChromaBins + kOnsetSlots;

struct FeatureWeights {
  double chroma = 1.0;
  double onset = 1.0;

  bool operator==(const FeatureWeights&) const = default;
};

/// Bar descriptor used for alignment cost and similarity coloring.
/// `combined` has unit L2 norm, or is all zero for a bar of rests.
struct BarFeature {
  std::array<double, kChromaBins> chroma{};
  std::array<double, kOnsetSlots> onsets{};
  std::array<double, kFeatureDims> combined{};

  bool is_zero() const;
  bool operator==(const BarFeature&) const = default;
};

/// Duration-weighted pitch-class histogram, L1-normalized (zero for rest bars).
std::array<double, kChromaBins> chroma_vector(const Bar& bar, const Tuning& tuning);

/// Note count per sixteenth-of-bar slot, L1-normalized (zero for rest bars).
std::array<double, kOnsetSlots> onset_vector(const Bar& bar, const TimeSignature& ts);

BarFeature bar_feature(const Bar& bar, const Tuning& tuning, const FeatureWeights& weights = {});

/// 0 for identical features, 1 when exactly one bar is silent, 1 - cosine otherwise.
double bar_distance(const BarFeature& a, const BarFeature& b);

}  // namespace tabcompare
