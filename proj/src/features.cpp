#include "tabcompare/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tabcompare {

namespace {

template <std::size_t N>
void normalize_l1(std::array<double, N>& v) {
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (sum > 0.0) {
    for (double& x : v) x /= sum;
  }
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

bool BarFeature::is_zero() const {
  return std::all_of(combined.begin(), combined.end(), [](double x) { return x == 0.0; });
}

std::array<double, kChromaBins> chroma_vector(const Bar& bar, const Tuning& tuning) {
  std::array<double, kChromaBins> chroma{};
  for (const Beat& beat : bar.beats) {
    const double mass = to_double(beat.duration);
    for (const Note& note : beat.notes) {
      chroma[static_cast<std::size_t>(pitch_of(note, tuning) % 12)] += mass;
    }
  }
  normalize_l1(chroma);
  return chroma;
}

std::array<double, kOnsetSlots> onset_vector(const Bar& bar, const TimeSignature& ts) {
  std::array<double, kOnsetSlots> onsets{};
  const Rational capacity = ts.capacity();
  for (const Beat& beat : bar.beats) {
    if (beat.notes.empty()) continue;
    // floor(16 * onset / capacity), computed exactly
    const Rational position = Rational(static_cast<std::int64_t>(kOnsetSlots)) * beat.onset / capacity;
    auto slot = static_cast<std::size_t>(std::max<std::int64_t>(
        0, position.numerator() / position.denominator()));
    slot = std::min(slot, kOnsetSlots - 1);
    onsets[slot] += static_cast<double>(beat.notes.size());
  }
  normalize_l1(onsets);
  return onsets;
}

BarFeature bar_feature(const Bar& bar, const Tuning& tuning, const FeatureWeights& weights) {
  BarFeature f;
  f.chroma = chroma_vector(bar, tuning);
  f.onsets = onset_vector(bar, bar.time_signature);
  for (std::size_t i = 0; i < kChromaBins; ++i) f.combined[i] = weights.chroma * f.chroma[i];
  for (std::size_t i = 0; i < kOnsetSlots; ++i) {
    f.combined[kChromaBins + i] = weights.onset * f.onsets[i];
  }
  double norm = 0.0;
  for (double x : f.combined) norm += x * x;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& x : f.combined) x /= norm;
  }
  return f;
}

double bar_distance(const BarFeature& a, const BarFeature& b) {
  const bool a_zero = a.is_zero();
  const bool b_zero = b.is_zero();
  if (a_zero && b_zero) return 0.0;
  if (a_zero != b_zero) return 1.0;
  if (a.combined == b.combined) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < kFeatureDims; ++i) dot += a.combined[i] * b.combined[i];
  return std::clamp(1.0 - dot, 0.0, 2.0);
}

}  // namespace tabcompare
