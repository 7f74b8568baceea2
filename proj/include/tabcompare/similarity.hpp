#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tabcompare/features.hpp"

namespace tabcompare {

/// Dense square matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

/// "#RRGGBB", upper-case hex.
std::string to_hex(Rgb c);
/// Accepts "#RRGGBB" (either case); throws std::invalid_argument otherwise.
Rgb parse_hex(std::string_view text);

struct ColorStop {
  double t = 0.0;
  Rgb rgb;

  bool operator==(const ColorStop&) const = default;
};

/// Piecewise-linear color ramp over [0, 1].
class ColorMap {
 public:
  /// Throws std::invalid_argument unless there are >= 2 stops, the first at
  /// t = 0, the last at t = 1, strictly increasing in between.
  explicit ColorMap(std::vector<ColorStop> stops);

  /// Dark violet to yellow, five stops.
  static ColorMap default_map();

  const std::vector<ColorStop>& stops() const { return stops_; }
  bool operator==(const ColorMap&) const = default;

 private:
  std::vector<ColorStop> stops_;
};

/// Per-channel linear interpolation between the bracketing stops, rounded
/// half up. `t` outside [0, 1] is clamped (and asserts in debug builds).
Rgb color_of(double t, const ColorMap& map);

SquareMatrix distance_matrix(std::span<const BarFeature> features);

struct MdsOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
};

/// Raw classical-MDS coordinates (sqrt(lambda1) * v1), before normalization.
/// All zero when the top eigenvalue is <= 1e-12. Throws std::invalid_argument
/// for a non-symmetric matrix or a negative diagonal.
std::vector<double> mds_embed_1d(const SquareMatrix& distances, const MdsOptions& options = {});

/// mds_embed_1d, then min-max normalized to [0, 1] (all equal -> 0.5) and
/// oriented so that coordinate[0] <= coordinate[n-1].
std::vector<double> mds_1d(const SquareMatrix& distances, const MdsOptions& options = {});

}  // namespace tabcompare
