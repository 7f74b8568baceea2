#include "tabcompare/similarity.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>

namespace tabcompare {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint8_t lerp_channel(std::uint8_t a, std::uint8_t b, double u) {
  const double value = static_cast<double>(a) + (static_cast<double>(b) - a) * u;
  return static_cast<std::uint8_t>(std::clamp(std::floor(value + 0.5), 0.0, 255.0));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void multiply(const SquareMatrix& m, const std::vector<double>& v, std::vector<double>& out) {
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m.row(i), v);
}

double normalize(std::vector<double>& v) {
  const double norm = std::sqrt(dot(v, v));
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return norm;
}

// Power iteration on (B - shift*I) from a unit start vector. Converged when
// the direction changes by less than `tolerance` (sign flips allowed).
std::vector<double> power_iterate(const SquareMatrix& b, double shift, std::vector<double> v,
                                  const MdsOptions& options) {
  const std::size_t n = b.size();
  std::vector<double> w(n);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    multiply(b, v, w);
    for (std::size_t i = 0; i < n; ++i) w[i] -= shift * v[i];
    if (normalize(w) == 0.0) return w;
    double diff_same = 0.0;
    double diff_flip = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diff_same += (w[i] - v[i]) * (w[i] - v[i]);
      diff_flip += (w[i] + v[i]) * (w[i] + v[i]);
    }
    v.swap(w);
    if (std::sqrt(std::min(diff_same, diff_flip)) < options.tolerance) break;
  }
  return v;
}

double rayleigh(const SquareMatrix& b, const std::vector<double>& v) {
  std::vector<double> bv(v.size());
  multiply(b, v, bv);
  return dot(v, bv);
}

}  // namespace

std::string to_hex(Rgb c) {
  static const char* digits = "0123456789ABCDEF";
  std::string out = "#";
  for (std::uint8_t x : {c.r, c.g, c.b}) {
    out.push_back(digits[x >> 4]);
    out.push_back(digits[x & 0xF]);
  }
  return out;
}

Rgb parse_hex(std::string_view text) {
  if (text.size() != 7 || text[0] != '#') {
    throw std::invalid_argument("expected \"#RRGGBB\", got '" + std::string(text) + "'");
  }
  std::array<std::uint8_t, 3> channels{};
  for (std::size_t k = 0; k < 3; ++k) {
    const int hi = hex_digit(text[1 + 2 * k]);
    const int lo = hex_digit(text[2 + 2 * k]);
    if (hi < 0 || lo < 0) {
      throw std::invalid_argument("expected \"#RRGGBB\", got '" + std::string(text) + "'");
    }
    channels[k] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return {channels[0], channels[1], channels[2]};
}

ColorMap::ColorMap(std::vector<ColorStop> stops) : stops_(std::move(stops)) {
  if (stops_.size() < 2) throw std::invalid_argument("colormap needs at least two stops");
  if (stops_.front().t != 0.0) throw std::invalid_argument("first colormap stop must be at t = 0");
  if (stops_.back().t != 1.0) throw std::invalid_argument("last colormap stop must be at t = 1");
  for (std::size_t i = 1; i < stops_.size(); ++i) {
    if (!(stops_[i].t > stops_[i - 1].t)) {
      throw std::invalid_argument("colormap stops must be strictly increasing in t");
    }
  }
}

ColorMap ColorMap::default_map() {
  return ColorMap({
      {0.0, parse_hex("#440154")},
      {0.25, parse_hex("#3B528B")},
      {0.5, parse_hex("#21918C")},
      {0.75, parse_hex("#5EC962")},
      {1.0, parse_hex("#FDE725")},
  });
}

Rgb color_of(double t, const ColorMap& map) {
  assert(t >= 0.0 && t <= 1.0);
  t = std::clamp(std::isnan(t) ? 0.0 : t, 0.0, 1.0);
  const auto& stops = map.stops();
  if (t >= stops.back().t) return stops.back().rgb;
  std::size_t hi = 1;
  while (stops[hi].t < t) ++hi;
  const ColorStop& a = stops[hi - 1];
  const ColorStop& b = stops[hi];
  if (t == b.t) return b.rgb;
  const double u = (t - a.t) / (b.t - a.t);
  return {lerp_channel(a.rgb.r, b.rgb.r, u), lerp_channel(a.rgb.g, b.rgb.g, u),
          lerp_channel(a.rgb.b, b.rgb.b, u)};
}

SquareMatrix distance_matrix(std::span<const BarFeature> features) {
  const std::size_t n = features.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = bar_distance(features[i], features[j]);
      m(i, j) = d;
      m(j, i) = d;
    }
  }
  return m;
}

std::vector<double> mds_embed_1d(const SquareMatrix& distances, const MdsOptions& options) {
  const std::size_t n = distances.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (distances(i, i) < 0.0) throw std::invalid_argument("distance matrix has a negative diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distances(i, j) != distances(j, i)) {
        throw std::invalid_argument("distance matrix is not symmetric");
      }
    }
  }
  if (n == 0) return {};

  // B = -1/2 J (D o D) J, expanded with row means so that identical rows of
  // D give bit-identical rows of B.
  SquareMatrix squared(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) squared(i, j) = distances(i, j) * distances(i, j);
  }
  std::vector<double> row_mean(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (double x : squared.row(i)) row_mean[i] += x;
    row_mean[i] /= static_cast<double>(n);
  }
  double grand_mean = 0.0;
  for (double x : row_mean) grand_mean += x;
  grand_mean /= static_cast<double>(n);
  SquareMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = -0.5 * (squared(i, j) - row_mean[i] - row_mean[j] + grand_mean);
    }
  }

  // The all-ones vector is in the null space of B, so start from a fixed
  // pseudo-random vector instead; mt19937's output sequence is standardized.
  std::mt19937 rng(0x7ab5u);
  std::vector<double> start(n);
  for (double& x : start) x = static_cast<double>(rng()) / 4294967296.0 * 2.0 - 1.0;
  normalize(start);
  // One plain multiplication first: rows of B that are equal make the
  // corresponding entries equal from here on.
  std::vector<double> v(n);
  multiply(b, start, v);
  if (normalize(v) == 0.0) return std::vector<double>(n, 0.0);

  std::vector<double> top = power_iterate(b, 0.0, v, options);
  double lambda = rayleigh(b, top);
  if (lambda < 0.0) {
    // Dominant eigenvalue is negative; shift so the largest algebraic one dominates.
    top = power_iterate(b, lambda, v, options);
    lambda = rayleigh(b, top);
  }
  if (lambda <= 1e-12) return std::vector<double>(n, 0.0);
  const double scale = std::sqrt(lambda);
  for (double& x : top) x *= scale;
  return top;
}

std::vector<double> mds_1d(const SquareMatrix& distances, const MdsOptions& options) {
  std::vector<double> coords = mds_embed_1d(distances, options);
  if (coords.empty()) return coords;
  const auto [lo, hi] = std::minmax_element(coords.begin(), coords.end());
  const double min = *lo;
  const double range = *hi - min;
  if (!(range > 0.0)) return std::vector<double>(coords.size(), 0.5);
  for (double& x : coords) x = (x - min) / range;
  if (coords.front() > coords.back()) {
    for (double& x : coords) x = 1.0 - x;
  }
  return coords;
}

}  // namespace tabcompare
