#pragma once

#include <cmath>
#include <cstdint>

#include "pitchforge/image.hpp"
#include "pitchforge/rng.hpp"

namespace pitchforge {

namespace detail {

inline double cell_hash01(uint64_t seed, int64_t ix, int64_t iy) {
  uint64_t h = mix(mix(seed, uint64_t(ix) * 0x9e3779b97f4a7c15ULL), uint64_t(iy));
  return double(h >> 11) * 0x1.0p-53;
}

inline double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

} // namespace detail

// Bilinear value noise on an integer lattice, range [0, 1].
inline double value_noise(uint64_t seed, double x, double y) {
  double fx = std::floor(x), fy = std::floor(y);
  int64_t ix = int64_t(fx), iy = int64_t(fy);
  double tx = detail::smoothstep(x - fx);
  double ty = detail::smoothstep(y - fy);
  double v00 = detail::cell_hash01(seed, ix, iy);
  double v10 = detail::cell_hash01(seed, ix + 1, iy);
  double v01 = detail::cell_hash01(seed, ix, iy + 1);
  double v11 = detail::cell_hash01(seed, ix + 1, iy + 1);
  double a = v00 + (v10 - v00) * tx;
  double b = v01 + (v11 - v01) * tx;
  return a + (b - a) * ty;
}

// Patchwork of randomly colored rectangles with value-noise modulation; the
// self-contained stand-in for user-supplied background/overlay pictures.
inline ImageBuffer make_color_quilt(int width, int height, RandomStream &rng) {
  ImageBuffer img(width, height);
  uint64_t seed = rng.next_u64();
  int cols = 3 + int(rng.uniform_index(6));
  int rows = 3 + int(rng.uniform_index(6));
  std::vector<float> palette(size_t(cols) * size_t(rows) * 3);
  for (auto &v : palette) v = float(rng.uniform());
  double noise_scale = rng.uniform(4.0, 16.0);
  for (int y = 0; y < height; ++y) {
    int cy = std::min(rows - 1, y * rows / height);
    for (int x = 0; x < width; ++x) {
      int cx = std::min(cols - 1, x * cols / width);
      size_t p = (size_t(cy) * size_t(cols) + size_t(cx)) * 3;
      double n = 0.75 + 0.5 * value_noise(seed, x / noise_scale, y / noise_scale);
      img.set_rgb(x, y, float(palette[p] * n), float(palette[p + 1] * n),
                  float(palette[p + 2] * n));
    }
  }
  img.clamp01();
  return img;
}

} // namespace pitchforge
