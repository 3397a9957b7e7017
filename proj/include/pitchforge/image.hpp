#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pitchforge/error.hpp"

namespace pitchforge {

// Row-major RGB image, values in [0, 1].
struct ImageBuffer {
  int width = 0;
  int height = 0;
  static constexpr int channels = 3;
  std::vector<float> pixels;

  ImageBuffer() = default;
  ImageBuffer(int w, int h, float fill = 0.0f)
      : width(w), height(h), pixels(size_t(w) * size_t(h) * channels, fill) {}

  size_t index(int x, int y, int c) const {
    return (size_t(y) * size_t(width) + size_t(x)) * channels + size_t(c);
  }
  float &at(int x, int y, int c) { return pixels[index(x, y, c)]; }
  float at(int x, int y, int c) const { return pixels[index(x, y, c)]; }

  bool contains(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  void set_rgb(int x, int y, float r, float g, float b) {
    at(x, y, 0) = r;
    at(x, y, 1) = g;
    at(x, y, 2) = b;
  }

  float luma(int x, int y) const {
    return 0.2126f * at(x, y, 0) + 0.7152f * at(x, y, 1) + 0.0722f * at(x, y, 2);
  }

  void clamp01() {
    for (auto &v : pixels) v = std::clamp(v, 0.0f, 1.0f);
  }
};

inline void require_same_shape(const ImageBuffer &a, const ImageBuffer &b,
                               const char *what) {
  if (a.width != b.width || a.height != b.height)
    throw DomainError(std::string(what) + ": image dimensions differ");
}

// 8-bit quantization used for PNG output; round-to-nearest on the [0,1] range.
inline std::vector<uint8_t> to_rgb8(const ImageBuffer &img) {
  std::vector<uint8_t> out(img.pixels.size());
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    float v = std::clamp(img.pixels[i], 0.0f, 1.0f);
    out[i] = uint8_t(v * 255.0f + 0.5f);
  }
  return out;
}

inline ImageBuffer from_rgb8(const std::vector<uint8_t> &data, int w, int h) {
  if (data.size() != size_t(w) * size_t(h) * 3)
    throw DomainError("from_rgb8: byte count does not match dimensions");
  ImageBuffer img(w, h);
  for (size_t i = 0; i < data.size(); ++i)
    img.pixels[i] = float(data[i]) / 255.0f;
  return img;
}

} // namespace pitchforge
