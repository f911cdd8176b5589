#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "soh/errors.hpp"

namespace soh {

inline void check_dims(int width, int height, const char* who) {
  if (width <= 0 || height <= 0)
    throw ParameterError(std::string(who) + ": dimensions must be positive");
}

// 8-bit RGB image, row-major.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::array<std::uint8_t, 3>> pixels;

  RgbImage() = default;
  RgbImage(int w, int h, std::array<std::uint8_t, 3> fill = {0, 0, 0})
      : width(w), height(h) {
    check_dims(w, h, "RgbImage");
    pixels.assign(static_cast<std::size_t>(w) * h, fill);
  }

  std::array<std::uint8_t, 3>& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  const std::array<std::uint8_t, 3>& at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }

  RgbImage crop(int x0, int y0, int w, int h) const {
    if (x0 < 0 || y0 < 0 || w <= 0 || h <= 0 || x0 + w > width ||
        y0 + h > height)
      throw ParameterError("RgbImage::crop: region outside image");
    RgbImage out(w, h);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) out.at(x, y) = at(x0 + x, y0 + y);
    return out;
  }
};

// Real-valued single-channel image; intensities stay in [0, 255] but are
// never rounded between pipeline stages.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0) : width(w), height(h) {
    check_dims(w, h, "GrayImage");
    data.assign(static_cast<std::size_t>(w) * h, fill);
  }

  double& at(int x, int y) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }

  // Replicate-border access: out-of-range indices clamp to the nearest edge.
  double at_clamped(int x, int y) const {
    if (x < 0) x = 0;
    if (x >= width) x = width - 1;
    if (y < 0) y = 0;
    if (y >= height) y = height - 1;
    return at(x, y);
  }
};

// Per-pixel gradient. Orientation is meaningful only where magnitude > 0;
// zero-magnitude pixels keep orientation 0 and are skipped downstream.
struct GradientField {
  int width = 0;
  int height = 0;
  std::vector<double> orientation_deg;  // in [-180, 180)
  std::vector<double> magnitude;

  GradientField() = default;
  GradientField(int w, int h) : width(w), height(h) {
    check_dims(w, h, "GradientField");
    orientation_deg.assign(static_cast<std::size_t>(w) * h, 0.0);
    magnitude.assign(static_cast<std::size_t>(w) * h, 0.0);
  }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width + x;
  }
};

// Boolean edge map plus the grayscale intensities observed at edge pixels,
// collected in row-major order.
struct EdgeMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> on;
  std::vector<double> edge_intensities;
  double threshold_used = 0.0;

  EdgeMask() = default;
  EdgeMask(int w, int h) : width(w), height(h) {
    check_dims(w, h, "EdgeMask");
    on.assign(static_cast<std::size_t>(w) * h, 0);
  }

  bool is_edge(int x, int y) const {
    return on[static_cast<std::size_t>(y) * width + x] != 0;
  }
  std::size_t count() const { return edge_intensities.size(); }
};

}  // namespace soh
