#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "soh/image.hpp"

namespace soh {

// Wrap an angle in degrees into [-180, 180).
inline double wrap_angle_deg(double a) {
  a = std::fmod(a + 180.0, 360.0);
  if (a < 0.0) a += 360.0;
  return a - 180.0;
}

// Weighted channel sum, clamped to [0, 255], kept real-valued. The weights
// intentionally sum to slightly more than one; clamping absorbs the excess
// so pure white maps to exactly 255.
inline GrayImage to_grayscale(const RgbImage& rgb) {
  check_dims(rgb.width, rgb.height, "to_grayscale");
  GrayImage out(rgb.width, rgb.height);
  for (std::size_t i = 0; i < rgb.pixels.size(); ++i) {
    const auto& p = rgb.pixels[i];
    double v = 0.2989 * p[0] + 0.5878 * p[1] + 0.1140 * p[2];
    out.data[i] = std::clamp(v, 0.0, 255.0);
  }
  return out;
}

inline std::vector<double> gaussian_kernel_1d(double sigma, int size) {
  if (sigma <= 0.0) throw ParameterError("gaussian kernel: sigma must be > 0");
  if (size < 3 || size % 2 == 0)
    throw ParameterError("gaussian kernel: size must be odd and >= 3");
  std::vector<double> k(static_cast<std::size_t>(size));
  const int half = size / 2;
  double sum = 0.0;
  for (int i = -half; i <= half; ++i) {
    double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(i + half)] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

// Separable Gaussian blur with replicate borders.
inline GrayImage gaussian_smooth(const GrayImage& img, double sigma = 1.0,
                                 int kernel_size = 5) {
  check_dims(img.width, img.height, "gaussian_smooth");
  if (kernel_size > std::min(img.width, img.height))
    throw ParameterError("gaussian_smooth: kernel larger than image");
  const std::vector<double> k = gaussian_kernel_1d(sigma, kernel_size);
  const int half = kernel_size / 2;

  GrayImage tmp(img.width, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      double acc = 0.0;
      for (int i = -half; i <= half; ++i)
        acc += k[static_cast<std::size_t>(i + half)] * img.at_clamped(x + i, y);
      tmp.at(x, y) = acc;
    }

  GrayImage out(img.width, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      double acc = 0.0;
      for (int i = -half; i <= half; ++i)
        acc += k[static_cast<std::size_t>(i + half)] * tmp.at_clamped(x, y + i);
      out.at(x, y) = acc;
    }
  return out;
}

// 3x3 Sobel gradient. Image rows grow downward, so gy is positive where
// intensity increases with y (toward the bottom). Orientation is
// atan2(gy, gx) in degrees, wrapped into [-180, 180).
inline GradientField gradient_field(const GrayImage& img) {
  if (img.width < 3 || img.height < 3)
    throw ParameterError("gradient_field: image must be at least 3x3");
  GradientField g(img.width, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const double tl = img.at_clamped(x - 1, y - 1);
      const double tc = img.at_clamped(x, y - 1);
      const double tr = img.at_clamped(x + 1, y - 1);
      const double ml = img.at_clamped(x - 1, y);
      const double mr = img.at_clamped(x + 1, y);
      const double bl = img.at_clamped(x - 1, y + 1);
      const double bc = img.at_clamped(x, y + 1);
      const double br = img.at_clamped(x + 1, y + 1);
      const double gx = (tr + 2.0 * mr + br) - (tl + 2.0 * ml + bl);
      const double gy = (bl + 2.0 * bc + br) - (tl + 2.0 * tc + tr);
      const std::size_t i = g.index(x, y);
      g.magnitude[i] = std::sqrt(gx * gx + gy * gy);
      if (g.magnitude[i] > 0.0)
        g.orientation_deg[i] =
            wrap_angle_deg(std::atan2(gy, gx) * 180.0 / std::numbers::pi);
    }
  return g;
}

// Threshold the gradient magnitude into an edge mask. With no explicit
// threshold, 4x the mean magnitude is used. Zero-magnitude pixels never
// qualify, so a flat image has no edges even at threshold 0. The outermost
// one-pixel ring is never marked: Sobel responses there come from
// replicated samples. edge_intensities records img's value at each edge
// pixel, row-major.
inline EdgeMask detect_edges(const GrayImage& img, const GradientField& grad,
                             std::optional<double> threshold = std::nullopt) {
  if (img.width != grad.width || img.height != grad.height)
    throw ParameterError("detect_edges: image / gradient size mismatch");
  if (threshold && *threshold < 0.0)
    throw ParameterError("detect_edges: threshold must be >= 0");

  double thr;
  if (threshold) {
    thr = *threshold;
  } else {
    double sum = 0.0;
    for (double m : grad.magnitude) sum += m;
    thr = 4.0 * sum / static_cast<double>(grad.magnitude.size());
  }

  EdgeMask mask(img.width, img.height);
  mask.threshold_used = thr;
  for (int y = 1; y + 1 < img.height; ++y)
    for (int x = 1; x + 1 < img.width; ++x) {
      const double m = grad.magnitude[grad.index(x, y)];
      if (m > 0.0 && m >= thr) {
        mask.on[grad.index(x, y)] = 1;
        mask.edge_intensities.push_back(img.at(x, y));
      }
    }
  return mask;
}

inline EdgeMask sobel_edges(const GrayImage& img,
                            std::optional<double> threshold = std::nullopt) {
  return detect_edges(img, gradient_field(img), threshold);
}

// Orientations of pixels that are on an edge AND whose magnitude reaches
// mag_fraction of the global maximum, row-major order.
inline std::vector<double> filter_orientations(const GradientField& grad,
                                               const EdgeMask& mask,
                                               double mag_fraction = 0.1) {
  if (grad.width != mask.width || grad.height != mask.height)
    throw ParameterError("filter_orientations: gradient / mask size mismatch");
  if (!(mag_fraction > 0.0) || mag_fraction > 1.0)
    throw ParameterError("filter_orientations: mag_fraction must be in (0, 1]");

  double max_mag = 0.0;
  for (double m : grad.magnitude) max_mag = std::max(max_mag, m);
  const double cut = mag_fraction * max_mag;

  std::vector<double> out;
  if (max_mag <= 0.0) return out;
  for (int y = 0; y < grad.height; ++y)
    for (int x = 0; x < grad.width; ++x) {
      const std::size_t i = grad.index(x, y);
      if (mask.on[i] && grad.magnitude[i] >= cut)
        out.push_back(grad.orientation_deg[i]);
    }
  return out;
}

}  // namespace soh
