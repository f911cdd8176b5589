#pragma once

#include <algorithm>
#include <vector>

#include "soh/classifier.hpp"
#include "soh/feature.hpp"

namespace soh {

struct Region {
  int x = 0, y = 0, width = 0, height = 0;
  double score = 0.0;
};

inline double iou(const Region& a, const Region& b) {
  const int x0 = std::max(a.x, b.x);
  const int y0 = std::max(a.y, b.y);
  const int x1 = std::min(a.x + a.width, b.x + b.width);
  const int y1 = std::min(a.y + a.height, b.y + b.height);
  const double inter = static_cast<double>(std::max(0, x1 - x0)) *
                       static_cast<double>(std::max(0, y1 - y0));
  const double uni = static_cast<double>(a.width) * a.height +
                     static_cast<double>(b.width) * b.height - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

struct ProposerConfig {
  // Square windows sized at these fractions of the shorter image side.
  std::vector<double> scales = {1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0};
  int stride_divisor = 4;       // stride = window / 4
  double score_threshold = 0.5;
  double nms_iou = 0.5;
  int min_window = 24;          // windows smaller than this are skipped
};

// Slide square windows over the image at several scales, score each crop
// with the classifier, keep windows at or above the threshold, and prune
// near-duplicates greedily: surviving proposals are mutually below the
// overlap limit and sorted by descending score.
inline std::vector<Region> propose_regions(const RgbImage& image,
                                           const FittedModel& model,
                                           Variant variant,
                                           const SohConfig& soh_cfg = {},
                                           const ProposerConfig& cfg = {}) {
  const int short_side = std::min(image.width, image.height);
  std::vector<int> windows;
  for (double s : cfg.scales) {
    const int w = static_cast<int>(s * short_side);
    if (w >= cfg.min_window && w <= short_side) windows.push_back(w);
  }
  if (windows.empty())
    throw ParameterError("propose_regions: image too small for any window");

  std::vector<Region> kept;
  for (int w : windows) {
    const int stride = std::max(1, w / cfg.stride_divisor);
    std::vector<int> xs, ys;
    for (int x = 0; x + w <= image.width; x += stride) xs.push_back(x);
    if (xs.empty() || xs.back() + w < image.width)
      xs.push_back(image.width - w);
    for (int y = 0; y + w <= image.height; y += stride) ys.push_back(y);
    if (ys.empty() || ys.back() + w < image.height)
      ys.push_back(image.height - w);

    for (int y : ys)
      for (int x : xs) {
        const SohFeature f =
            compute_soh(image.crop(x, y, w, w), variant, soh_cfg);
        const double sc = model.score(f.value);
        if (sc >= cfg.score_threshold) kept.push_back({x, y, w, w, sc});
      }
  }

  std::stable_sort(kept.begin(), kept.end(), [](const Region& a, const Region& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });

  std::vector<Region> out;
  for (const Region& r : kept) {
    bool suppressed = false;
    for (const Region& k : out)
      if (iou(r, k) >= cfg.nms_iou) {
        suppressed = true;
        break;
      }
    if (!suppressed) out.push_back(r);
  }
  return out;
}

}  // namespace soh
