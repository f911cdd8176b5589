#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "soh/image.hpp"
#include "soh/random.hpp"

namespace soh {

// --- anti-aliased grayscale rendering -----------------------------------
//
// Shapes are rendered from signed distance: coverage ramps linearly from 1
// (inside) to 0 (outside) across one pixel, which keeps gradients smooth
// enough for orientation analysis at small sizes.

namespace draw {

inline double coverage(double signed_dist) {
  return std::clamp(0.5 - signed_dist, 0.0, 1.0);
}

inline void blend(GrayImage& c, int x, int y, double ink, double cov) {
  if (x < 0 || y < 0 || x >= c.width || y >= c.height || cov <= 0.0) return;
  double& v = c.at(x, y);
  v += cov * (ink - v);
}

template <typename Sdf>
inline void paint(GrayImage& c, double x0, double y0, double x1, double y1,
                  double ink, Sdf sdf) {
  const int xa = std::max(0, static_cast<int>(std::floor(x0)) - 2);
  const int ya = std::max(0, static_cast<int>(std::floor(y0)) - 2);
  const int xb = std::min(c.width - 1, static_cast<int>(std::ceil(x1)) + 2);
  const int yb = std::min(c.height - 1, static_cast<int>(std::ceil(y1)) + 2);
  for (int y = ya; y <= yb; ++y)
    for (int x = xa; x <= xb; ++x)
      blend(c, x, y, ink, coverage(sdf(x + 0.5, y + 0.5)));
}

}  // namespace draw

inline void draw_ring(GrayImage& c, double cx, double cy, double r,
                      double stroke, double ink) {
  const double half = 0.5 * stroke;
  draw::paint(c, cx - r - half, cy - r - half, cx + r + half, cy + r + half,
              ink, [&](double x, double y) {
                const double d = std::hypot(x - cx, y - cy);
                return std::abs(d - r) - half;
              });
}

inline void draw_disc(GrayImage& c, double cx, double cy, double r,
                      double ink) {
  draw::paint(c, cx - r, cy - r, cx + r, cy + r, ink,
              [&](double x, double y) {
                return std::hypot(x - cx, y - cy) - r;
              });
}

inline void draw_segment(GrayImage& c, double x0, double y0, double x1,
                         double y1, double stroke, double ink) {
  const double half = 0.5 * stroke;
  draw::paint(c, std::min(x0, x1) - half, std::min(y0, y1) - half,
              std::max(x0, x1) + half, std::max(y0, y1) + half, ink,
              [&](double x, double y) {
                const double vx = x1 - x0, vy = y1 - y0;
                const double wx = x - x0, wy = y - y0;
                const double len2 = vx * vx + vy * vy;
                double t = len2 > 0.0 ? (wx * vx + wy * vy) / len2 : 0.0;
                t = std::clamp(t, 0.0, 1.0);
                return std::hypot(wx - t * vx, wy - t * vy) - half;
              });
}

inline void draw_polygon_outline(GrayImage& c,
                                 const std::vector<std::pair<double, double>>& pts,
                                 double stroke, double ink) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    draw_segment(c, a.first, a.second, b.first, b.second, stroke, ink);
  }
}

inline void draw_parallel_lines(GrayImage& c, double cx, double cy,
                                double half_len, int n, double spacing,
                                double stroke, double ink, double angle_deg) {
  const double a = angle_deg * std::numbers::pi / 180.0;
  const double ux = std::cos(a), uy = std::sin(a);    // along the lines
  const double nx = -uy, ny = ux;                     // across the lines
  const double start = -0.5 * (n - 1) * spacing;
  for (int i = 0; i < n; ++i) {
    const double off = start + i * spacing;
    const double mx = cx + off * nx, my = cy + off * ny;
    draw_segment(c, mx - half_len * ux, my - half_len * uy,
                 mx + half_len * ux, my + half_len * uy, stroke, ink);
  }
}

inline RgbImage gray_to_rgb(const GrayImage& g) {
  RgbImage out(g.width, g.height);
  for (std::size_t i = 0; i < g.data.size(); ++i) {
    const double v = std::clamp(g.data[i], 0.0, 255.0);
    const auto b = static_cast<std::uint8_t>(std::lround(v));
    out.pixels[i] = {b, b, b};
  }
  return out;
}

// Rotate about the image center with bilinear resampling; pixels mapped
// from outside take the background value. The sign is chosen so rotating
// by +t degrees shifts gradient orientations by -t (mod 360).
inline RgbImage rotate_image(const RgbImage& img, double degrees,
                             std::uint8_t background = 255) {
  const double a = degrees * std::numbers::pi / 180.0;
  const double ca = std::cos(a), sa = std::sin(a);
  const double cx = 0.5 * (img.width - 1), cy = 0.5 * (img.height - 1);
  RgbImage out(img.width, img.height,
               {background, background, background});
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double sx = cx + ca * dx - sa * dy;
      const double sy = cy + sa * dx + ca * dy;
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double fx = sx - x0, fy = sy - y0;
      double acc[3] = {0.0, 0.0, 0.0};
      for (int oy = 0; oy <= 1; ++oy)
        for (int ox = 0; ox <= 1; ++ox) {
          const double w = (ox ? fx : 1.0 - fx) * (oy ? fy : 1.0 - fy);
          const int px = x0 + ox, py = y0 + oy;
          if (px >= 0 && py >= 0 && px < img.width && py < img.height) {
            const auto& p = img.at(px, py);
            acc[0] += w * p[0];
            acc[1] += w * p[1];
            acc[2] += w * p[2];
          } else {
            acc[0] += w * background;
            acc[1] += w * background;
            acc[2] += w * background;
          }
        }
      out.at(x, y) = {static_cast<std::uint8_t>(std::lround(acc[0])),
                      static_cast<std::uint8_t>(std::lround(acc[1])),
                      static_cast<std::uint8_t>(std::lround(acc[2]))};
    }
  return out;
}

// --- canonical shapes for the shape studies -----------------------------

inline RgbImage canonical_circle(int size = 160) {
  GrayImage c(size, size, 245.0);
  draw_ring(c, 0.5 * size, 0.5 * size, 0.32 * size, 3.0, 40.0);
  return gray_to_rgb(c);
}

inline RgbImage canonical_rectangle(int size = 160) {
  GrayImage c(size, size, 245.0);
  const double cx = 0.5 * size, cy = 0.5 * size;
  const double hw = 0.30 * size, hh = 0.21 * size;
  draw_polygon_outline(c,
                       {{cx - hw, cy - hh},
                        {cx + hw, cy - hh},
                        {cx + hw, cy + hh},
                        {cx - hw, cy + hh}},
                       3.0, 40.0);
  return gray_to_rgb(c);
}

inline RgbImage canonical_triangle(int size = 160) {
  GrayImage c(size, size, 245.0);
  const double cx = 0.5 * size, cy = 0.54 * size;
  const double r = 0.34 * size;
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < 3; ++k) {
    const double a = (-90.0 + 120.0 * k) * std::numbers::pi / 180.0;
    pts.emplace_back(cx + r * std::cos(a), cy + r * std::sin(a));
  }
  draw_polygon_outline(c, pts, 3.0, 40.0);
  return gray_to_rgb(c);
}

inline RgbImage canonical_parallel_lines(int size = 160) {
  GrayImage c(size, size, 245.0);
  draw_parallel_lines(c, 0.5 * size, 0.5 * size, 0.34 * size, 4, 0.14 * size,
                      3.0, 40.0, 30.0);
  return gray_to_rgb(c);
}

// Deterministic nested ring target: an outer boundary ring, three inner
// region rings and two filled blobs, all circular so the orientation
// distribution barely moves under rotation.
inline RgbImage canonical_ring_pattern(int size = 160) {
  GrayImage c(size, size, 245.0);
  const double s = size;
  const double cx = 0.5 * s, cy = 0.5 * s;
  draw_ring(c, cx, cy, 0.40 * s, 3.0, 40.0);
  draw_ring(c, cx - 0.16 * s, cy - 0.10 * s, 0.11 * s, 2.5, 50.0);
  draw_ring(c, cx + 0.15 * s, cy - 0.08 * s, 0.09 * s, 2.5, 50.0);
  draw_ring(c, cx + 0.02 * s, cy + 0.18 * s, 0.10 * s, 2.5, 50.0);
  draw_disc(c, cx - 0.16 * s, cy - 0.10 * s, 0.035 * s, 60.0);
  draw_disc(c, cx + 0.02 * s, cy + 0.18 * s, 0.03 * s, 60.0);
  return gray_to_rgb(c);
}

// --- randomized corpus ---------------------------------------------------

struct SyntheticSample {
  RgbImage image;
  int label = 0;
};

// Target: randomized nested rings and blobs, like the canonical pattern.
inline RgbImage synthetic_target(Rng& rng, int size) {
  GrayImage c(size, size, rng.uniform(228.0, 252.0));
  const double s = size;
  const double cx = 0.5 * s + rng.uniform(-0.03, 0.03) * s;
  const double cy = 0.5 * s + rng.uniform(-0.03, 0.03) * s;
  const double outer = rng.uniform(0.33, 0.42) * s;
  const double ink = rng.uniform(20.0, 70.0);
  draw_ring(c, cx, cy, outer, rng.uniform(2.0, 4.0), ink);

  const int regions = static_cast<int>(rng.uniform_int(2, 4));
  for (int i = 0; i < regions; ++i) {
    const double rr = rng.uniform(0.07, 0.14) * s;
    const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double dist = rng.uniform(0.0, 1.0) * (outer - rr - 0.05 * s);
    const double rx = cx + dist * std::cos(ang);
    const double ry = cy + dist * std::sin(ang);
    draw_ring(c, rx, ry, rr, rng.uniform(1.5, 3.0), ink + rng.uniform(-10.0, 10.0));
    const int blobs = static_cast<int>(rng.uniform_int(0, 2));
    for (int bseq = 0; bseq < blobs; ++bseq) {
      const double br = rng.uniform(0.02, 0.045) * s;
      const double bang = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double bdist = rng.uniform(0.0, 1.0) * (rr - br - 2.0);
      if (bdist <= 0.0) continue;
      draw_disc(c, rx + bdist * std::cos(bang), ry + bdist * std::sin(bang),
                br, ink + rng.uniform(-5.0, 15.0));
    }
  }
  return gray_to_rgb(c);
}

// Background clutter: a rectangle, a triangle or a line bundle, rotated
// and sized at random.
inline RgbImage synthetic_background(Rng& rng, int size) {
  GrayImage c(size, size, rng.uniform(228.0, 252.0));
  const double s = size;
  const double cx = 0.5 * s + rng.uniform(-0.05, 0.05) * s;
  const double cy = 0.5 * s + rng.uniform(-0.05, 0.05) * s;
  const double ink = rng.uniform(20.0, 70.0);
  const double stroke = rng.uniform(2.0, 4.0);
  const double rot = rng.uniform(0.0, 2.0 * std::numbers::pi);

  switch (rng.below(3)) {
    case 0: {  // rectangle
      const double hw = rng.uniform(0.18, 0.34) * s;
      const double hh = rng.uniform(0.12, 0.28) * s;
      std::vector<std::pair<double, double>> pts;
      for (auto [px, py] : {std::pair{-hw, -hh}, std::pair{hw, -hh},
                            std::pair{hw, hh}, std::pair{-hw, hh}})
        pts.emplace_back(cx + px * std::cos(rot) - py * std::sin(rot),
                         cy + px * std::sin(rot) + py * std::cos(rot));
      draw_polygon_outline(c, pts, stroke, ink);
      break;
    }
    case 1: {  // triangle
      const double r = rng.uniform(0.2, 0.38) * s;
      std::vector<std::pair<double, double>> pts;
      for (int k = 0; k < 3; ++k) {
        const double a = rot + 2.0 * std::numbers::pi * k / 3.0 +
                         rng.uniform(-0.2, 0.2);
        pts.emplace_back(cx + r * std::cos(a), cy + r * std::sin(a));
      }
      draw_polygon_outline(c, pts, stroke, ink);
      break;
    }
    default: {  // parallel lines
      const int n = static_cast<int>(rng.uniform_int(3, 5));
      draw_parallel_lines(c, cx, cy, rng.uniform(0.25, 0.4) * s, n,
                          rng.uniform(0.08, 0.16) * s, stroke, ink,
                          rot * 180.0 / std::numbers::pi);
    }
  }
  return gray_to_rgb(c);
}

// Per-sample RNG streams are derived from the seed and the sample index,
// so sample i is the same no matter how many are generated.
inline std::vector<SyntheticSample> generate_synthetic(int per_class,
                                                       std::uint64_t seed,
                                                       int size = 160) {
  if (per_class < 1)
    throw ParameterError("generate_synthetic: per_class must be >= 1");
  std::vector<SyntheticSample> out;
  for (int i = 0; i < per_class; ++i) {
    Rng rng(mix_seed(seed, 2 * static_cast<std::uint64_t>(i)));
    out.push_back({synthetic_target(rng, size), 1});
  }
  for (int i = 0; i < per_class; ++i) {
    Rng rng(mix_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1));
    out.push_back({synthetic_background(rng, size), 0});
  }
  return out;
}

// A larger scene with one target embedded at a known location plus some
// clutter, for exercising the window proposer end to end.
struct PlacedTarget {
  RgbImage image;
  int x = 0, y = 0, width = 0, height = 0;  // target bounding box
};

inline PlacedTarget synthetic_scene(std::uint64_t seed, int width = 320,
                                    int height = 240) {
  Rng rng(mix_seed(seed, 9001));
  GrayImage c(width, height, 240.0);

  // Clutter away from the target.
  draw_parallel_lines(c, width * 0.12, height * 0.75, height * 0.18, 3,
                      height * 0.07, 2.0, 60.0, 15.0);
  draw_polygon_outline(c,
                       {{width * 0.78, height * 0.12},
                        {width * 0.95, height * 0.2},
                        {width * 0.85, height * 0.33}},
                       2.0, 55.0);

  PlacedTarget out;
  const int target_size = std::min(width, height) / 2;
  RgbImage target = synthetic_target(rng, target_size);
  const int tx = static_cast<int>(rng.uniform_int(
      width / 8, width - target_size - width / 8));
  const int ty = static_cast<int>(rng.uniform_int(
      height / 12, height - target_size - height / 12));
  RgbImage scene = gray_to_rgb(c);
  for (int y = 0; y < target_size; ++y)
    for (int x = 0; x < target_size; ++x) scene.at(tx + x, ty + y) = target.at(x, y);
  out.image = std::move(scene);
  out.x = tx;
  out.y = ty;
  out.width = target_size;
  out.height = target_size;
  return out;
}

}  // namespace soh
