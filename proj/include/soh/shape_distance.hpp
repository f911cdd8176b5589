#pragma once

#include <cmath>
#include <vector>

#include "soh/histogram.hpp"

namespace soh {

namespace detail {
constexpr double kSpreadEps = 1e-12;

inline void center(CurveHalf& h) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    mx += h.x[i];
    my += h.y[i];
  }
  mx /= static_cast<double>(h.size());
  my /= static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    h.x[i] -= mx;
    h.y[i] -= my;
  }
}

inline double frobenius(const CurveHalf& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    s += h.x[i] * h.x[i] + h.y[i] * h.y[i];
  return std::sqrt(s);
}
}  // namespace detail

// Result of superimposing `right` onto `left`: both centered, `left`
// scaled to unit Frobenius norm, `right` additionally rotated and scaled
// to the best least-squares fit.
struct Superimposition {
  CurveHalf reference;  // centered, unit-norm left half
  CurveHalf fitted;     // right half after the optimal transform
  double rotation_rad = 0.0;
  double scale = 1.0;
  double distance = 0.0;
  bool degenerate = false;
};

// Procrustes shape distance between two point sequences of equal length.
// Both are centered and scaled to unit norm; the second is then rotated
// (no reflection) and uniformly scaled to minimize the sum of squared
// point distances. The closed form: with unit shapes L, R and
// A = sum(xl*xr + yl*yr), B = sum(yl*xr - xl*yr), the best achievable
// correlation is c = sqrt(A^2 + B^2) and the optimal scale is c itself.
// The minimized distance equals sqrt(1 - c^2), but it is summed directly
// from the superimposed points instead: near c = 1 the closed form loses
// half the significant digits and reports ~1e-8 for identical shapes.
inline Superimposition procrustes_superimpose(CurveHalf left,
                                              CurveHalf right) {
  if (left.size() != right.size())
    throw ParameterError("procrustes: halves must have equal length");
  if (left.size() < 2)
    throw ParameterError("procrustes: need at least 2 points");

  detail::center(left);
  detail::center(right);
  const double nl = detail::frobenius(left);
  const double nr = detail::frobenius(right);

  Superimposition s;
  if (nl < detail::kSpreadEps && nr < detail::kSpreadEps) {
    // Two point-masses: identical shapes by convention.
    s.reference = left;
    s.fitted = right;
    s.degenerate = true;
    return s;
  }
  if (nl < detail::kSpreadEps || nr < detail::kSpreadEps) {
    // One side has no spread; rotation and scale cannot help. Distance is
    // taken between the centered, unscaled sequences.
    s.degenerate = true;
    s.reference = left;
    s.fitted = right;
    double acc = 0.0;
    for (std::size_t i = 0; i < left.size(); ++i) {
      const double dx = left.x[i] - right.x[i];
      const double dy = left.y[i] - right.y[i];
      acc += dx * dx + dy * dy;
    }
    s.distance = std::sqrt(acc);
    return s;
  }

  for (std::size_t i = 0; i < left.size(); ++i) {
    left.x[i] /= nl;
    left.y[i] /= nl;
    right.x[i] /= nr;
    right.y[i] /= nr;
  }

  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    a += left.x[i] * right.x[i] + left.y[i] * right.y[i];
    b += left.y[i] * right.x[i] - left.x[i] * right.y[i];
  }
  const double c = std::sqrt(a * a + b * b);

  s.rotation_rad = std::atan2(b, a);
  s.scale = c;
  s.reference = left;
  s.fitted = right;
  const double cs = std::cos(s.rotation_rad) * s.scale;
  const double sn = std::sin(s.rotation_rad) * s.scale;
  double resid = 0.0;
  for (std::size_t i = 0; i < right.size(); ++i) {
    const double rx = right.x[i];
    const double ry = right.y[i];
    s.fitted.x[i] = cs * rx - sn * ry;
    s.fitted.y[i] = sn * rx + cs * ry;
    const double dx = s.reference.x[i] - s.fitted.x[i];
    const double dy = s.reference.y[i] - s.fitted.y[i];
    resid += dx * dx + dy * dy;
  }
  s.distance = std::sqrt(resid);
  return s;
}

inline double procrustes_distance(const CurveHalf& left,
                                  const CurveHalf& right) {
  return procrustes_superimpose(left, right).distance;
}

// Chi-square distance between nonnegative sequences:
// sum (y - v)^2 / (y + v), with 0/0 terms contributing 0. Symmetric.
inline double chi_square_distance(const std::vector<double>& y,
                                  const std::vector<double>& v) {
  if (y.size() != v.size())
    throw ParameterError("chi_square_distance: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0.0 || v[i] < 0.0)
      throw ParameterError("chi_square_distance: negative input");
    const double denom = y[i] + v[i];
    if (denom > 0.0) {
      const double diff = y[i] - v[i];
      acc += diff * diff / denom;
    }
  }
  return acc;
}

namespace detail {
// Variant for series that may go negative (derivative curves): the
// denominator is |y| + |v|, which equals y + v on nonnegative input and
// stays bounded when the two values nearly cancel. Each term is at most
// |y| + |v|, so small derivatives contribute small terms instead of
// exploding. Pairs of (near-)zeros follow the 0/0 convention.
inline double chi_square_signed(const std::vector<double>& y,
                                const std::vector<double>& v) {
  if (y.size() != v.size())
    throw ParameterError("chi_square_signed: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double denom = std::abs(y[i]) + std::abs(v[i]);
    if (denom > kSpreadEps) {
      const double diff = y[i] - v[i];
      acc += diff * diff / denom;
    }
  }
  return acc;
}
}  // namespace detail

}  // namespace soh
