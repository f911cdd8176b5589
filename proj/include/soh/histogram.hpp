#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "soh/errors.hpp"

namespace soh {

// Normalized orientation histogram over [-180, 180). Bin b (1-based) spans
// [-180 + (b-1)*width, -180 + b*width). With no input angles the histogram
// is all-zero and flagged degenerate.
struct OrientationHistogram {
  std::vector<double> frequency;
  bool degenerate = false;

  int n_bins() const { return static_cast<int>(frequency.size()); }
};

inline int histogram_bin(double angle_deg, int n_bins) {
  const double width = 360.0 / n_bins;
  int b = static_cast<int>(std::floor((angle_deg + 180.0) / width)) + 1;
  // Guards against angle == 180 slipping in via rounding.
  if (b < 1) b = 1;
  if (b > n_bins) b = n_bins;
  return b;
}

inline OrientationHistogram build_histogram(
    const std::vector<double>& angles_deg, int n_bins = 72) {
  if (n_bins < 2 || n_bins % 2 != 0)
    throw ParameterError("build_histogram: bin count must be even and >= 2");
  OrientationHistogram h;
  h.frequency.assign(static_cast<std::size_t>(n_bins), 0.0);
  if (angles_deg.empty()) {
    h.degenerate = true;
    return h;
  }
  for (double a : angles_deg) {
    if (a < -180.0 || a >= 180.0)
      throw ParameterError("build_histogram: angle outside [-180, 180)");
    h.frequency[static_cast<std::size_t>(histogram_bin(a, n_bins) - 1)] += 1.0;
  }
  for (double& f : h.frequency) f /= static_cast<double>(angles_deg.size());
  return h;
}

// Running sum of the bin frequencies; last value is 1 for a non-degenerate
// histogram (0 for a degenerate one).
struct CumulativeCurve {
  std::vector<double> value;
  bool degenerate = false;
};

inline CumulativeCurve cumulative_curve(const OrientationHistogram& h) {
  CumulativeCurve c;
  c.degenerate = h.degenerate;
  c.value.resize(h.frequency.size());
  double run = 0.0;
  for (std::size_t i = 0; i < h.frequency.size(); ++i) {
    run += h.frequency[i];
    c.value[i] = run;
  }
  return c;
}

// Least-squares line y = slope*k + intercept over k = 1..n.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

inline LineFit fit_line(const std::vector<double>& y) {
  const std::size_t n = y.size();
  if (n < 2) throw ParameterError("fit_line: need at least 2 points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1);
    sx += x;
    sy += y[i];
    sxx += x * x;
    sxy += x * y[i];
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  LineFit f;
  f.slope = (dn * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / dn;
  return f;
}

// Per-bin distance from the cumulative curve to its least-squares line.
// `distance` is the perpendicular point-to-line distance, `residual` the
// vertical one; they differ by the constant factor sqrt(slope^2 + 1).
struct DistanceCurve {
  std::vector<double> distance;
  std::vector<double> residual;
  LineFit fit;
};

inline DistanceCurve distance_curve(const CumulativeCurve& c) {
  DistanceCurve d;
  d.fit = fit_line(c.value);
  const double norm = std::sqrt(d.fit.slope * d.fit.slope + 1.0);
  d.distance.resize(c.value.size());
  d.residual.resize(c.value.size());
  for (std::size_t i = 0; i < c.value.size(); ++i) {
    const double x = static_cast<double>(i + 1);
    const double vertical = d.fit.slope * x + d.fit.intercept - c.value[i];
    d.residual[i] = std::abs(vertical);
    d.distance[i] = d.residual[i] / norm;
  }
  return d;
}

// A half-curve as explicit (x, y) points. Both halves of a split live on
// the same fresh grid x = 1..n so they are directly comparable as shapes.
struct CurveHalf {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return y.size(); }
};

inline std::pair<CurveHalf, CurveHalf> split_halves(
    const std::vector<double>& series) {
  if (series.empty() || series.size() % 2 != 0)
    throw ParameterError("split_halves: series length must be even");
  const std::size_t n = series.size() / 2;
  CurveHalf left, right;
  left.x.resize(n);
  left.y.resize(n);
  right.x.resize(n);
  right.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    left.x[i] = static_cast<double>(i + 1);
    left.y[i] = series[i];
    right.x[i] = static_cast<double>(i + 1);
    right.y[i] = series[n + i];
  }
  return {left, right};
}

// Forward differences: point k holds y[k+1] - y[k], on grid x = 1..n-1.
inline CurveHalf first_derivative(const CurveHalf& h) {
  if (h.size() < 2)
    throw ParameterError("first_derivative: need at least 2 points");
  CurveHalf d;
  d.x.resize(h.size() - 1);
  d.y.resize(h.size() - 1);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    d.x[i] = static_cast<double>(i + 1);
    d.y[i] = h.y[i + 1] - h.y[i];
  }
  return d;
}

}  // namespace soh
