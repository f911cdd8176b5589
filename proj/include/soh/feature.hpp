#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "soh/histogram.hpp"
#include "soh/imgproc.hpp"
#include "soh/shape_distance.hpp"
#include "soh/stats.hpp"

namespace soh {

// Descriptor variants, named by their dimensionality. Each one is a fixed
// subset of the twelve shape variables, emitted in ascending index order.
enum class Variant { Soh05, Soh07, Soh08, Soh10, Soh12 };

inline const std::vector<Variant>& all_variants() {
  static const std::vector<Variant> v = {Variant::Soh05, Variant::Soh07,
                                         Variant::Soh08, Variant::Soh10,
                                         Variant::Soh12};
  return v;
}

// 1-based indices of the variables each variant carries.
inline const std::vector<int>& variant_variables(Variant v) {
  static const std::vector<int> v05 = {1, 2, 3, 7, 8};
  static const std::vector<int> v07 = {1, 2, 3, 7, 8, 9, 10};
  static const std::vector<int> v08 = {1, 2, 3, 4, 7, 8, 9, 10};
  static const std::vector<int> v10 = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  static const std::vector<int> v12 = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  switch (v) {
    case Variant::Soh05: return v05;
    case Variant::Soh07: return v07;
    case Variant::Soh08: return v08;
    case Variant::Soh10: return v10;
    case Variant::Soh12: return v12;
  }
  throw ParameterError("variant_variables: unknown variant");
}

inline int variant_dimension(Variant v) {
  return static_cast<int>(variant_variables(v).size());
}

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Soh05: return "SOH-05";
    case Variant::Soh07: return "SOH-07";
    case Variant::Soh08: return "SOH-08";
    case Variant::Soh10: return "SOH-10";
    case Variant::Soh12: return "SOH-12";
  }
  throw ParameterError("variant_name: unknown variant");
}

inline Variant parse_variant(const std::string& name) {
  for (Variant v : all_variants())
    if (variant_name(v) == name) return v;
  // Accept lowercase CLI spellings like "soh-07" or plain "07".
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(c)));
  for (Variant v : all_variants())
    if (variant_name(v) == up || variant_name(v).substr(4) == up) return v;
  throw ParameterError("unknown variant name: " + name);
}

struct SohConfig {
  double gaussian_sigma = 1.0;
  int gaussian_kernel_size = 5;
  // Edge threshold on gradient magnitude; unset means 4x mean magnitude.
  std::optional<double> edge_threshold;
  double mag_fraction = 0.1;
  int n_bins = 72;
  // S1/S2 (and the derivatives behind S3/S4) normally compare halves of
  // the line-distance curve. Switching this off compares halves of the raw
  // cumulative curve instead, for ablations.
  bool use_distance_curve = true;
};

// All twelve shape variables for one image. When no orientations survive
// filtering there is no curve to analyze: S1..S8 are zero and the sample
// is flagged degenerate. S9..S12 are plain intensity statistics and are
// computed regardless (an empty edge set zeroes S11/S12 as well).
struct ShapeVariables {
  std::array<double, 12> s{};
  bool degenerate = false;

  double operator[](int index_1_based) const {
    if (index_1_based < 1 || index_1_based > 12)
      throw ParameterError("ShapeVariables: index must be in 1..12");
    return s[static_cast<std::size_t>(index_1_based - 1)];
  }
};

struct SohFeature {
  Variant variant = Variant::Soh07;
  std::vector<double> value;
  bool degenerate = false;
};

inline ShapeVariables compute_shape_variables(const GrayImage& smoothed,
                                              const SohConfig& cfg) {
  ShapeVariables out;

  const GradientField grad = gradient_field(smoothed);
  const EdgeMask mask = detect_edges(smoothed, grad, cfg.edge_threshold);
  const std::vector<double> angles =
      filter_orientations(grad, mask, cfg.mag_fraction);

  // Intensity statistics are independent of the curve analysis.
  out.s[8] = mean(smoothed.data);                 // S9
  out.s[9] = population_stddev(smoothed.data);    // S10
  out.s[10] = mean(mask.edge_intensities);        // S11
  out.s[11] = population_stddev(mask.edge_intensities);  // S12

  const OrientationHistogram hist = build_histogram(angles, cfg.n_bins);
  if (hist.degenerate) {
    out.degenerate = true;
    return out;
  }

  const CumulativeCurve cum = cumulative_curve(hist);
  const DistanceCurve dist = distance_curve(cum);

  const std::vector<double>& base =
      cfg.use_distance_curve ? dist.distance : cum.value;
  auto [left, right] = split_halves(base);
  out.s[0] = procrustes_distance(left, right);          // S1
  out.s[1] = chi_square_distance(left.y, right.y);      // S2

  const CurveHalf dleft = first_derivative(left);
  const CurveHalf dright = first_derivative(right);
  out.s[2] = procrustes_distance(dleft, dright);              // S3
  out.s[3] = detail::chi_square_signed(dleft.y, dright.y);    // S4

  auto [hleft, hright] = split_halves(hist.frequency);
  out.s[4] = procrustes_distance(hleft, hright);        // S5
  out.s[5] = chi_square_distance(hleft.y, hright.y);    // S6

  out.s[6] = mean(dist.residual);                // S7
  out.s[7] = population_stddev(dist.residual);   // S8
  return out;
}

inline ShapeVariables compute_shape_variables(const RgbImage& img,
                                              const SohConfig& cfg = {}) {
  const GrayImage gray = to_grayscale(img);
  const GrayImage smoothed =
      gaussian_smooth(gray, cfg.gaussian_sigma, cfg.gaussian_kernel_size);
  return compute_shape_variables(smoothed, cfg);
}

inline SohFeature select_variant(const ShapeVariables& vars, Variant v) {
  SohFeature f;
  f.variant = v;
  f.degenerate = vars.degenerate;
  for (int idx : variant_variables(v)) f.value.push_back(vars[idx]);
  return f;
}

inline SohFeature compute_soh(const RgbImage& img, Variant v,
                              const SohConfig& cfg = {}) {
  return select_variant(compute_shape_variables(img, cfg), v);
}

// Column names for a feature table of this variant: "S1", "S2", ...
inline std::vector<std::string> variant_columns(Variant v) {
  std::vector<std::string> cols;
  for (int idx : variant_variables(v)) cols.push_back("S" + std::to_string(idx));
  return cols;
}

}  // namespace soh
