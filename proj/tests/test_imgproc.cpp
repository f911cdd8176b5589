#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "soh/imgproc.hpp"

using namespace soh;

namespace {

RgbImage ramp_x(int w, int h, double per_px) {
  RgbImage img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const auto v = static_cast<std::uint8_t>(
          std::clamp(per_px * x, 0.0, 255.0));
      img.at(x, y) = {v, v, v};
    }
  return img;
}

GrayImage gray_ramp(int w, int h, double cx, double cy) {
  GrayImage g(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) g.at(x, y) = cx * x + cy * y;
  return g;
}

}  // namespace

TEST_CASE("grayscale conversion weights and clamping") {
  RgbImage img(2, 1);
  img.at(0, 0) = {100, 50, 200};
  img.at(1, 0) = {255, 255, 255};
  const GrayImage g = to_grayscale(img);
  CHECK(g.at(0, 0) == Catch::Approx(82.08).margin(1e-12));
  // The weights sum to 1.0007, so pure white clamps back down to 255.
  CHECK(g.at(1, 0) == 255.0);
}

TEST_CASE("grayscale stays real-valued, no rounding between stages") {
  RgbImage img(1, 1);
  img.at(0, 0) = {1, 1, 1};
  CHECK(to_grayscale(img).at(0, 0) == Catch::Approx(1.0007).margin(1e-12));
}

TEST_CASE("angle wrapping into [-180, 180)") {
  CHECK(wrap_angle_deg(180.0) == -180.0);
  CHECK(wrap_angle_deg(-180.0) == -180.0);
  CHECK(wrap_angle_deg(190.0) == Catch::Approx(-170.0));
  CHECK(wrap_angle_deg(360.0) == Catch::Approx(0.0).margin(1e-12));
  CHECK(wrap_angle_deg(-350.0) == Catch::Approx(10.0));
  CHECK(wrap_angle_deg(45.0) == 45.0);
}

TEST_CASE("gaussian kernel shape") {
  const auto k = gaussian_kernel_1d(1.0, 5);
  REQUIRE(k.size() == 5);
  double sum = 0.0;
  for (double w : k) sum += w;
  CHECK(sum == Catch::Approx(1.0).margin(1e-12));
  CHECK(k[0] == Catch::Approx(k[4]));
  CHECK(k[1] == Catch::Approx(k[3]));
  CHECK(k[2] > k[1]);
  CHECK(k[1] / k[2] == Catch::Approx(std::exp(-0.5)));
  CHECK(k[0] / k[2] == Catch::Approx(std::exp(-2.0)));

  CHECK_THROWS_AS(gaussian_kernel_1d(0.0, 5), ParameterError);
  CHECK_THROWS_AS(gaussian_kernel_1d(1.0, 4), ParameterError);
  CHECK_THROWS_AS(gaussian_kernel_1d(1.0, 1), ParameterError);
}

TEST_CASE("smoothing preserves constants and reduces spread") {
  GrayImage flat(9, 7, 42.5);
  const GrayImage s = gaussian_smooth(flat);
  for (double v : s.data) CHECK(v == Catch::Approx(42.5).margin(1e-12));

  GrayImage noisy(21, 21);
  std::mt19937_64 eng(7);
  for (double& v : noisy.data)
    v = static_cast<double>(eng() % 256);
  const GrayImage sm = gaussian_smooth(noisy);
  auto spread = [](const GrayImage& im) {
    double m = 0.0;
    for (double v : im.data) m += v;
    m /= im.data.size();
    double acc = 0.0;
    for (double v : im.data) acc += (v - m) * (v - m);
    return acc;
  };
  CHECK(spread(sm) < spread(noisy));
  CHECK_THROWS_AS(gaussian_smooth(GrayImage(3, 3, 0.0), 1.0, 5),
                  ParameterError);
}

TEST_CASE("sobel orientation on axis ramps") {
  // Intensity rising with x: gradient points along +x, orientation 0.
  const GradientField gx = gradient_field(gray_ramp(9, 9, 10.0, 0.0));
  CHECK(gx.orientation_deg[gx.index(4, 4)] == Catch::Approx(0.0).margin(1e-9));
  CHECK(gx.magnitude[gx.index(4, 4)] == Catch::Approx(80.0));

  // Rising with y (downward): orientation +90.
  const GradientField gy = gradient_field(gray_ramp(9, 9, 0.0, 10.0));
  CHECK(gy.orientation_deg[gy.index(4, 4)] == Catch::Approx(90.0));

  // Falling with x: wraps to -180, never +180.
  const GradientField gn = gradient_field(gray_ramp(9, 9, -10.0, 0.0));
  CHECK(gn.orientation_deg[gn.index(4, 4)] == -180.0);

  // Diagonal ramp: 45 degrees.
  const GradientField gd = gradient_field(gray_ramp(9, 9, 10.0, 10.0));
  CHECK(gd.orientation_deg[gd.index(4, 4)] == Catch::Approx(45.0));

  CHECK_THROWS_AS(gradient_field(GrayImage(2, 5, 0.0)), ParameterError);
}

TEST_CASE("flat image has zero magnitude everywhere") {
  const GradientField g = gradient_field(GrayImage(7, 7, 9.0));
  for (double m : g.magnitude) CHECK(m == 0.0);
  for (double o : g.orientation_deg) CHECK(o == 0.0);
}

TEST_CASE("edge detection thresholds and border exclusion") {
  // Vertical step: bright left half, dark right half.
  GrayImage step(10, 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 10; ++x) step.at(x, y) = x < 5 ? 200.0 : 50.0;

  const GradientField grad = gradient_field(step);
  const EdgeMask automatic = detect_edges(step, grad);

  CHECK(automatic.count() > 0);
  // The outermost ring is never part of the mask.
  for (int x = 0; x < 10; ++x) {
    CHECK_FALSE(automatic.is_edge(x, 0));
    CHECK_FALSE(automatic.is_edge(x, 7));
  }
  for (int y = 0; y < 8; ++y) {
    CHECK_FALSE(automatic.is_edge(0, y));
    CHECK_FALSE(automatic.is_edge(9, y));
  }
  // Automatic threshold is 4x the mean magnitude.
  double mean_mag = 0.0;
  for (double m : grad.magnitude) mean_mag += m;
  mean_mag /= grad.magnitude.size();
  CHECK(automatic.threshold_used == Catch::Approx(4.0 * mean_mag));

  // Edge pixels sit at the step, and edge_intensities reads the input
  // image at those pixels in row-major order.
  for (int y = 1; y < 7; ++y) {
    CHECK(automatic.is_edge(4, y));
    CHECK(automatic.is_edge(5, y));
  }
  std::vector<double> expected;
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 10; ++x)
      if (automatic.is_edge(x, y)) expected.push_back(step.at(x, y));
  CHECK(automatic.edge_intensities == expected);

  // A huge explicit threshold masks nothing.
  CHECK(detect_edges(step, grad, 1e9).count() == 0);
  // Threshold 0 keeps every gradient-bearing interior pixel: the two
  // columns flanking the step, never the flat regions.
  CHECK(detect_edges(step, grad, 0.0).count() == 2u * 6u);
  CHECK_THROWS_AS(detect_edges(step, grad, -1.0), ParameterError);

  GrayImage wrong(3, 3, 0.0);
  CHECK_THROWS_AS(detect_edges(wrong, grad), ParameterError);
}

TEST_CASE("orientation filtering by mask and magnitude fraction") {
  GrayImage step(10, 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 10; ++x) step.at(x, y) = x < 5 ? 200.0 : 50.0;
  const GradientField grad = gradient_field(step);
  const EdgeMask mask = detect_edges(step, grad);

  const std::vector<double> angles = filter_orientations(grad, mask, 0.1);
  CHECK(angles.size() == mask.count());
  // Intensity falls with x, so gradients point toward -x: -180 exactly.
  for (double a : angles) CHECK(a == -180.0);

  // mag_fraction = 1 keeps only pixels attaining the exact maximum.
  const std::vector<double> strict = filter_orientations(grad, mask, 1.0);
  CHECK(strict.size() <= angles.size());
  CHECK_FALSE(strict.empty());

  CHECK_THROWS_AS(filter_orientations(grad, mask, 0.0), ParameterError);
  CHECK_THROWS_AS(filter_orientations(grad, mask, 1.5), ParameterError);
  CHECK_THROWS_AS(filter_orientations(grad, EdgeMask(3, 3), 0.1),
                  ParameterError);
}

TEST_CASE("flat image yields no filtered orientations") {
  const GrayImage flat(8, 8, 120.0);
  const GradientField grad = gradient_field(flat);
  const EdgeMask mask = detect_edges(flat, grad);
  CHECK(mask.count() == 0);
  CHECK(filter_orientations(grad, mask, 0.1).empty());
}

TEST_CASE("full preprocessing chain on an rgb ramp") {
  const RgbImage img = ramp_x(16, 12, 12.0);
  const GrayImage gray = to_grayscale(img);
  const GrayImage smooth = gaussian_smooth(gray, 1.0, 5);
  const GradientField grad = gradient_field(smooth);
  // Smoothing a ramp keeps it a ramp away from borders.
  CHECK(grad.orientation_deg[grad.index(8, 6)] ==
        Catch::Approx(0.0).margin(1e-9));
}
