#include <catch2/catch_amalgamated.hpp>

#include "soh/random.hpp"
#include "soh/shape_distance.hpp"

using namespace soh;

namespace {

CurveHalf make_half(std::vector<double> xs, std::vector<double> ys) {
  CurveHalf h;
  h.x = std::move(xs);
  h.y = std::move(ys);
  return h;
}

// Brute-force reference: center both shapes, scale to unit norm, then
// minimize the superimposition residual over a dense grid of rotation
// angles and scales.
double grid_search_distance(CurveHalf l, CurveHalf r) {
  auto center_unit = [](CurveHalf& h) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      mx += h.x[i];
      my += h.y[i];
    }
    mx /= h.size();
    my /= h.size();
    double n = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      h.x[i] -= mx;
      h.y[i] -= my;
      n += h.x[i] * h.x[i] + h.y[i] * h.y[i];
    }
    n = std::sqrt(n);
    for (std::size_t i = 0; i < h.size(); ++i) {
      h.x[i] /= n;
      h.y[i] /= n;
    }
  };
  center_unit(l);
  center_unit(r);

  double best = std::numeric_limits<double>::infinity();
  for (double theta = 0.0; theta < 2.0 * 3.14159265358979323846;
       theta += 0.001) {
    const double c = std::cos(theta), s = std::sin(theta);
    // For fixed rotation, the optimal scale has a closed form; still scan
    // to stay independent of the implementation's algebra.
    for (double scale = 0.0; scale <= 2.0; scale += 0.001) {
      double acc = 0.0;
      for (std::size_t i = 0; i < l.size(); ++i) {
        const double rx = scale * (c * r.x[i] - s * r.y[i]);
        const double ry = scale * (s * r.x[i] + c * r.y[i]);
        const double dx = l.x[i] - rx, dy = l.y[i] - ry;
        acc += dx * dx + dy * dy;
      }
      best = std::min(best, std::sqrt(acc));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("procrustes self-distance is zero") {
  const CurveHalf h = make_half({1, 2, 3, 4}, {0.3, 0.1, 0.4, 0.1});
  CHECK(procrustes_distance(h, h) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("procrustes ignores translation and uniform scale") {
  const CurveHalf l = make_half({1, 2, 3, 4, 5}, {0.1, 0.5, 0.2, 0.8, 0.3});
  CurveHalf r;
  for (std::size_t i = 0; i < l.size(); ++i) {
    r.x.push_back(3.0 * l.x[i] + 10.0);
    r.y.push_back(3.0 * l.y[i] - 2.0);
  }
  CHECK(procrustes_distance(l, r) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("procrustes ignores rotation") {
  const CurveHalf l = make_half({1, 2, 3, 4}, {0.0, 1.0, 0.5, 2.0});
  const double a = 0.7;
  CurveHalf r;
  for (std::size_t i = 0; i < l.size(); ++i) {
    r.x.push_back(std::cos(a) * l.x[i] - std::sin(a) * l.y[i]);
    r.y.push_back(std::sin(a) * l.x[i] + std::cos(a) * l.y[i]);
  }
  CHECK(procrustes_distance(l, r) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("procrustes is symmetric") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    CurveHalf l, r;
    for (int i = 0; i < 8; ++i) {
      l.x.push_back(i + 1.0);
      r.x.push_back(i + 1.0);
      l.y.push_back(rng.uniform());
      r.y.push_back(rng.uniform());
    }
    CHECK(procrustes_distance(l, r) ==
          Catch::Approx(procrustes_distance(r, l)).margin(1e-12));
  }
}

TEST_CASE("procrustes matches the grid-search oracle") {
  const CurveHalf l = make_half({1, 2, 3}, {0, 1, 0});
  const CurveHalf r = make_half({1, 2, 3}, {0, 0, 1});
  const double got = procrustes_distance(l, r);
  // Closed form for this pair: sqrt(30)/8.
  CHECK(got == Catch::Approx(std::sqrt(30.0) / 8.0).margin(1e-12));
  CHECK(got == Catch::Approx(grid_search_distance(l, r)).margin(3e-3));

  Rng rng(23);
  for (int t = 0; t < 5; ++t) {
    CurveHalf a, b;
    for (int i = 0; i < 6; ++i) {
      a.x.push_back(i + 1.0);
      b.x.push_back(i + 1.0);
      a.y.push_back(rng.uniform(0.0, 2.0));
      b.y.push_back(rng.uniform(0.0, 2.0));
    }
    CHECK(procrustes_distance(a, b) ==
          Catch::Approx(grid_search_distance(a, b)).margin(3e-3));
  }
}

TEST_CASE("procrustes zero-spread conventions") {
  const CurveHalf zero = make_half({2, 2, 2}, {5, 5, 5});
  CHECK(procrustes_distance(zero, zero) == 0.0);

  // One degenerate side: distance against the centered, unscaled other.
  const CurveHalf spread = make_half({1, 3, 2}, {0, 0, 0});
  const Superimposition s = procrustes_superimpose(zero, spread);
  CHECK(s.degenerate);
  CHECK(s.distance == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("procrustes input validation") {
  const CurveHalf a = make_half({1, 2}, {0, 1});
  const CurveHalf b = make_half({1, 2, 3}, {0, 1, 2});
  CHECK_THROWS_AS(procrustes_distance(a, b), ParameterError);
  const CurveHalf single = make_half({1}, {1});
  CHECK_THROWS_AS(procrustes_distance(single, single), ParameterError);
}

TEST_CASE("chi-square distance basics") {
  CHECK(chi_square_distance({1, 0}, {0, 1}) == Catch::Approx(2.0));
  CHECK(chi_square_distance({0, 0}, {0, 0}) == 0.0);
  CHECK(chi_square_distance({0.2, 0.3}, {0.2, 0.3}) == 0.0);
  CHECK_THROWS_AS(chi_square_distance({-0.1}, {0.1}), ParameterError);
  CHECK_THROWS_AS(chi_square_distance({1, 2}, {1}), ParameterError);
}

TEST_CASE("chi-square is symmetric and nonnegative") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> y, v;
    for (int i = 0; i < 12; ++i) {
      y.push_back(rng.uniform());
      v.push_back(rng.uniform());
    }
    const double d = chi_square_distance(y, v);
    CHECK(d >= 0.0);
    CHECK(d == Catch::Approx(chi_square_distance(v, y)).margin(1e-12));
  }
}

TEST_CASE("signed chi-square handles mixed-sign series") {
  // Opposite signs: (1 - (-1))^2 / (|1| + |-1|) = 2.
  CHECK(detail::chi_square_signed({1.0}, {-1.0}) == Catch::Approx(2.0));
  CHECK(detail::chi_square_signed({-0.5, 0.5}, {-0.5, 0.5}) == 0.0);
  // Matches the plain variant on nonnegative input.
  const std::vector<double> y = {0.1, 0.4, 0.0};
  const std::vector<double> v = {0.3, 0.2, 0.0};
  CHECK(detail::chi_square_signed(y, v) ==
        Catch::Approx(chi_square_distance(y, v)).margin(1e-12));
  // Both negative: 4 / (3 + 1) = 1.
  CHECK(detail::chi_square_signed({-3.0}, {-1.0}) == Catch::Approx(1.0));
  // A term is skipped only when both entries are (near) zero.
  CHECK(detail::chi_square_signed({0.0, 2.0}, {0.0, 2.0}) == 0.0);
}

TEST_CASE("y-only residual approximates the full distance on shared grids") {
  Rng rng(31);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    CurveHalf l, r;
    for (int i = 0; i < 36; ++i) {
      l.x.push_back(i + 1.0);
      r.x.push_back(i + 1.0);
      l.y.push_back(rng.uniform(0.0, 0.5));
      r.y.push_back(rng.uniform(0.0, 0.5));
    }
    const Superimposition s = procrustes_superimpose(l, r);
    double y_only = 0.0;
    for (std::size_t i = 0; i < s.reference.size(); ++i) {
      const double dy = s.reference.y[i] - s.fitted.y[i];
      y_only += dy * dy;
    }
    y_only = std::sqrt(y_only);
    REQUIRE(s.distance > 0.0);
    CHECK(std::abs(y_only - s.distance) <= 0.05 * s.distance);
    ++checked;
  }
  CHECK(checked == 100);
}
