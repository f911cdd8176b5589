#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "soh/dataset.hpp"
#include "soh/random.hpp"

namespace soh {

inline double rbf_kernel(const std::vector<double>& a,
                         const std::vector<double>& b, double gamma) {
  if (a.size() != b.size())
    throw ParameterError("rbf_kernel: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::exp(-gamma * acc);
}

struct SvmParams {
  double gamma = 1.0;
  double c = 1.0;
  // cost[actual][predicted]: missing a target (1 predicted as 0) costs 3x
  // a false alarm, which widens the box for positive-class multipliers.
  std::array<std::array<double, 2>, 2> cost = {{{0.0, 1.0}, {3.0, 0.0}}};
  double tol = 1e-3;       // KKT tolerance
  int max_pass_factor = 10;  // pass cap = factor * |data|
  std::uint64_t seed = 0;
};

struct SvmModel {
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> dual_coef;  // alpha_i * y_i per support vector
  double bias = 0.0;
  double gamma = 1.0;
  int feature_dim = 0;
  bool converged = true;
};

inline double svm_decision(const SvmModel& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.feature_dim)
    throw ParameterError("svm_decision: feature dimension mismatch");
  double f = m.bias;
  for (std::size_t i = 0; i < m.support_vectors.size(); ++i)
    f += m.dual_coef[i] * rbf_kernel(m.support_vectors[i], x, m.gamma);
  return f;
}

// Logistic squash of the margin into (0, 1).
inline double svm_score(const SvmModel& m, const std::vector<double>& x) {
  return 1.0 / (1.0 + std::exp(-svm_decision(m, x)));
}

inline int svm_predict(const SvmModel& m, const std::vector<double>& x) {
  return svm_decision(m, x) >= 0.0 ? 1 : 0;
}

namespace detail {

// SMO working state. The per-sample box is C scaled by the cost of
// misclassifying that sample's class, and the error cache is updated
// incrementally after every accepted step.
struct SmoState {
  const std::vector<std::vector<double>>* k = nullptr;  // Gram matrix
  std::vector<double> alpha, err, box;
  std::vector<int> y;  // -1 / +1
  double b = 0.0;
  double tol = 1e-3;
  Rng rng{0};

  std::size_t size() const { return alpha.size(); }

  bool take_step(std::size_t i, std::size_t j) {
    if (i == j) return false;
    const auto& km = *k;
    const double a1 = alpha[i], a2 = alpha[j];
    const int y1 = y[i], y2 = y[j];
    const double e1 = err[i], e2 = err[j];
    const double s = y1 * y2;

    double lo, hi;
    if (y1 != y2) {
      lo = std::max(0.0, a2 - a1);
      hi = std::min(box[j], box[i] + a2 - a1);
    } else {
      lo = std::max(0.0, a1 + a2 - box[i]);
      hi = std::min(box[j], a1 + a2);
    }
    if (lo >= hi) return false;

    const double k11 = km[i][i], k12 = km[i][j], k22 = km[j][j];
    const double eta = k11 + k22 - 2.0 * k12;
    double a2new;
    if (eta > 0.0) {
      a2new = a2 + y2 * (e1 - e2) / eta;
      a2new = std::clamp(a2new, lo, hi);
    } else {
      // Flat or concave direction (duplicate points): pick the better end.
      const double f1 = y1 * (e1 + b) - a1 * k11 - s * a2 * k12;
      const double f2 = y2 * (e2 + b) - s * a1 * k12 - a2 * k22;
      const double l1 = a1 + s * (a2 - lo);
      const double h1 = a1 + s * (a2 - hi);
      const double psi_l = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 +
                           0.5 * lo * lo * k22 + s * lo * l1 * k12;
      const double psi_h = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 +
                           0.5 * hi * hi * k22 + s * hi * h1 * k12;
      if (psi_l < psi_h - 1e-12)
        a2new = lo;
      else if (psi_l > psi_h + 1e-12)
        a2new = hi;
      else
        return false;
    }
    if (std::abs(a2new - a2) < 1e-9 * (a2new + a2 + 1e-9)) return false;
    const double a1new = a1 + s * (a2 - a2new);

    const double b1 =
        b - e1 - y1 * (a1new - a1) * k11 - y2 * (a2new - a2) * k12;
    const double b2 =
        b - e2 - y1 * (a1new - a1) * k12 - y2 * (a2new - a2) * k22;
    double bnew;
    if (a1new > 0.0 && a1new < box[i])
      bnew = b1;
    else if (a2new > 0.0 && a2new < box[j])
      bnew = b2;
    else
      bnew = 0.5 * (b1 + b2);

    const double d1 = y1 * (a1new - a1), d2 = y2 * (a2new - a2);
    const double db = bnew - b;
    for (std::size_t t = 0; t < size(); ++t)
      err[t] += d1 * km[i][t] + d2 * km[j][t] + db;
    alpha[i] = a1new;
    alpha[j] = a2new;
    b = bnew;
    return true;
  }

  bool violates_kkt(std::size_t i) const {
    const double r = err[i] * y[i];
    return (r < -tol && alpha[i] < box[i]) || (r > tol && alpha[i] > 0.0);
  }

  bool examine(std::size_t i) {
    if (!violates_kkt(i)) return false;

    // Second choice: largest error gap among free multipliers, then a
    // randomized sweep as fallback.
    std::size_t best = i;
    double gap = -1.0;
    for (std::size_t j = 0; j < size(); ++j) {
      if (j == i || alpha[j] <= 0.0 || alpha[j] >= box[j]) continue;
      const double g = std::abs(err[i] - err[j]);
      if (g > gap) {
        gap = g;
        best = j;
      }
    }
    if (best != i && take_step(i, best)) return true;

    const std::size_t start = static_cast<std::size_t>(rng.below(size()));
    for (std::size_t d = 0; d < size(); ++d) {
      const std::size_t j = (start + d) % size();
      if (j != i && take_step(i, j)) return true;
    }
    return false;
  }
};

}  // namespace detail

// RBF soft-margin SVM trained with sequential minimal optimization.
// Optimization stops when a full sweep finds every multiplier within the
// KKT tolerance; if the pass cap (max_pass_factor * n) is hit first, the
// model is returned with converged = false.
inline SvmModel train_svm(const LabeledDataset& data, const SvmParams& p = {}) {
  if (p.gamma <= 0.0) throw ParameterError("train_svm: gamma must be > 0");
  if (p.c <= 0.0) throw ParameterError("train_svm: c must be > 0");
  if (p.cost[0][1] <= 0.0 || p.cost[1][0] <= 0.0)
    throw ParameterError("train_svm: misclassification costs must be > 0");
  if (data.samples.empty()) throw TrainingError("train_svm: empty dataset");
  if (data.count(0) == 0 || data.count(1) == 0)
    throw TrainingError("train_svm: training data has a single class");

  const std::size_t n = data.samples.size();
  std::vector<std::vector<double>> gram(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      gram[i][j] = gram[j][i] =
          rbf_kernel(data.samples[i].feature, data.samples[j].feature, p.gamma);

  detail::SmoState st;
  st.k = &gram;
  st.alpha.assign(n, 0.0);
  st.y.resize(n);
  st.box.resize(n);
  st.err.resize(n);
  st.b = 0.0;
  st.tol = p.tol;
  st.rng = Rng(p.seed);
  for (std::size_t i = 0; i < n; ++i) {
    st.y[i] = data.samples[i].label == 1 ? 1 : -1;
    st.box[i] = p.c * (st.y[i] == 1 ? p.cost[1][0] : p.cost[0][1]);
    st.err[i] = -static_cast<double>(st.y[i]);  // f starts at 0
  }

  const long max_passes = static_cast<long>(p.max_pass_factor) *
                          static_cast<long>(n);
  bool converged = false;
  for (long pass = 0; pass < max_passes; ++pass) {
    int changed = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (st.examine(i)) ++changed;
    if (changed == 0) {
      converged = true;
      break;
    }
  }

  SvmModel m;
  m.gamma = p.gamma;
  m.feature_dim = data.dimension();
  m.bias = st.b;
  m.converged = converged;
  for (std::size_t i = 0; i < n; ++i)
    if (st.alpha[i] > 1e-12) {
      m.support_vectors.push_back(data.samples[i].feature);
      m.dual_coef.push_back(st.alpha[i] * st.y[i]);
    }
  return m;
}

}  // namespace soh
