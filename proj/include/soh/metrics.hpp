#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "soh/errors.hpp"

namespace soh {

struct ConfusionMatrix {
  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
};

inline ConfusionMatrix confusion(const std::vector<int>& predicted,
                                 const std::vector<int>& actual) {
  if (predicted.size() != actual.size())
    throw ParameterError("confusion: length mismatch");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (actual[i] == 1)
      (predicted[i] == 1 ? cm.tp : cm.fn)++;
    else
      (predicted[i] == 1 ? cm.fp : cm.tn)++;
  }
  return cm;
}

// A ratio that may be 0/0; consumers must check `defined` before trusting
// `value` (undefined metrics report value 0).
struct MetricValue {
  double value = 0.0;
  bool defined = false;
};

struct MetricsReport {
  MetricValue recall, precision, tnr, accuracy, f_beta, mcc;
  double beta = 2.0;
};

inline MetricValue ratio(double num, double denom) {
  if (denom == 0.0) return {0.0, false};
  return {num / denom, true};
}

inline MetricsReport compute_metrics(const ConfusionMatrix& cm,
                                     double beta = 2.0) {
  MetricsReport r;
  r.beta = beta;
  const double tp = static_cast<double>(cm.tp);
  const double fp = static_cast<double>(cm.fp);
  const double fn = static_cast<double>(cm.fn);
  const double tn = static_cast<double>(cm.tn);

  r.recall = ratio(tp, tp + fn);
  r.precision = ratio(tp, tp + fp);
  r.tnr = ratio(tn, tn + fp);
  r.accuracy = ratio(tp + tn, tp + fp + fn + tn);

  if (r.precision.defined && r.recall.defined) {
    const double b2 = beta * beta;
    const double denom = b2 * r.precision.value + r.recall.value;
    if (denom > 0.0)
      r.f_beta = {(1.0 + b2) * r.precision.value * r.recall.value / denom,
                  true};
  }

  const double denom2 = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  if (denom2 > 0.0)
    r.mcc = {(tp * tn - fp * fn) / std::sqrt(denom2), true};
  return r;
}

struct CurvePoint {
  double x = 0.0;  // ROC: false positive rate; PR: recall
  double y = 0.0;  // ROC: true positive rate; PR: precision
};

struct CurveData {
  std::vector<CurvePoint> points;
  double auc = 0.0;
};

struct ScoreCurves {
  CurveData roc;
  CurveData pr;
};

// ROC and precision-recall curves from continuous scores. Thresholds sweep
// the distinct score values from high to low with ties grouped, so equal
// scores enter together. The ROC starts at (0,0) and ends at (1,1); the PR
// curve's first point carries the precision observed at the highest
// threshold. Areas are trapezoidal, which for the ROC matches the
// rank-based probability that a random positive outscores a random
// negative (ties counting half).
inline ScoreCurves score_curves(const std::vector<double>& scores,
                                const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw ParameterError("score_curves: length mismatch");
  std::int64_t n_pos = 0, n_neg = 0;
  for (int l : labels) (l == 1 ? n_pos : n_neg)++;
  if (n_pos == 0 || n_neg == 0)
    throw ParameterError("score_curves: need both classes present");

  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  ScoreCurves out;
  out.roc.points.push_back({0.0, 0.0});
  std::int64_t tp = 0, fp = 0;
  bool first_group = true;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (labels[order[j]] == 1 ? tp : fp)++;
      ++j;
    }
    const double rec = static_cast<double>(tp) / static_cast<double>(n_pos);
    const double fpr = static_cast<double>(fp) / static_cast<double>(n_neg);
    const double prec =
        static_cast<double>(tp) / static_cast<double>(tp + fp);
    out.roc.points.push_back({fpr, rec});
    if (first_group) {
      out.pr.points.push_back({0.0, prec});
      first_group = false;
    }
    out.pr.points.push_back({rec, prec});
    i = j;
  }

  auto trapezoid = [](const std::vector<CurvePoint>& pts) {
    double area = 0.0;
    for (std::size_t s = 1; s < pts.size(); ++s)
      area += (pts[s].x - pts[s - 1].x) * 0.5 * (pts[s].y + pts[s - 1].y);
    return area;
  };
  out.roc.auc = trapezoid(out.roc.points);
  out.pr.auc = trapezoid(out.pr.points);
  return out;
}

// P(score_pos > score_neg) + 0.5 P(tie) over all positive/negative pairs.
// Equals the trapezoidal ROC area; kept as an independent check.
inline double rank_auc(const std::vector<double>& scores,
                       const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw ParameterError("rank_auc: length mismatch");
  double wins = 0.0;
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] != 1) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[j] == 1) continue;
      ++pairs;
      if (scores[i] > scores[j])
        wins += 1.0;
      else if (scores[i] == scores[j])
        wins += 0.5;
    }
  }
  if (pairs == 0) throw ParameterError("rank_auc: need both classes present");
  return wins / static_cast<double>(pairs);
}

}  // namespace soh
