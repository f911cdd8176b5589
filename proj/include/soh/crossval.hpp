#pragma once

#include <chrono>
#include <vector>

#include "soh/classifier.hpp"
#include "soh/metrics.hpp"
#include "soh/smote.hpp"

namespace soh {

struct CvConfig {
  int folds = 5;
  int repeats = 10;
  std::uint64_t seed = 0;
  double beta = 2.0;
  // When set, the minority class of each training split is oversampled
  // after the split, so synthetic points never leak into a test fold.
  bool smote_inside_folds = false;
  SmoteParams smote;
};

struct FoldOutcome {
  int repeat = 0;
  int fold = 0;
  ConfusionMatrix cm;
  MetricsReport metrics;
};

// Mean over the fold-tests where the metric was defined.
struct AggregateMetric {
  double mean = 0.0;
  int n_defined = 0;
  int n_undefined = 0;
};

struct CvResult {
  AggregateMetric accuracy, precision, recall, tnr, f_beta, mcc;
  double beta = 2.0;
  std::vector<FoldOutcome> folds;
  ScoreCurves curves;  // from scores pooled across every fold-test
  double train_eval_seconds = 0.0;
  bool any_unconverged_svm = false;
};

namespace detail {

// Stratified fold labels: each class is shuffled then dealt round-robin,
// with the deal position carried across classes so no fold is left empty
// even at k = |data| (leave-one-out).
inline std::vector<int> stratified_folds(const LabeledDataset& data, int k,
                                         std::uint64_t seed) {
  std::vector<int> fold_of(data.samples.size());
  std::size_t cursor = 0;
  Rng rng(seed);
  for (int label : {1, 0}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < data.samples.size(); ++i)
      if (data.samples[i].label == label) idx.push_back(i);
    rng.shuffle(idx);
    for (std::size_t i : idx)
      fold_of[i] = static_cast<int>(cursor++ % static_cast<std::size_t>(k));
  }
  return fold_of;
}

inline void accumulate(AggregateMetric& agg, const MetricValue& v) {
  if (v.defined) {
    agg.mean += v.value;
    agg.n_defined++;
  } else {
    agg.n_undefined++;
  }
}

}  // namespace detail

// Repeated stratified k-fold cross-validation. Fold assignment, training
// and testing happen in (repeat, fold) order with all randomness derived
// from the master seed, so results replay exactly. Reported metrics are
// means over fold-tests; curves come from the pooled out-of-fold scores.
inline CvResult cross_validate(const LabeledDataset& data,
                               const ModelSpec& spec, const CvConfig& cfg) {
  if (cfg.folds < 2) throw ParameterError("cross_validate: need >= 2 folds");
  if (cfg.repeats < 1)
    throw ParameterError("cross_validate: need >= 1 repeat");
  if (static_cast<std::size_t>(cfg.folds) > data.samples.size())
    throw ParameterError("cross_validate: more folds than samples");

  CvResult res;
  res.beta = cfg.beta;
  std::vector<double> pooled_scores;
  std::vector<int> pooled_labels;

  const auto t0 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < cfg.repeats; ++rep) {
    const std::vector<int> fold_of = detail::stratified_folds(
        data, cfg.folds, mix_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(rep)));
    for (int f = 0; f < cfg.folds; ++f) {
      LabeledDataset train, test;
      train.columns = data.columns;
      test.columns = data.columns;
      for (std::size_t i = 0; i < data.samples.size(); ++i)
        (fold_of[i] == f ? test : train).samples.push_back(data.samples[i]);

      const std::uint64_t fold_seed = mix_seed(
          cfg.seed, 7919ULL * static_cast<std::uint64_t>(rep + 1) +
                        static_cast<std::uint64_t>(f));
      if (cfg.smote_inside_folds) {
        SmoteParams sp = cfg.smote;
        sp.seed = mix_seed(fold_seed, 17);
        train = smote(train, sp);
      }

      const FittedModel model = fit_model(train, spec, fold_seed);
      if (spec.kind == ModelKind::Svm && !model.svm.converged)
        res.any_unconverged_svm = true;

      std::vector<int> predicted, actual;
      for (const auto& s : test.samples) {
        const double sc = model.score(s.feature);
        pooled_scores.push_back(sc);
        pooled_labels.push_back(s.label);
        predicted.push_back(sc >= 0.5 ? 1 : 0);
        actual.push_back(s.label);
      }

      FoldOutcome out;
      out.repeat = rep;
      out.fold = f;
      out.cm = confusion(predicted, actual);
      out.metrics = compute_metrics(out.cm, cfg.beta);
      detail::accumulate(res.accuracy, out.metrics.accuracy);
      detail::accumulate(res.precision, out.metrics.precision);
      detail::accumulate(res.recall, out.metrics.recall);
      detail::accumulate(res.tnr, out.metrics.tnr);
      detail::accumulate(res.f_beta, out.metrics.f_beta);
      detail::accumulate(res.mcc, out.metrics.mcc);
      res.folds.push_back(std::move(out));
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  res.train_eval_seconds =
      std::chrono::duration<double>(t1 - t0).count();

  for (AggregateMetric* a : {&res.accuracy, &res.precision, &res.recall,
                             &res.tnr, &res.f_beta, &res.mcc})
    if (a->n_defined > 0) a->mean /= static_cast<double>(a->n_defined);

  res.curves = score_curves(pooled_scores, pooled_labels);
  return res;
}

}  // namespace soh
