#pragma once

#include <algorithm>
#include <cmath>
#include <iostream>
#include <vector>

#include "soh/dataset.hpp"
#include "soh/random.hpp"

namespace soh {

inline double euclidean(const std::vector<double>& a,
                        const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

struct SmoteParams {
  int n_percent = 100;  // floor(n_percent / 100) synthetics per sample
  int k = 5;            // neighborhood size
  int target_label = 1;
  std::uint64_t seed = 0;
};

// Synthetic oversampling of one class. Each target-class sample F gets
// floor(N/100) synthetic companions; for each one a neighbor F_k is drawn
// uniformly from F's K nearest same-class neighbors (Euclidean, ties broken
// by original index, self excluded) and the synthetic point is
//   F + r * (F - F_k),  r uniform in [0, 1),
// i.e. the difference vector is added, stepping away from the neighbor.
// Originals are preserved verbatim and synthetics appended after them, in
// source order, labeled with the target class and marked synthetic.
inline LabeledDataset smote(const LabeledDataset& data,
                            const SmoteParams& p) {
  if (p.n_percent < 100)
    throw ParameterError("smote: n_percent must be >= 100");
  if (p.k < 1) throw ParameterError("smote: k must be >= 1");

  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < data.samples.size(); ++i)
    if (data.samples[i].label == p.target_label) idx.push_back(i);
  if (idx.size() < static_cast<std::size_t>(p.k) + 1)
    throw ParameterError("smote: target class needs more than k samples");

  // K nearest same-class neighbors for every target sample.
  std::vector<std::vector<std::size_t>> neighbors(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    std::vector<std::pair<double, std::size_t>> dist;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (b == a) continue;
      dist.emplace_back(
          euclidean(data.samples[idx[a]].feature, data.samples[idx[b]].feature),
          b);
    }
    std::sort(dist.begin(), dist.end());
    for (int j = 0; j < p.k; ++j) neighbors[a].push_back(dist[j].second);
  }

  LabeledDataset out = data;
  const int per_sample = p.n_percent / 100;
  Rng rng(p.seed);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::vector<double>& f = data.samples[idx[a]].feature;
    for (int s = 0; s < per_sample; ++s) {
      const std::size_t nb =
          neighbors[a][rng.below(neighbors[a].size())];
      const std::vector<double>& fk = data.samples[idx[nb]].feature;
      const double r = rng.uniform();
      std::vector<double> synth(f.size());
      for (std::size_t d = 0; d < f.size(); ++d)
        synth[d] = f[d] + r * (f[d] - fk[d]);
      out.push(std::move(synth), p.target_label, Provenance::Synthetic);
    }
  }
  return out;
}

// Keep a uniformly chosen subset of `target_count` samples of one class
// (relative order preserved); the other class passes through untouched.
inline LabeledDataset random_undersample(const LabeledDataset& data,
                                         int target_label,
                                         std::size_t target_count,
                                         std::uint64_t seed) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < data.samples.size(); ++i)
    if (data.samples[i].label == target_label) idx.push_back(i);
  if (target_count > idx.size())
    throw ParameterError("random_undersample: fewer samples than requested");

  Rng rng(seed);
  rng.shuffle(idx);
  idx.resize(target_count);
  std::sort(idx.begin(), idx.end());

  LabeledDataset out;
  out.columns = data.columns;
  std::size_t next = 0;
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    if (data.samples[i].label == target_label) {
      if (next < idx.size() && idx[next] == i) {
        out.samples.push_back(data.samples[i]);
        ++next;
      }
    } else {
      out.samples.push_back(data.samples[i]);
    }
  }
  return out;
}

// The four rebalanced training sets built from a 47/116 split
// (labels 1/0). Counts come out as 94/70, 94/94, 94/116 and 141/147.
inline LabeledDataset build_rebalanced(const LabeledDataset& data,
                                       int scheme, std::uint64_t seed,
                                       std::ostream* warn = &std::cerr) {
  const std::size_t n_pos = data.count(1);
  const std::size_t n_neg = data.count(0);
  if (warn && (n_pos != 47 || n_neg != 116))
    *warn << "warning: rebalancing expects 47/116 class counts, got "
          << n_pos << '/' << n_neg << '\n';

  SmoteParams sp;
  sp.seed = mix_seed(seed, 1);
  switch (scheme) {
    case 1:
      return random_undersample(smote(data, sp), 0, 70, mix_seed(seed, 2));
    case 2:
      return random_undersample(smote(data, sp), 0, 94, mix_seed(seed, 2));
    case 3:
      return smote(data, sp);
    case 4: {
      sp.n_percent = 200;
      LabeledDataset grown = smote(data, sp);  // doubles the minority

      // Grow the majority by a partial SMOTE round: generate one synthetic
      // per majority sample, then keep 31 of that synthetic pool.
      SmoteParams mp;
      mp.target_label = 0;
      mp.seed = mix_seed(seed, 3);
      LabeledDataset majority_grown = smote(data, mp);
      std::vector<std::size_t> pool;
      for (std::size_t i = data.samples.size();
           i < majority_grown.samples.size(); ++i)
        pool.push_back(i);
      Rng rng(mix_seed(seed, 4));
      rng.shuffle(pool);
      pool.resize(31);
      std::sort(pool.begin(), pool.end());
      for (std::size_t i : pool)
        grown.samples.push_back(majority_grown.samples[i]);
      return grown;
    }
    default:
      throw ParameterError("build_rebalanced: scheme must be 1..4");
  }
}

}  // namespace soh
