#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "soh/dataset.hpp"
#include "soh/random.hpp"

namespace soh {

// Binary decision tree stored as a flat node array. feature < 0 marks a
// leaf; traversal goes left when x[feature] < threshold.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::int64_t count0 = 0;  // training samples per class at a leaf
  std::int64_t count1 = 0;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;

  // Leaf vote; a tied leaf votes for the target class.
  int predict(const std::vector<double>& x) const {
    int i = 0;
    while (nodes[static_cast<std::size_t>(i)].feature >= 0) {
      const TreeNode& n = nodes[static_cast<std::size_t>(i)];
      i = x[static_cast<std::size_t>(n.feature)] < n.threshold ? n.left
                                                               : n.right;
    }
    const TreeNode& leaf = nodes[static_cast<std::size_t>(i)];
    return leaf.count1 >= leaf.count0 ? 1 : 0;
  }
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  int feature_dim = 0;
  int features_per_split = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline double gini(std::int64_t c0, std::int64_t c1) {
  const double n = static_cast<double>(c0 + c1);
  if (n == 0.0) return 0.0;
  const double p0 = static_cast<double>(c0) / n;
  const double p1 = static_cast<double>(c1) / n;
  return 1.0 - p0 * p0 - p1 * p1;
}

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double impurity = 0.0;
};

// Best midpoint split over a random feature subset, minimizing the
// size-weighted Gini impurity of the children. Strictly-better wins, so
// ties keep the earlier candidate and the result is seed-deterministic.
inline SplitChoice best_split(const LabeledDataset& data,
                              const std::vector<std::size_t>& members,
                              const std::vector<int>& features) {
  SplitChoice best;
  double best_imp = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, int>> vals(members.size());
  for (int f : features) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& s = data.samples[members[i]];
      vals[i] = {s.feature[static_cast<std::size_t>(f)], s.label};
    }
    std::sort(vals.begin(), vals.end());

    std::int64_t tot0 = 0, tot1 = 0;
    for (const auto& [v, lab] : vals) (lab == 1 ? tot1 : tot0)++;
    std::int64_t l0 = 0, l1 = 0;
    const double n = static_cast<double>(vals.size());
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
      (vals[i].second == 1 ? l1 : l0)++;
      if (vals[i].first == vals[i + 1].first) continue;
      const std::int64_t nl = l0 + l1;
      const std::int64_t nr = static_cast<std::int64_t>(vals.size()) - nl;
      const double imp = (static_cast<double>(nl) * gini(l0, l1) +
                          static_cast<double>(nr) * gini(tot0 - l0, tot1 - l1)) /
                         n;
      if (imp < best_imp) {
        best_imp = imp;
        best.feature = f;
        best.threshold = 0.5 * (vals[i].first + vals[i + 1].first);
        best.impurity = imp;
      }
    }
  }
  return best;
}

inline int grow_tree(DecisionTree& tree, const LabeledDataset& data,
                     std::vector<std::size_t> members, int n_features,
                     int features_per_split, Rng& rng) {
  std::int64_t c0 = 0, c1 = 0;
  for (std::size_t i : members)
    (data.samples[i].label == 1 ? c1 : c0)++;

  const int me = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  tree.nodes.back().count0 = c0;
  tree.nodes.back().count1 = c1;

  // Grow until pure or too small; no depth cap, leaves may hold 1 sample.
  if (c0 == 0 || c1 == 0 || members.size() < 2) return me;

  std::vector<int> all(static_cast<std::size_t>(n_features));
  for (int f = 0; f < n_features; ++f) all[static_cast<std::size_t>(f)] = f;
  rng.shuffle(all);
  all.resize(static_cast<std::size_t>(features_per_split));
  std::sort(all.begin(), all.end());

  const SplitChoice split = best_split(data, members, all);
  if (split.feature < 0) return me;  // subset was constant on this node

  std::vector<std::size_t> lm, rm;
  for (std::size_t i : members) {
    const double v =
        data.samples[i].feature[static_cast<std::size_t>(split.feature)];
    (v < split.threshold ? lm : rm).push_back(i);
  }
  if (lm.empty() || rm.empty()) return me;

  members.clear();
  members.shrink_to_fit();
  const int l =
      grow_tree(tree, data, std::move(lm), n_features, features_per_split, rng);
  const int r =
      grow_tree(tree, data, std::move(rm), n_features, features_per_split, rng);
  TreeNode& node = tree.nodes[static_cast<std::size_t>(me)];
  node.feature = split.feature;
  node.threshold = split.threshold;
  node.left = l;
  node.right = r;
  return me;
}

}  // namespace detail

// Bagged forest: every tree sees a bootstrap sample of size n and draws
// floor(sqrt(d)) candidate features at each split. Each tree owns an RNG
// stream derived from the master seed, so the model is independent of
// construction order.
inline ForestModel train_forest(const LabeledDataset& data, int n_trees = 80,
                                std::uint64_t seed = 0) {
  if (n_trees < 1) throw ParameterError("train_forest: need at least 1 tree");
  if (data.samples.empty()) throw TrainingError("train_forest: empty dataset");
  if (data.count(0) == 0 || data.count(1) == 0)
    throw TrainingError("train_forest: training data has a single class");

  ForestModel m;
  m.feature_dim = data.dimension();
  m.features_per_split = std::max(
      1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(m.feature_dim)))));
  m.seed = seed;
  m.trees.resize(static_cast<std::size_t>(n_trees));

  const std::size_t n = data.samples.size();
  for (int t = 0; t < n_trees; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<std::size_t> boot(n);
    for (std::size_t i = 0; i < n; ++i)
      boot[i] = static_cast<std::size_t>(rng.below(n));
    detail::grow_tree(m.trees[static_cast<std::size_t>(t)], data,
                      std::move(boot), m.feature_dim, m.features_per_split,
                      rng);
  }
  return m;
}

// Fraction of trees voting for class 1.
inline double forest_score(const ForestModel& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.feature_dim)
    throw ParameterError("forest_score: feature dimension mismatch");
  int votes = 0;
  for (const auto& t : m.trees) votes += t.predict(x);
  return static_cast<double>(votes) / static_cast<double>(m.trees.size());
}

// score >= 0.5 maps to class 1, so an exactly split vote goes to 1.
inline int forest_predict(const ForestModel& m, const std::vector<double>& x) {
  return forest_score(m, x) >= 0.5 ? 1 : 0;
}

}  // namespace soh
