#pragma once

#include <string>

#include "soh/forest.hpp"
#include "soh/svm.hpp"

namespace soh {

enum class ModelKind { Forest, Svm };

inline std::string model_kind_name(ModelKind k) {
  return k == ModelKind::Forest ? "forest" : "svm";
}

inline ModelKind parse_model_kind(const std::string& s) {
  if (s == "forest") return ModelKind::Forest;
  if (s == "svm") return ModelKind::Svm;
  throw ParameterError("unknown classifier kind: " + s);
}

// Training recipe for either classifier family.
struct ModelSpec {
  ModelKind kind = ModelKind::Forest;
  int n_trees = 80;
  SvmParams svm;
};

// A trained classifier of either kind with a unified score in [0, 1];
// score >= 0.5 reads as class 1 for both families (for the SVM that is
// exactly decision >= 0).
struct FittedModel {
  ModelKind kind = ModelKind::Forest;
  ForestModel forest;
  SvmModel svm;

  double score(const std::vector<double>& x) const {
    return kind == ModelKind::Forest ? forest_score(forest, x)
                                     : svm_score(svm, x);
  }
  int predict(const std::vector<double>& x) const {
    return score(x) >= 0.5 ? 1 : 0;
  }
  int feature_dim() const {
    return kind == ModelKind::Forest ? forest.feature_dim : svm.feature_dim;
  }
};

inline FittedModel fit_model(const LabeledDataset& data, const ModelSpec& spec,
                             std::uint64_t seed) {
  FittedModel m;
  m.kind = spec.kind;
  if (spec.kind == ModelKind::Forest) {
    m.forest = train_forest(data, spec.n_trees, seed);
  } else {
    SvmParams p = spec.svm;
    p.seed = seed;
    m.svm = train_svm(data, p);
  }
  return m;
}

}  // namespace soh
