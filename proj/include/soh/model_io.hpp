#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "soh/run_config.hpp"

namespace soh {

// A trained classifier bundled with the feature recipe it was trained on,
// so a loaded model can score raw images (the proposer needs that).
struct SavedModel {
  FittedModel model;
  Variant variant = Variant::Soh07;
  SohConfig soh;
};

inline nlohmann::json to_json(const ForestModel& f) {
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& t : f.trees) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : t.nodes)
      nodes.push_back({{"f", n.feature},
                       {"t", n.threshold},
                       {"l", n.left},
                       {"r", n.right},
                       {"c0", n.count0},
                       {"c1", n.count1}});
    trees.push_back(std::move(nodes));
  }
  return {{"feature_dim", f.feature_dim},
          {"features_per_split", f.features_per_split},
          {"seed", f.seed},
          {"trees", std::move(trees)}};
}

inline ForestModel forest_from_json(const nlohmann::json& j) {
  ForestModel f;
  f.feature_dim = j.at("feature_dim").get<int>();
  f.features_per_split = j.at("features_per_split").get<int>();
  f.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& tj : j.at("trees")) {
    DecisionTree t;
    for (const auto& nj : tj) {
      TreeNode n;
      n.feature = nj.at("f").get<int>();
      n.threshold = nj.at("t").get<double>();
      n.left = nj.at("l").get<int>();
      n.right = nj.at("r").get<int>();
      n.count0 = nj.at("c0").get<std::int64_t>();
      n.count1 = nj.at("c1").get<std::int64_t>();
      t.nodes.push_back(n);
    }
    f.trees.push_back(std::move(t));
  }
  return f;
}

inline nlohmann::json to_json(const SvmModel& m) {
  return {{"support_vectors", m.support_vectors},
          {"dual_coef", m.dual_coef},
          {"bias", m.bias},
          {"gamma", m.gamma},
          {"feature_dim", m.feature_dim},
          {"converged", m.converged}};
}

inline SvmModel svm_from_json(const nlohmann::json& j) {
  SvmModel m;
  m.support_vectors =
      j.at("support_vectors").get<std::vector<std::vector<double>>>();
  m.dual_coef = j.at("dual_coef").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  m.gamma = j.at("gamma").get<double>();
  m.feature_dim = j.at("feature_dim").get<int>();
  m.converged = j.at("converged").get<bool>();
  return m;
}

inline void save_model(const std::string& path, const SavedModel& sm) {
  nlohmann::json j{{"format", "soh-model"},
                   {"version", 1},
                   {"kind", model_kind_name(sm.model.kind)},
                   {"variant", variant_name(sm.variant)},
                   {"soh", to_json(sm.soh)}};
  if (sm.model.kind == ModelKind::Forest)
    j["forest"] = to_json(sm.model.forest);
  else
    j["svm"] = to_json(sm.model.svm);
  std::ofstream os(path);
  if (!os) throw LayoutError("cannot open for writing: " + path);
  os << j.dump() << '\n';
}

inline SavedModel load_model(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw LayoutError("cannot open: " + path);
  nlohmann::json j;
  try {
    is >> j;
    if (j.at("format").get<std::string>() != "soh-model")
      throw FormatError(path + ": not a model file");
    SavedModel sm;
    sm.model.kind = parse_model_kind(j.at("kind").get<std::string>());
    sm.variant = parse_variant(j.at("variant").get<std::string>());
    sm.soh = soh_config_from_json(j.at("soh"));
    if (sm.model.kind == ModelKind::Forest)
      sm.model.forest = forest_from_json(j.at("forest"));
    else
      sm.model.svm = svm_from_json(j.at("svm"));
    return sm;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace soh
