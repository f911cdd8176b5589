#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "soh/classifier.hpp"
#include "soh/crossval.hpp"
#include "soh/feature.hpp"
#include "soh/propose.hpp"

namespace soh {

// Every knob a run depends on, bundled so it can be echoed into reports
// and replayed from file. JSON round-trips preserve doubles exactly.
struct RunConfig {
  Variant variant = Variant::Soh07;
  SohConfig soh;
  ModelSpec model;
  CvConfig cv;
  ProposerConfig proposer;
  std::uint64_t seed = 0;
};

inline nlohmann::json to_json(const SohConfig& c) {
  nlohmann::json j{{"gaussian_sigma", c.gaussian_sigma},
                   {"gaussian_kernel_size", c.gaussian_kernel_size},
                   {"mag_fraction", c.mag_fraction},
                   {"n_bins", c.n_bins},
                   {"use_distance_curve", c.use_distance_curve}};
  if (c.edge_threshold)
    j["edge_threshold"] = *c.edge_threshold;
  else
    j["edge_threshold"] = nullptr;
  return j;
}

inline SohConfig soh_config_from_json(const nlohmann::json& j) {
  SohConfig c;
  c.gaussian_sigma = j.at("gaussian_sigma").get<double>();
  c.gaussian_kernel_size = j.at("gaussian_kernel_size").get<int>();
  c.mag_fraction = j.at("mag_fraction").get<double>();
  c.n_bins = j.at("n_bins").get<int>();
  c.use_distance_curve = j.at("use_distance_curve").get<bool>();
  if (j.contains("edge_threshold") && !j.at("edge_threshold").is_null())
    c.edge_threshold = j.at("edge_threshold").get<double>();
  return c;
}

inline nlohmann::json to_json(const SvmParams& p) {
  return {{"gamma", p.gamma},
          {"c", p.c},
          {"cost", {{p.cost[0][0], p.cost[0][1]}, {p.cost[1][0], p.cost[1][1]}}},
          {"tol", p.tol},
          {"max_pass_factor", p.max_pass_factor}};
}

inline SvmParams svm_params_from_json(const nlohmann::json& j) {
  SvmParams p;
  p.gamma = j.at("gamma").get<double>();
  p.c = j.at("c").get<double>();
  const auto& m = j.at("cost");
  p.cost = {{{m[0][0].get<double>(), m[0][1].get<double>()},
             {m[1][0].get<double>(), m[1][1].get<double>()}}};
  p.tol = j.at("tol").get<double>();
  p.max_pass_factor = j.at("max_pass_factor").get<int>();
  return p;
}

inline nlohmann::json to_json(const ModelSpec& m) {
  return {{"kind", model_kind_name(m.kind)},
          {"n_trees", m.n_trees},
          {"svm", to_json(m.svm)}};
}

inline ModelSpec model_spec_from_json(const nlohmann::json& j) {
  ModelSpec m;
  m.kind = parse_model_kind(j.at("kind").get<std::string>());
  m.n_trees = j.at("n_trees").get<int>();
  m.svm = svm_params_from_json(j.at("svm"));
  return m;
}

inline nlohmann::json to_json(const RunConfig& r) {
  return {{"variant", variant_name(r.variant)},
          {"soh", to_json(r.soh)},
          {"model", to_json(r.model)},
          {"cv",
           {{"folds", r.cv.folds},
            {"repeats", r.cv.repeats},
            {"beta", r.cv.beta},
            {"smote_inside_folds", r.cv.smote_inside_folds},
            {"smote_n_percent", r.cv.smote.n_percent},
            {"smote_k", r.cv.smote.k}}},
          {"proposer",
           {{"scales", r.proposer.scales},
            {"stride_divisor", r.proposer.stride_divisor},
            {"score_threshold", r.proposer.score_threshold},
            {"nms_iou", r.proposer.nms_iou},
            {"min_window", r.proposer.min_window}}},
          {"seed", r.seed}};
}

inline RunConfig run_config_from_json(const nlohmann::json& j) {
  RunConfig r;
  r.variant = parse_variant(j.at("variant").get<std::string>());
  r.soh = soh_config_from_json(j.at("soh"));
  r.model = model_spec_from_json(j.at("model"));
  const auto& cv = j.at("cv");
  r.cv.folds = cv.at("folds").get<int>();
  r.cv.repeats = cv.at("repeats").get<int>();
  r.cv.beta = cv.at("beta").get<double>();
  r.cv.smote_inside_folds = cv.at("smote_inside_folds").get<bool>();
  r.cv.smote.n_percent = cv.at("smote_n_percent").get<int>();
  r.cv.smote.k = cv.at("smote_k").get<int>();
  const auto& pr = j.at("proposer");
  r.proposer.scales = pr.at("scales").get<std::vector<double>>();
  r.proposer.stride_divisor = pr.at("stride_divisor").get<int>();
  r.proposer.score_threshold = pr.at("score_threshold").get<double>();
  r.proposer.nms_iou = pr.at("nms_iou").get<double>();
  r.proposer.min_window = pr.at("min_window").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

inline void save_run_config(const std::string& path, const RunConfig& r) {
  std::ofstream os(path);
  if (!os) throw LayoutError("cannot open for writing: " + path);
  os << to_json(r).dump(2) << '\n';
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw LayoutError("cannot open: " + path);
  nlohmann::json j;
  try {
    is >> j;
    return run_config_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace soh
