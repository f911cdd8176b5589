// Command-line frontend for the descriptor pipeline: corpus generation,
// feature extraction, rebalancing, training, evaluation and window
// proposals. Every subcommand prints a short summary to stdout and fails
// with a nonzero exit code and an `error:` line on stderr.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "soh/image_dataset.hpp"
#include "soh/model_io.hpp"
#include "soh/report.hpp"
#include "soh/soh.hpp"

namespace fs = std::filesystem;

namespace {

struct SohFlags {
  double sigma = 1.0;
  int kernel = 5;
  double edge_threshold = -1.0;  // negative = automatic
  double mag_fraction = 0.1;
  int bins = 72;
  bool raw_curve = false;

  soh::SohConfig config() const {
    soh::SohConfig c;
    c.gaussian_sigma = sigma;
    c.gaussian_kernel_size = kernel;
    if (edge_threshold >= 0.0) c.edge_threshold = edge_threshold;
    c.mag_fraction = mag_fraction;
    c.n_bins = bins;
    c.use_distance_curve = !raw_curve;
    return c;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--sigma", sigma, "Gaussian smoothing sigma");
    cmd->add_option("--kernel", kernel, "Gaussian kernel size (odd)");
    cmd->add_option("--edge-threshold", edge_threshold,
                    "Edge threshold on gradient magnitude (negative = 4x mean)");
    cmd->add_option("--mag-fraction", mag_fraction,
                    "Keep orientations with magnitude >= fraction * max");
    cmd->add_option("--bins", bins, "Histogram bin count");
    cmd->add_flag("--raw-curve", raw_curve,
                  "Compare halves of the raw cumulative curve instead of the "
                  "line-distance curve");
  }
};

struct ModelFlags {
  std::string classifier = "forest";
  int trees = 80;
  double gamma = 1.0;
  double c = 1.0;
  double cost_fn = 3.0;
  double cost_fp = 1.0;

  soh::ModelSpec spec() const {
    soh::ModelSpec m;
    m.kind = soh::parse_model_kind(classifier);
    m.n_trees = trees;
    m.svm.gamma = gamma;
    m.svm.c = c;
    m.svm.cost = {{{0.0, cost_fp}, {cost_fn, 0.0}}};
    return m;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--classifier", classifier, "forest or svm")
        ->check(CLI::IsMember({"forest", "svm"}));
    cmd->add_option("--trees", trees, "Forest size");
    cmd->add_option("--gamma", gamma, "RBF kernel gamma");
    cmd->add_option("--c", c, "SVM box constraint");
    cmd->add_option("--cost-fn", cost_fn, "Cost of missing a target");
    cmd->add_option("--cost-fp", cost_fp, "Cost of a false alarm");
  }
};

soh::LabeledDataset load_features(const std::string& path,
                                  const std::string& variant_flag,
                                  soh::Variant* out_variant) {
  soh::LabeledDataset d = soh::read_csv(path);
  std::optional<soh::Variant> matched;
  for (soh::Variant v : soh::all_variants())
    if (d.columns == soh::variant_columns(v)) matched = v;

  if (!variant_flag.empty()) {
    const soh::Variant want = soh::parse_variant(variant_flag);
    if (matched == want) {
      *out_variant = want;
      return d;
    }
    if (matched == soh::Variant::Soh12) {
      *out_variant = want;
      return soh::project_variant(d, want);
    }
    throw soh::ParameterError(path + " holds " +
                              (matched ? soh::variant_name(*matched)
                                       : std::string("a custom table")) +
                              ", cannot serve " + soh::variant_name(want));
  }
  if (!matched)
    throw soh::ParameterError(path +
                              ": columns match no variant; pass --variant");
  *out_variant = *matched;
  return d;
}

nlohmann::json dataset_summary(const std::string& path,
                               const soh::LabeledDataset& d) {
  return {{"path", path},
          {"targets", d.count(1)},
          {"background", d.count(0)},
          {"dimension", d.dimension()}};
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream os(path);
  if (!os) throw soh::LayoutError("cannot open for writing: " + path);
  os << j.dump(2) << '\n';
}

void print_aggregate(const char* name, const soh::AggregateMetric& a) {
  std::cout << "  " << name << ": " << a.mean;
  if (a.n_undefined > 0)
    std::cout << " (" << a.n_undefined << " undefined folds skipped)";
  std::cout << '\n';
}

// ---------------------------------------------------------------- synth --

int cmd_synth(const std::string& out_dir, int per_class, std::uint64_t seed,
              int size, bool with_scene) {
  fs::create_directories(fs::path(out_dir) / "artcode");
  fs::create_directories(fs::path(out_dir) / "non-artcode");
  const auto samples = soh::generate_synthetic(per_class, seed, size);
  int pos = 0, neg = 0;
  char name[64];
  for (const auto& s : samples) {
    if (s.label == 1) {
      std::snprintf(name, sizeof(name), "target_%04d.png", pos++);
      soh::write_image((fs::path(out_dir) / "artcode" / name).string(),
                       s.image);
    } else {
      std::snprintf(name, sizeof(name), "background_%04d.png", neg++);
      soh::write_image((fs::path(out_dir) / "non-artcode" / name).string(),
                       s.image);
    }
  }
  if (with_scene) {
    const soh::PlacedTarget scene = soh::synthetic_scene(seed);
    soh::write_image((fs::path(out_dir) / "scene.png").string(), scene.image);
    write_json((fs::path(out_dir) / "scene.json").string(),
               {{"x", scene.x},
                {"y", scene.y},
                {"width", scene.width},
                {"height", scene.height}});
  }
  std::cout << "wrote " << pos << " targets and " << neg
            << " background images to " << out_dir << '\n';
  return 0;
}

// -------------------------------------------------------------- extract --

int cmd_extract(const std::string& images, const std::string& out,
                const std::string& variant_flag, bool all_variables,
                const SohFlags& sf, int expect_pos, int expect_neg) {
  const soh::ImageDataset ds = soh::load_image_dataset(images);
  if (expect_pos >= 0 &&
      (static_cast<int>(ds.count(1)) != expect_pos ||
       static_cast<int>(ds.count(0)) != expect_neg))
    std::cerr << "warning: expected " << expect_pos << '/' << expect_neg
              << " images, found " << ds.count(1) << '/' << ds.count(0)
              << '\n';

  soh::ExtractionResult res;
  if (all_variables) {
    res = soh::extract_all_variables(ds, sf.config());
  } else {
    const soh::Variant v =
        soh::parse_variant(variant_flag.empty() ? "SOH-07" : variant_flag);
    res = soh::extract_features(ds, v, sf.config());
  }
  soh::write_csv(out, res.features);
  std::cout << "extracted " << res.features.samples.size() << " rows ("
            << res.skipped << " skipped) in " << res.extract_seconds
            << " s -> " << out << '\n';
  return 0;
}

// ------------------------------------------------------------ rebalance --

int cmd_rebalance(const std::string& in, const std::string& out, int scheme,
                  std::uint64_t seed) {
  const soh::LabeledDataset d = soh::read_csv(in);
  const soh::LabeledDataset r = soh::build_rebalanced(d, scheme, seed);
  soh::write_csv(out, r);
  std::cout << "scheme " << scheme << ": " << d.count(1) << '/' << d.count(0)
            << " -> " << r.count(1) << '/' << r.count(0) << " -> " << out
            << '\n';
  return 0;
}

// ---------------------------------------------------------------- train --

int cmd_train(const std::string& features, const std::string& model_out,
              const std::string& variant_flag, const ModelFlags& mf,
              const SohFlags& sf, std::uint64_t seed) {
  soh::Variant variant = soh::Variant::Soh07;
  const soh::LabeledDataset d = load_features(features, variant_flag, &variant);

  soh::SavedModel sm;
  sm.model = soh::fit_model(d, mf.spec(), seed);
  sm.variant = variant;
  sm.soh = sf.config();
  soh::save_model(model_out, sm);

  int correct = 0;
  for (const auto& s : d.samples)
    if (sm.model.predict(s.feature) == s.label) ++correct;
  std::cout << "trained " << mf.classifier << " on " << d.samples.size()
            << " samples (" << soh::variant_name(variant)
            << "), training accuracy "
            << static_cast<double>(correct) / d.samples.size() << " -> "
            << model_out << '\n';
  if (sm.model.kind == soh::ModelKind::Svm && !sm.model.svm.converged)
    std::cerr << "warning: optimizer hit the pass cap before reaching the "
                 "KKT tolerance\n";
  return 0;
}

// ------------------------------------------------------------- evaluate --

int cmd_evaluate(const std::string& features, const std::string& variant_flag,
                 const ModelFlags& mf, const SohFlags& sf, int folds,
                 int repeats, double beta, bool smote_inside, int smote_n,
                 int smote_k, std::uint64_t seed, const std::string& report,
                 const std::string& curves_prefix) {
  soh::Variant variant = soh::Variant::Soh07;
  const soh::LabeledDataset d = load_features(features, variant_flag, &variant);

  soh::RunConfig rc;
  rc.variant = variant;
  rc.soh = sf.config();
  rc.model = mf.spec();
  rc.cv.folds = folds;
  rc.cv.repeats = repeats;
  rc.cv.beta = beta;
  rc.cv.seed = seed;
  rc.cv.smote_inside_folds = smote_inside;
  rc.cv.smote.n_percent = smote_n;
  rc.cv.smote.k = smote_k;
  rc.seed = seed;

  const soh::CvResult res = soh::cross_validate(d, rc.model, rc.cv);

  std::cout << folds << "-fold x " << repeats << " on " << d.samples.size()
            << " samples (" << soh::variant_name(variant) << ", "
            << mf.classifier << "):\n";
  print_aggregate("accuracy", res.accuracy);
  print_aggregate("precision", res.precision);
  print_aggregate("recall", res.recall);
  print_aggregate("tnr", res.tnr);
  print_aggregate("f_beta", res.f_beta);
  print_aggregate("mcc", res.mcc);
  std::cout << "  roc_auc: " << res.curves.roc.auc
            << "\n  pr_auc: " << res.curves.pr.auc
            << "\n  train_eval_seconds: " << res.train_eval_seconds << '\n';
  if (res.any_unconverged_svm)
    std::cerr << "warning: at least one fold hit the optimizer pass cap\n";

  if (!report.empty())
    write_json(report, {{"command", "evaluate"},
                        {"config", soh::to_json(rc)},
                        {"dataset", dataset_summary(features, d)},
                        {"results", soh::to_json(res)}});
  if (!curves_prefix.empty()) {
    soh::write_curve_csv(curves_prefix + "_roc.csv", res.curves.roc,
                         "false_positive_rate", "true_positive_rate");
    soh::write_curve_csv(curves_prefix + "_pr.csv", res.curves.pr, "recall",
                         "precision");
    soh::write_curve_svg(curves_prefix + "_roc.svg", res.curves.roc,
                         "ROC", "false positive rate", "true positive rate");
    soh::write_curve_svg(curves_prefix + "_pr.svg", res.curves.pr,
                         "Precision-Recall", "recall", "precision");
  }
  return 0;
}

// -------------------------------------------------------------- compare --

int cmd_compare(const std::string& images, const ModelFlags& mf,
                const SohFlags& sf, int folds, int repeats, double beta,
                std::uint64_t seed, const std::string& report,
                const std::string& table) {
  const soh::ImageDataset ds = soh::load_image_dataset(images);
  const soh::ExtractionResult full =
      soh::extract_all_variables(ds, sf.config());
  std::cout << "extracted " << full.features.samples.size() << " rows ("
            << full.skipped << " skipped) in " << full.extract_seconds
            << " s\n";

  nlohmann::json rows = nlohmann::json::array();
  std::cout << "variant    accuracy  precision recall    tnr       f_beta    "
               "mcc       seconds\n";
  for (soh::Variant v : soh::all_variants()) {
    const soh::LabeledDataset d = soh::project_variant(full.features, v);
    soh::CvConfig cv;
    cv.folds = folds;
    cv.repeats = repeats;
    cv.beta = beta;
    cv.seed = seed;
    const soh::CvResult res = soh::cross_validate(d, mf.spec(), cv);
    char line[160];
    std::snprintf(line, sizeof(line),
                  "%-10s %-9.6f %-9.6f %-9.6f %-9.6f %-9.6f %-9.6f %.2f\n",
                  soh::variant_name(v).c_str(), res.accuracy.mean,
                  res.precision.mean, res.recall.mean, res.tnr.mean,
                  res.f_beta.mean, res.mcc.mean, res.train_eval_seconds);
    std::cout << line;
    rows.push_back({{"variant", soh::variant_name(v)},
                    {"results", soh::to_json(res, false)}});
  }

  if (!report.empty())
    write_json(report,
               {{"command", "compare"},
                {"dataset",
                 {{"path", images},
                  {"targets", ds.count(1)},
                  {"background", ds.count(0)},
                  {"skipped", full.skipped}}},
                {"extract_seconds", full.extract_seconds},
                {"cv", {{"folds", folds}, {"repeats", repeats}, {"beta", beta}}},
                {"classifier", soh::to_json(mf.spec())},
                {"seed", seed},
                {"rows", rows}});
  if (!table.empty()) {
    std::ofstream os(table);
    if (!os) throw soh::LayoutError("cannot open for writing: " + table);
    os << "variant,accuracy,precision,recall,tnr,f_beta,mcc,seconds\n";
    for (const auto& r : rows) {
      const auto& res = r.at("results");
      os << r.at("variant").get<std::string>() << ','
         << soh::format_double(res.at("accuracy").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("precision").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("recall").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("tnr").at("mean").get<double>()) << ','
         << soh::format_double(res.at("f_beta").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("mcc").at("mean").get<double>()) << ','
         << soh::format_double(res.at("train_eval_seconds").get<double>())
         << '\n';
    }
  }
  return 0;
}

// -------------------------------------------------------------- propose --

int cmd_propose(const std::string& image_path, const std::string& model_path,
                const std::string& out, const std::string& annotate,
                double threshold, double nms, int min_window,
                int stride_divisor, const std::vector<double>& scales) {
  const soh::SavedModel sm = soh::load_model(model_path);
  soh::RgbImage img = soh::read_image(image_path);

  soh::ProposerConfig pc;
  if (!scales.empty()) pc.scales = scales;
  pc.score_threshold = threshold;
  pc.nms_iou = nms;
  pc.min_window = min_window;
  pc.stride_divisor = stride_divisor;

  const std::vector<soh::Region> regions =
      soh::propose_regions(img, sm.model, sm.variant, sm.soh, pc);
  std::cout << regions.size() << " proposals";
  if (!regions.empty())
    std::cout << "; best " << regions[0].width << "x" << regions[0].height
              << " at (" << regions[0].x << "," << regions[0].y
              << ") score " << regions[0].score;
  std::cout << '\n';

  if (!out.empty())
    write_json(out, {{"image", image_path},
                     {"model", model_path},
                     {"regions", soh::to_json(regions)}});
  if (!annotate.empty()) {
    soh::annotate_regions(img, regions);
    soh::write_image(annotate, img);
  }
  return 0;
}

// --------------------------------------------------------------- report --

int cmd_report(const std::vector<std::string>& inputs,
               const std::string& out) {
  std::ofstream os(out);
  if (!os) throw soh::LayoutError("cannot open for writing: " + out);
  os << "source,variant,classifier,accuracy,precision,recall,tnr,f_beta,mcc,"
        "roc_auc,pr_auc,seconds\n";
  for (const auto& path : inputs) {
    std::ifstream is(path);
    if (!is) throw soh::LayoutError("cannot open: " + path);
    nlohmann::json j;
    try {
      is >> j;
      const auto& res = j.at("results");
      const auto& cfg = j.at("config");
      os << fs::path(path).stem().string() << ','
         << cfg.at("variant").get<std::string>() << ','
         << cfg.at("model").at("kind").get<std::string>() << ','
         << soh::format_double(res.at("accuracy").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("precision").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("recall").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("tnr").at("mean").get<double>()) << ','
         << soh::format_double(res.at("f_beta").at("mean").get<double>())
         << ','
         << soh::format_double(res.at("mcc").at("mean").get<double>()) << ','
         << soh::format_double(res.at("roc_auc").get<double>()) << ','
         << soh::format_double(res.at("pr_auc").get<double>()) << ','
         << soh::format_double(res.at("train_eval_seconds").get<double>())
         << '\n';
    } catch (const nlohmann::json::exception& e) {
      throw soh::FormatError(path + ": not an evaluation report: " + e.what());
    }
  }
  std::cout << "merged " << inputs.size() << " reports -> " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape-of-orientation-histogram pipeline"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  std::string sy_out;
  int sy_per_class = 100, sy_size = 160;
  std::uint64_t sy_seed = 0;
  bool sy_scene = false;
  synth->add_option("--out", sy_out, "Output directory")->required();
  synth->add_option("--per-class", sy_per_class, "Images per class");
  synth->add_option("--size", sy_size, "Image side length");
  synth->add_option("--seed", sy_seed, "Random seed")->envname("SEED");
  synth->add_flag("--scene", sy_scene,
                  "Also write scene.png with a known target location");

  // extract
  auto* extract = app.add_subcommand(
      "extract", "Compute descriptors for an image folder into CSV");
  std::string ex_images, ex_out, ex_variant;
  bool ex_all = false;
  int ex_expect_pos = -1, ex_expect_neg = -1;
  SohFlags ex_soh;
  extract->add_option("--images", ex_images, "Folder with artcode/ and non-artcode/")
      ->required();
  extract->add_option("--out", ex_out, "Output CSV")->required();
  extract->add_option("--variant", ex_variant, "Descriptor variant (default SOH-07)");
  extract->add_flag("--all-variables", ex_all,
                    "Emit all twelve variables instead of one variant");
  extract->add_option("--expect-targets", ex_expect_pos,
                      "Warn when the target image count differs");
  extract->add_option("--expect-background", ex_expect_neg,
                      "Warn when the background image count differs");
  ex_soh.attach(extract);

  // rebalance (alias build-satad)
  auto* rebalance = app.add_subcommand(
      "rebalance", "Build a rebalanced training set from a feature CSV");
  rebalance->alias("build-satad");
  std::string rb_in, rb_out;
  int rb_scheme = 1;
  std::uint64_t rb_seed = 0;
  rebalance->add_option("--in", rb_in, "Input feature CSV")->required();
  rebalance->add_option("--out", rb_out, "Output feature CSV")->required();
  rebalance->add_option("--scheme", rb_scheme, "Rebalancing scheme 1..4")
      ->check(CLI::Range(1, 4));
  rebalance->add_option("--seed", rb_seed, "Random seed")->envname("SEED");

  // train
  auto* train = app.add_subcommand("train", "Fit a classifier and save it");
  std::string tr_features, tr_model, tr_variant;
  std::uint64_t tr_seed = 0;
  ModelFlags tr_mf;
  SohFlags tr_soh;
  train->add_option("--features", tr_features, "Training feature CSV")
      ->required();
  train->add_option("--model", tr_model, "Output model JSON")->required();
  train->add_option("--variant", tr_variant,
                    "Project a 12-column table to this variant");
  train->add_option("--seed", tr_seed, "Random seed")->envname("SEED");
  tr_mf.attach(train);
  tr_soh.attach(train);

  // evaluate
  auto* evaluate = app.add_subcommand(
      "evaluate", "Repeated stratified cross-validation on a feature CSV");
  std::string ev_features, ev_variant, ev_report, ev_curves;
  int ev_folds = 5, ev_repeats = 10, ev_smote_n = 100, ev_smote_k = 5;
  double ev_beta = 2.0;
  bool ev_smote_inside = false;
  std::uint64_t ev_seed = 0;
  ModelFlags ev_mf;
  SohFlags ev_soh;
  evaluate->add_option("--features", ev_features, "Feature CSV")->required();
  evaluate->add_option("--variant", ev_variant,
                       "Project a 12-column table to this variant");
  evaluate->add_option("--folds", ev_folds, "Fold count");
  evaluate->add_option("--repeats", ev_repeats, "Repeat count");
  evaluate->add_option("--beta", ev_beta, "Beta for the F measure");
  evaluate->add_flag("--smote-inside", ev_smote_inside,
                     "Oversample the minority class inside each training fold");
  evaluate->add_option("--smote-n", ev_smote_n, "Oversampling percentage");
  evaluate->add_option("--smote-k", ev_smote_k, "Oversampling neighborhood");
  evaluate->add_option("--seed", ev_seed, "Random seed")->envname("SEED");
  evaluate->add_option("--report", ev_report, "Write a JSON report here");
  evaluate->add_option("--curves-prefix", ev_curves,
                       "Write PFX_roc/_pr .csv and .svg curve files");
  ev_mf.attach(evaluate);
  ev_soh.attach(evaluate);

  // compare
  auto* compare = app.add_subcommand(
      "compare", "Evaluate all five descriptor variants on one image folder");
  std::string cp_images, cp_report, cp_table;
  int cp_folds = 5, cp_repeats = 10;
  double cp_beta = 2.0;
  std::uint64_t cp_seed = 0;
  ModelFlags cp_mf;
  cp_mf.classifier = "svm";
  SohFlags cp_soh;
  compare->add_option("--images", cp_images, "Folder with artcode/ and non-artcode/")
      ->required();
  compare->add_option("--folds", cp_folds, "Fold count");
  compare->add_option("--repeats", cp_repeats, "Repeat count");
  compare->add_option("--beta", cp_beta, "Beta for the F measure");
  compare->add_option("--seed", cp_seed, "Random seed")->envname("SEED");
  compare->add_option("--report", cp_report, "Write a JSON report here");
  compare->add_option("--table", cp_table, "Write a CSV table here");
  cp_mf.attach(compare);
  cp_soh.attach(compare);

  // propose
  auto* propose = app.add_subcommand(
      "propose", "Score sliding windows over an image with a saved model");
  std::string pp_image, pp_model, pp_out, pp_annotate;
  double pp_threshold = 0.5, pp_nms = 0.5;
  int pp_min_window = 24, pp_stride = 4;
  std::vector<double> pp_scales;
  propose->add_option("--image", pp_image, "Input image")->required();
  propose->add_option("--model", pp_model, "Model JSON from `train`")
      ->required();
  propose->add_option("--out", pp_out, "Write proposals as JSON here");
  propose->add_option("--annotate", pp_annotate,
                      "Write the image with proposals drawn in");
  propose->add_option("--threshold", pp_threshold, "Minimum score to keep");
  propose->add_option("--nms", pp_nms, "Overlap limit between proposals");
  propose->add_option("--min-window", pp_min_window, "Smallest usable window");
  propose->add_option("--stride-divisor", pp_stride, "Stride = window / this");
  propose->add_option("--scales", pp_scales, "Window sizes as fractions of the short side")
      ->delimiter(',');

  // report
  auto* report = app.add_subcommand(
      "report", "Merge evaluation reports into one CSV table");
  std::vector<std::string> rp_in;
  std::string rp_out;
  report->add_option("--in", rp_in, "Evaluation report JSONs")->required();
  report->add_option("--out", rp_out, "Output CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed())
      return cmd_synth(sy_out, sy_per_class, sy_seed, sy_size, sy_scene);
    if (extract->parsed())
      return cmd_extract(ex_images, ex_out, ex_variant, ex_all, ex_soh,
                         ex_expect_pos, ex_expect_neg);
    if (rebalance->parsed())
      return cmd_rebalance(rb_in, rb_out, rb_scheme, rb_seed);
    if (train->parsed())
      return cmd_train(tr_features, tr_model, tr_variant, tr_mf, tr_soh,
                       tr_seed);
    if (evaluate->parsed())
      return cmd_evaluate(ev_features, ev_variant, ev_mf, ev_soh, ev_folds,
                          ev_repeats, ev_beta, ev_smote_inside, ev_smote_n,
                          ev_smote_k, ev_seed, ev_report, ev_curves);
    if (compare->parsed())
      return cmd_compare(cp_images, cp_mf, cp_soh, cp_folds, cp_repeats,
                         cp_beta, cp_seed, cp_report, cp_table);
    if (propose->parsed())
      return cmd_propose(pp_image, pp_model, pp_out, pp_annotate, pp_threshold,
                         pp_nms, pp_min_window, pp_stride, pp_scales);
    if (report->parsed()) return cmd_report(rp_in, rp_out);
  } catch (const soh::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const soh::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const soh::LayoutError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const soh::TrainingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
