#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "soh/codec.hpp"
#include "soh/image_dataset.hpp"
#include "soh/model_io.hpp"
#include "soh/report.hpp"
#include "soh/synthetic.hpp"

using namespace soh;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test, removed on destruction.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::path("scratch") / name) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& leaf) const {
    return (dir / leaf).string();
  }
};

LabeledDataset two_blob_dataset(std::uint64_t seed) {
  LabeledDataset d;
  d.columns = {"a", "b"};
  Rng rng(seed);
  for (int i = 0; i < 10; ++i)
    d.push({rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)}, 1);
  for (int i = 0; i < 10; ++i)
    d.push({rng.uniform(2.0, 3.0), rng.uniform(0.0, 1.0)}, 0);
  return d;
}

}  // namespace

TEST_CASE("png round trip is pixel-exact") {
  Scratch sc("png");
  const RgbImage img = canonical_ring_pattern(64);
  const std::string path = sc / "ring.png";
  write_image(path, img);
  const RgbImage back = read_image(path);
  REQUIRE(back.width == img.width);
  REQUIRE(back.height == img.height);
  CHECK(back.pixels == img.pixels);
}

TEST_CASE("decode and encode failures are reported as format errors") {
  Scratch sc("codec_err");
  CHECK_THROWS_AS(read_image(sc / "missing.png"), FormatError);
  const std::string garbage = sc / "garbage.png";
  std::ofstream(garbage) << "this is not an image";
  CHECK_THROWS_AS(read_image(garbage), FormatError);
  CHECK_THROWS_AS(write_image(sc / "no_dir/out.png", canonical_circle(32)),
                  FormatError);
}

TEST_CASE("image dataset loads both classes in sorted order") {
  Scratch sc("tree");
  fs::create_directories(sc.dir / "artcode" / "sub");
  fs::create_directories(sc.dir / "non-artcode");
  write_image(sc / "artcode/a.png", canonical_circle(48));
  write_image((sc.dir / "artcode" / "sub" / "b.png").string(),
              canonical_ring_pattern(48));
  write_image(sc / "non-artcode/c.png", canonical_rectangle(48));
  write_image(sc / "non-artcode/d.jpg", canonical_triangle(48));
  std::ofstream(sc / "non-artcode/notes.txt") << "ignored";

  const ImageDataset ds = load_image_dataset(sc.dir);
  REQUIRE(ds.entries.size() == 4);
  CHECK(ds.count(1) == 2);
  CHECK(ds.count(0) == 2);
  CHECK(ds.entries[0].path.filename() == "a.png");
  CHECK(ds.entries[1].path.filename() == "b.png");
  CHECK(ds.entries[0].label == 1);
  CHECK(ds.entries[2].label == 0);
  CHECK(ds.entries[3].path.extension() == ".jpg");
}

TEST_CASE("missing class directories are a layout error") {
  Scratch sc("tree_bad");
  fs::create_directories(sc.dir / "artcode");
  CHECK_THROWS_AS(load_image_dataset(sc.dir), LayoutError);
  CHECK_THROWS_AS(load_image_dataset(sc.dir / "nowhere"), LayoutError);
}

TEST_CASE("feature extraction skips undecodable files and counts them") {
  Scratch sc("extract");
  fs::create_directories(sc.dir / "artcode");
  fs::create_directories(sc.dir / "non-artcode");
  write_image(sc / "artcode/a.png", canonical_ring_pattern(48));
  write_image(sc / "non-artcode/b.png", canonical_rectangle(48));
  std::ofstream(sc / "non-artcode/broken.png") << "junk";

  const ImageDataset ds = load_image_dataset(sc.dir);
  REQUIRE(ds.entries.size() == 3);
  std::ostringstream warnings;
  const ExtractionResult r = extract_features(ds, Variant::Soh07, {}, &warnings);
  CHECK(r.skipped == 1);
  CHECK(r.features.samples.size() == 2);
  CHECK(r.features.dimension() == 7);
  CHECK(warnings.str().find("broken.png") != std::string::npos);
  CHECK(r.extract_seconds > 0.0);

  const ExtractionResult all = extract_all_variables(ds, {}, nullptr);
  CHECK(all.features.dimension() == 12);
  CHECK(all.features.samples.size() == 2);
}

TEST_CASE("saved models score identically after reload") {
  Scratch sc("model");
  const LabeledDataset d = two_blob_dataset(5);
  std::vector<std::vector<double>> queries;
  Rng rng(99);
  for (int i = 0; i < 20; ++i)
    queries.push_back({rng.uniform(0.0, 3.0), rng.uniform(0.0, 1.0)});

  for (ModelKind kind : {ModelKind::Forest, ModelKind::Svm}) {
    ModelSpec spec;
    spec.kind = kind;
    spec.n_trees = 9;
    SavedModel sm;
    sm.model = fit_model(d, spec, 4242);
    sm.variant = Variant::Soh12;
    sm.soh.edge_threshold = 12.5;
    sm.soh.n_bins = 36;

    const std::string path = sc / (model_kind_name(kind) + ".json");
    save_model(path, sm);
    const SavedModel back = load_model(path);
    CHECK(back.model.kind == kind);
    CHECK(back.variant == Variant::Soh12);
    REQUIRE(back.soh.edge_threshold.has_value());
    CHECK(*back.soh.edge_threshold == 12.5);
    CHECK(back.soh.n_bins == 36);
    for (const auto& q : queries)
      CHECK(back.model.score(q) == sm.model.score(q));
  }
}

TEST_CASE("model loading rejects damaged or foreign files") {
  Scratch sc("model_bad");
  CHECK_THROWS_AS(load_model(sc / "absent.json"), LayoutError);

  const std::string broken = sc / "broken.json";
  std::ofstream(broken) << "{not json";
  CHECK_THROWS_AS(load_model(broken), FormatError);

  const std::string foreign = sc / "foreign.json";
  std::ofstream(foreign) << R"({"format":"something-else"})";
  CHECK_THROWS_AS(load_model(foreign), FormatError);

  const std::string truncated = sc / "truncated.json";
  std::ofstream(truncated) << R"({"format":"soh-model","kind":"forest"})";
  CHECK_THROWS_AS(load_model(truncated), FormatError);
}

TEST_CASE("run configuration survives a save and load") {
  Scratch sc("cfg");
  RunConfig cfg;
  cfg.variant = Variant::Soh10;
  cfg.soh.gaussian_sigma = 1.5;
  cfg.soh.edge_threshold = 7.25;
  cfg.model.kind = ModelKind::Svm;
  cfg.model.svm.gamma = 0.375;
  cfg.cv.folds = 7;
  cfg.cv.repeats = 3;
  cfg.cv.smote_inside_folds = true;
  cfg.cv.smote.n_percent = 300;
  cfg.proposer.scales = {0.5, 0.25};
  cfg.proposer.score_threshold = 0.625;
  cfg.seed = 123456789;

  const std::string path = sc / "run.json";
  save_run_config(path, cfg);
  const RunConfig back = load_run_config(path);
  CHECK(back.variant == Variant::Soh10);
  CHECK(back.soh.gaussian_sigma == 1.5);
  REQUIRE(back.soh.edge_threshold.has_value());
  CHECK(*back.soh.edge_threshold == 7.25);
  CHECK(back.model.kind == ModelKind::Svm);
  CHECK(back.model.svm.gamma == 0.375);
  CHECK(back.cv.folds == 7);
  CHECK(back.cv.repeats == 3);
  CHECK(back.cv.smote_inside_folds);
  CHECK(back.cv.smote.n_percent == 300);
  CHECK(back.proposer.scales == std::vector<double>{0.5, 0.25});
  CHECK(back.proposer.score_threshold == 0.625);
  CHECK(back.seed == 123456789);

  // Unset edge threshold round-trips as unset.
  RunConfig plain;
  save_run_config(path, plain);
  CHECK_FALSE(load_run_config(path).soh.edge_threshold.has_value());
  CHECK_THROWS_AS(load_run_config(sc / "absent.json"), LayoutError);
}

TEST_CASE("curve files and annotations are produced") {
  Scratch sc("report");
  const std::vector<double> scores = {0.9, 0.8, 0.7, 0.6, 0.4, 0.2};
  const std::vector<int> labels = {1, 1, 0, 1, 0, 0};
  const ScoreCurves curves = score_curves(scores, labels);

  const std::string csv = sc / "roc.csv";
  write_curve_csv(csv, curves.roc, "fpr", "tpr");
  std::ifstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "fpr,tpr");
  std::size_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == curves.roc.points.size());

  const std::string svg = curve_svg(curves.roc, "ROC", "fpr", "tpr");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("ROC (AUC") != std::string::npos);
  write_curve_svg(sc / "roc.svg", curves.roc, "ROC", "fpr", "tpr");
  CHECK(fs::file_size(sc / "roc.svg") > 100);

  RgbImage img(80, 80, {200, 200, 200});
  annotate_regions(img, {{10, 10, 40, 40, 0.9}});
  bool reddened = false;
  for (const auto& p : img.pixels)
    if (p[0] > 210 && p[1] < 100) reddened = true;
  CHECK(reddened);

  const nlohmann::json arr = to_json(std::vector<Region>{{1, 2, 3, 4, 0.5}});
  CHECK(arr[0]["width"] == 3);
  CHECK(arr[0]["score"] == 0.5);
}
