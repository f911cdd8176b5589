#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "soh/codec.hpp"
#include "soh/dataset.hpp"

namespace soh {

struct ImageEntry {
  std::filesystem::path path;
  int label = 0;
};

struct ImageDataset {
  std::vector<ImageEntry> entries;

  std::size_t count(int label) const {
    std::size_t n = 0;
    for (const auto& e : entries)
      if (e.label == label) ++n;
    return n;
  }
};

// Expected layout: ROOT/artcode/** holds the targets (label 1) and
// ROOT/non-artcode/** everything else. Files are picked up recursively by
// extension and ordered lexicographically so runs are reproducible.
inline ImageDataset load_image_dataset(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root))
    throw LayoutError("not a directory: " + root.string());
  const fs::path pos = root / "artcode";
  const fs::path neg = root / "non-artcode";
  if (!fs::is_directory(pos) || !fs::is_directory(neg))
    throw LayoutError(root.string() +
                      ": expected artcode/ and non-artcode/ subdirectories");

  auto has_image_ext = [](const fs::path& p) {
    std::string e = p.extension().string();
    std::transform(e.begin(), e.end(), e.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return e == ".png" || e == ".jpg" || e == ".jpeg";
  };

  ImageDataset ds;
  for (auto [dir, label] : {std::pair{pos, 1}, std::pair{neg, 0}}) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
      if (entry.is_regular_file() && has_image_ext(entry.path()))
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (auto& f : files) ds.entries.push_back({std::move(f), label});
  }
  return ds;
}

struct ExtractionResult {
  LabeledDataset features;
  int skipped = 0;              // undecodable files
  double extract_seconds = 0.0;
};

// Run the descriptor over every image in the dataset. Files that fail to
// decode are skipped with a warning and counted, never fatal.
inline ExtractionResult extract_features(const ImageDataset& ds, Variant v,
                                         const SohConfig& cfg = {},
                                         std::ostream* warn = &std::cerr) {
  ExtractionResult out;
  out.features = make_dataset(v);
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& e : ds.entries) {
    RgbImage img;
    try {
      img = read_image(e.path.string());
    } catch (const FormatError& err) {
      if (warn) *warn << "warning: skipping " << e.path << ": " << err.what()
                      << '\n';
      ++out.skipped;
      continue;
    }
    out.features.push(compute_soh(img, v, cfg).value, e.label);
  }
  out.extract_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  return out;
}

// Same, but all twelve variables at once so several variants can be
// projected from a single pass.
inline ExtractionResult extract_all_variables(const ImageDataset& ds,
                                              const SohConfig& cfg = {},
                                              std::ostream* warn = &std::cerr) {
  ExtractionResult out;
  out.features.columns = variant_columns(Variant::Soh12);
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& e : ds.entries) {
    RgbImage img;
    try {
      img = read_image(e.path.string());
    } catch (const FormatError& err) {
      if (warn) *warn << "warning: skipping " << e.path << ": " << err.what()
                      << '\n';
      ++out.skipped;
      continue;
    }
    const ShapeVariables vars = compute_shape_variables(img, cfg);
    out.features.push(
        std::vector<double>(vars.s.begin(), vars.s.end()), e.label);
  }
  out.extract_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  return out;
}

}  // namespace soh
