#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "soh/errors.hpp"
#include "soh/feature.hpp"

namespace soh {

enum class Provenance { Original, Synthetic };

struct LabeledSample {
  std::vector<double> feature;
  int label = 0;  // 0 = background, 1 = target
  Provenance provenance = Provenance::Original;
};

struct LabeledDataset {
  std::vector<std::string> columns;  // feature column names, no label column
  std::vector<LabeledSample> samples;

  int dimension() const { return static_cast<int>(columns.size()); }

  std::size_t count(int label) const {
    std::size_t n = 0;
    for (const auto& s : samples)
      if (s.label == label) ++n;
    return n;
  }

  void push(std::vector<double> f, int label,
            Provenance p = Provenance::Original) {
    if (label != 0 && label != 1)
      throw ParameterError("LabeledDataset: label must be 0 or 1");
    if (static_cast<int>(f.size()) != dimension())
      throw ParameterError("LabeledDataset: feature dimension mismatch");
    samples.push_back({std::move(f), label, p});
  }
};

inline LabeledDataset make_dataset(Variant v) {
  LabeledDataset d;
  d.columns = variant_columns(v);
  return d;
}

// Doubles are written with enough digits (%.17g) that reading the file
// back reproduces them bit for bit.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const LabeledDataset& d) {
  for (const auto& c : d.columns) os << c << ',';
  os << "label\n";
  for (const auto& s : d.samples) {
    for (double v : s.feature) os << format_double(v) << ',';
    os << s.label << '\n';
  }
}

inline void write_csv(const std::string& path, const LabeledDataset& d) {
  std::ofstream os(path);
  if (!os) throw LayoutError("cannot open for writing: " + path);
  write_csv(os, d);
}

inline LabeledDataset read_csv(std::istream& is, const std::string& origin) {
  LabeledDataset d;
  std::string line;
  if (!std::getline(is, line))
    throw FormatError(origin + ": empty feature table");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> headers;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) headers.push_back(cell);
  }
  if (headers.empty() || headers.back() != "label")
    throw FormatError(origin + ": last column must be `label`");
  headers.pop_back();
  if (headers.empty())
    throw FormatError(origin + ": no feature columns");
  d.columns = headers;

  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      // strtod instead of stod: stod raises on subnormals, which a
      // bit-exact round trip of written features must accept.
      const char* begin = cell.c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (cell.empty() || end != begin + cell.size())
        throw FormatError(origin + ':' + std::to_string(lineno) +
                          ": bad number `" + cell + "`");
      row.push_back(v);
    }
    if (row.size() != d.columns.size() + 1)
      throw FormatError(origin + ':' + std::to_string(lineno) +
                        ": expected " + std::to_string(d.columns.size() + 1) +
                        " columns, got " + std::to_string(row.size()));
    const double lab = row.back();
    row.pop_back();
    if (lab != 0.0 && lab != 1.0)
      throw FormatError(origin + ':' + std::to_string(lineno) +
                        ": label must be 0 or 1");
    d.push(std::move(row), static_cast<int>(lab));
  }
  return d;
}

inline LabeledDataset read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw LayoutError("cannot open: " + path);
  return read_csv(is, path);
}

// Feature matrix restricted to the columns of a narrower variant; used when
// all twelve variables were extracted once and several subsets are needed.
inline LabeledDataset project_variant(const LabeledDataset& full, Variant v) {
  if (full.dimension() != 12)
    throw ParameterError("project_variant: source must have 12 columns");
  LabeledDataset out = make_dataset(v);
  for (const auto& s : full.samples) {
    std::vector<double> f;
    for (int idx : variant_variables(v))
      f.push_back(s.feature[static_cast<std::size_t>(idx - 1)]);
    out.push(std::move(f), s.label, s.provenance);
  }
  return out;
}

}  // namespace soh
