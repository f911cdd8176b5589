#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <sstream>

#include "soh/dataset.hpp"

using namespace soh;

TEST_CASE("csv round trip is bit exact") {
  LabeledDataset d = make_dataset(Variant::Soh05);
  d.push({0.1, 1e-17, 3.0e300, -0.0, 164.618898}, 1);
  d.push({std::nextafter(1.0, 2.0), 2.0 / 3.0, 5e-324, 51.93487, 0.003802},
         0);

  std::stringstream ss;
  write_csv(ss, d);
  const LabeledDataset back = read_csv(ss, "mem");

  REQUIRE(back.samples.size() == 2);
  CHECK(back.columns == d.columns);
  for (std::size_t i = 0; i < d.samples.size(); ++i) {
    CHECK(back.samples[i].label == d.samples[i].label);
    REQUIRE(back.samples[i].feature.size() == d.samples[i].feature.size());
    for (std::size_t j = 0; j < d.samples[i].feature.size(); ++j)
      CHECK(std::memcmp(&back.samples[i].feature[j], &d.samples[i].feature[j],
                        sizeof(double)) == 0);
  }
}

TEST_CASE("csv header names the variant columns plus label") {
  LabeledDataset d = make_dataset(Variant::Soh07);
  d.push({.050593, .003012, .081212, 164.618898, 51.93487, .005639, .003802},
         1);
  std::stringstream ss;
  write_csv(ss, d);
  std::string header;
  std::getline(ss, header);
  CHECK(header == "S1,S2,S3,S7,S8,S9,S10,label");
  std::string row;
  std::getline(ss, row);
  REQUIRE(row.size() > 2);
  CHECK(row.substr(row.size() - 2) == ",1");
}

TEST_CASE("csv parser rejects malformed tables") {
  auto parse = [](const std::string& text) {
    std::stringstream ss(text);
    return read_csv(ss, "mem");
  };
  CHECK_THROWS_AS(parse(""), FormatError);
  CHECK_THROWS_AS(parse("S1,S2\n1,2\n"), FormatError);          // no label col
  CHECK_THROWS_AS(parse("label\n1\n"), FormatError);            // no features
  CHECK_THROWS_AS(parse("S1,label\nx,1\n"), FormatError);       // bad number
  CHECK_THROWS_AS(parse("S1,label\n1,2\n"), FormatError);       // bad label
  CHECK_THROWS_AS(parse("S1,label\n1,0,3\n"), FormatError);     // extra col
  CHECK_THROWS_AS(parse("S1,label\n1\n"), FormatError);         // missing col
  CHECK_NOTHROW(parse("S1,label\n1,0\n\n"));                    // blank line ok
  CHECK_NOTHROW(parse("S1,label\r\n1,0\r\n"));                  // CRLF ok
}

TEST_CASE("dataset guards labels and dimensions") {
  LabeledDataset d = make_dataset(Variant::Soh05);
  CHECK_THROWS_AS(d.push({1, 2, 3, 4, 5}, 2), ParameterError);
  CHECK_THROWS_AS(d.push({1, 2, 3}, 1), ParameterError);
  d.push({1, 2, 3, 4, 5}, 1);
  CHECK(d.count(1) == 1);
  CHECK(d.count(0) == 0);
}

TEST_CASE("projecting the full table to a narrower variant") {
  LabeledDataset full = make_dataset(Variant::Soh12);
  full.push({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, 1);
  full.push({12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1}, 0);

  const LabeledDataset p = project_variant(full, Variant::Soh07);
  CHECK(p.columns == variant_columns(Variant::Soh07));
  CHECK(p.samples[0].feature == std::vector<double>{1, 2, 3, 7, 8, 9, 10});
  CHECK(p.samples[1].feature == std::vector<double>{12, 11, 10, 6, 5, 4, 3});
  CHECK(p.samples[0].label == 1);
  CHECK(p.samples[1].label == 0);

  LabeledDataset narrow = make_dataset(Variant::Soh05);
  CHECK_THROWS_AS(project_variant(narrow, Variant::Soh05), ParameterError);
}

TEST_CASE("missing csv file raises a layout error") {
  CHECK_THROWS_AS(read_csv("/nonexistent/path/features.csv"), LayoutError);
}
