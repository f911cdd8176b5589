#pragma once

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <string>

#include "soh/image.hpp"

namespace soh {

// Decode any format the build of OpenCV understands; result is RGB.
inline RgbImage read_image(const std::string& path) {
  cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
  if (bgr.empty()) throw FormatError("cannot decode image: " + path);
  RgbImage out(bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x)
      out.at(x, y) = {row[x][2], row[x][1], row[x][0]};
  }
  return out;
}

inline void write_image(const std::string& path, const RgbImage& img) {
  cv::Mat bgr(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width; ++x) {
      const auto& p = img.at(x, y);
      row[x] = cv::Vec3b(p[2], p[1], p[0]);
    }
  }
  try {
    if (!cv::imwrite(path, bgr))
      throw FormatError("cannot encode image: " + path);
  } catch (const cv::Exception& e) {
    throw FormatError("cannot encode image: " + path + ": " + e.err);
  }
}

}  // namespace soh
