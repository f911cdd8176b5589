#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "soh/crossval.hpp"
#include "soh/dataset.hpp"
#include "soh/propose.hpp"
#include "soh/run_config.hpp"

namespace soh {

inline nlohmann::json to_json(const AggregateMetric& a) {
  return {{"mean", a.mean},
          {"n_defined", a.n_defined},
          {"n_undefined", a.n_undefined}};
}

inline nlohmann::json to_json(const CvResult& r, bool include_folds = true) {
  nlohmann::json j{{"accuracy", to_json(r.accuracy)},
                   {"precision", to_json(r.precision)},
                   {"recall", to_json(r.recall)},
                   {"tnr", to_json(r.tnr)},
                   {"f_beta", to_json(r.f_beta)},
                   {"mcc", to_json(r.mcc)},
                   {"beta", r.beta},
                   {"roc_auc", r.curves.roc.auc},
                   {"pr_auc", r.curves.pr.auc},
                   {"train_eval_seconds", r.train_eval_seconds},
                   {"any_unconverged_svm", r.any_unconverged_svm}};
  if (include_folds) {
    nlohmann::json folds = nlohmann::json::array();
    for (const auto& f : r.folds)
      folds.push_back({{"repeat", f.repeat},
                       {"fold", f.fold},
                       {"tp", f.cm.tp},
                       {"fp", f.cm.fp},
                       {"fn", f.cm.fn},
                       {"tn", f.cm.tn}});
    j["folds"] = std::move(folds);
  }
  return j;
}

inline void write_curve_csv(const std::string& path, const CurveData& c,
                            const std::string& x_name,
                            const std::string& y_name) {
  std::ofstream os(path);
  if (!os) throw LayoutError("cannot open for writing: " + path);
  os << x_name << ',' << y_name << '\n';
  for (const auto& p : c.points)
    os << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

// Small self-contained SVG line plot of a curve in the unit square.
inline std::string curve_svg(const CurveData& c, const std::string& title,
                             const std::string& x_name,
                             const std::string& y_name) {
  const int w = 480, h = 480, m = 56;
  const double px = w - 2.0 * m, py = h - 2.0 * m;
  auto sx = [&](double x) { return m + x * px; };
  auto sy = [&](double y) { return h - m - y * py; };

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w
     << "' height='" << h << "' viewBox='0 0 " << w << ' ' << h << "'>\n"
     << "<rect width='100%' height='100%' fill='white'/>\n"
     << "<rect x='" << m << "' y='" << m << "' width='" << px
     << "' height='" << py << "' fill='none' stroke='#444'/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = t / 4.0;
    os << "<text x='" << sx(v) << "' y='" << h - m + 18
       << "' font-size='11' text-anchor='middle'>" << v << "</text>\n"
       << "<text x='" << m - 8 << "' y='" << sy(v) + 4
       << "' font-size='11' text-anchor='end'>" << v << "</text>\n";
  }
  os << "<text x='" << w / 2 << "' y='" << h - 12
     << "' font-size='13' text-anchor='middle'>" << x_name << "</text>\n"
     << "<text x='16' y='" << h / 2
     << "' font-size='13' text-anchor='middle' transform='rotate(-90 16 "
     << h / 2 << ")'>" << y_name << "</text>\n"
     << "<text x='" << w / 2 << "' y='" << m - 16
     << "' font-size='14' text-anchor='middle'>" << title << " (AUC "
     << format_double(std::round(c.auc * 1e4) / 1e4) << ")</text>\n"
     << "<polyline fill='none' stroke='#0b62a4' stroke-width='2' points='";
  for (const auto& p : c.points) os << sx(p.x) << ',' << sy(p.y) << ' ';
  os << "'/>\n</svg>\n";
  return os.str();
}

inline void write_curve_svg(const std::string& path, const CurveData& c,
                            const std::string& title,
                            const std::string& x_name,
                            const std::string& y_name) {
  std::ofstream os(path);
  if (!os) throw LayoutError("cannot open for writing: " + path);
  os << curve_svg(c, title, x_name, y_name);
}

// Mark proposals on the image as red circles inscribed in their windows.
inline void annotate_regions(RgbImage& img, const std::vector<Region>& regions) {
  for (const Region& r : regions) {
    const double cx = r.x + 0.5 * r.width;
    const double cy = r.y + 0.5 * r.height;
    const double rad = 0.5 * std::min(r.width, r.height) - 1.0;
    const int x0 = std::max(0, r.x - 2), x1 = std::min(img.width - 1, r.x + r.width + 2);
    const int y0 = std::max(0, r.y - 2), y1 = std::min(img.height - 1, r.y + r.height + 2);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) {
        const double d = std::abs(std::hypot(x + 0.5 - cx, y + 0.5 - cy) - rad);
        const double cov = std::clamp(1.5 - d, 0.0, 1.0);
        if (cov <= 0.0) continue;
        auto& p = img.at(x, y);
        p[0] = static_cast<std::uint8_t>(p[0] + cov * (220.0 - p[0]));
        p[1] = static_cast<std::uint8_t>(p[1] * (1.0 - cov));
        p[2] = static_cast<std::uint8_t>(p[2] * (1.0 - cov));
      }
  }
}

inline nlohmann::json to_json(const std::vector<Region>& regions) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : regions)
    arr.push_back({{"x", r.x},
                   {"y", r.y},
                   {"width", r.width},
                   {"height", r.height},
                   {"score", r.score}});
  return arr;
}

}  // namespace soh
