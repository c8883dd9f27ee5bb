#pragma once

// SVG drawing of a line arrangement in Q^2. Output depends only on the input,
// so it can be compared byte for byte.

#include "discarr/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace discarr {

struct MultiplePoint {
  Vector point;
  std::vector<int> labels;  // 1-based, sorted
};

/// Points lying on at least `min_lines` lines, ordered lexicographically.
inline std::vector<MultiplePoint> multiple_points(const Arrangement& a, std::size_t min_lines) {
  if (a.k() != 2) throw InputError("multiple_points: needs k = 2");
  std::map<Vector, std::vector<int>> seen;
  const int n = static_cast<int>(a.n());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto cp = common_point(a, {i, j});
      if (cp.kind != Incidence::point || seen.count(cp.point)) continue;
      std::vector<int> on;
      for (int p = 1; p <= n; ++p)
        if (dot(a.at(p).normal, cp.point) == a.at(p).offset) on.push_back(p);
      seen.emplace(cp.point, std::move(on));
    }
  std::vector<MultiplePoint> out;
  for (auto& [pt, labels] : seen)
    if (labels.size() >= min_lines) out.push_back({pt, labels});
  return out;
}

/// Renders the lines with labels and marks every point of multiplicity >= 3.
inline std::string render_svg(const Arrangement& a) {
  if (a.k() != 2) throw InputError("plot: only k = 2 arrangements can be drawn (got k = " + std::to_string(a.k()) + ")");
  const auto all = multiple_points(a, 2);
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& mp : all) {
    const double x = mp.point[0].get_d(), y = mp.point[1].get_d();
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double margin = 0.25 * span;
  lo_x -= margin, hi_x += margin, lo_y -= margin, hi_y += margin;
  const double size = 600.0;
  const double scale = size / std::max(hi_x - lo_x, hi_y - lo_y);
  auto sx = [&](double x) { return (x - lo_x) * scale; };
  auto sy = [&](double y) { return size - (y - lo_y) * scale; };

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                size, size, size, size);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t p = 1; p <= a.n(); ++p) {
    const auto& h = a.at(p);
    const double nx = h.normal[0].get_d(), ny = h.normal[1].get_d(), c = h.offset.get_d();
    double x1, y1, x2, y2;
    if (std::abs(ny) >= std::abs(nx)) {
      x1 = lo_x, x2 = hi_x;
      y1 = (c - nx * x1) / ny, y2 = (c - nx * x2) / ny;
    } else {
      y1 = lo_y, y2 = hi_y;
      x1 = (c - ny * y1) / nx, x2 = (c - ny * y2) / nx;
    }
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
                  sx(x1), sy(y1), sx(x2), sy(y2));
    out += buf;
    // Label near the far end, nudged into the canvas.
    const double lx = std::clamp(sx(x2), 12.0, size - 24.0), ly = std::clamp(sy(y2), 16.0, size - 8.0);
    std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"14\" fill=\"navy\">H%zu</text>\n", lx,
                  ly, p);
    out += buf;
  }
  for (const auto& mp : all) {
    if (mp.labels.size() < 3) continue;
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"5\" fill=\"crimson\"/>\n",
                  sx(mp.point[0].get_d()), sy(mp.point[1].get_d()));
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace discarr
