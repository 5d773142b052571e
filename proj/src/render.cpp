#include "bruhat/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "bruhat/poset.hpp"
#include "bruhat/regions.hpp"

namespace bruhat {

namespace {

constexpr double scale = 24.0;
constexpr double margin = 12.0;

const char* wall_colour(int k) {
  static const char* colours[3] = {"blue", "green", "red"};
  return colours[k];
}

const char* region_fill(RegionKind kind) {
  switch (kind) {
  case RegionKind::Identity:
    return "#ffd700";
  case RegionKind::X:
    return "#e0e0e0";
  case RegionKind::Theta1:
    return "#b0b0b0";
  case RegionKind::Theta2:
    return "#808080";
  case RegionKind::Theta:
    return "#505050";
  }
  return "#ffffff";
}

struct Shape {
  Element w;
  std::array<std::array<double, 2>, 3> corners;
};

std::vector<Shape> shapes_up_to(int radius) {
  std::vector<Shape> out;
  for (const auto& w : enumerate_up_to_length(radius)) {
    const Alcove a = alcove(w);
    Shape s{w, {}};
    for (int k = 0; k < 3; ++k)
      s.corners[k] = to_plane(a.vertices[k]);
    out.push_back(std::move(s));
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class Canvas {
public:
  explicit Canvas(const std::vector<Shape>& shapes) {
    for (const auto& s : shapes)
      for (const auto& c : s.corners) {
        min_x_ = std::min(min_x_, c[0]);
        max_x_ = std::max(max_x_, c[0]);
        min_y_ = std::min(min_y_, c[1]);
        max_y_ = std::max(max_y_, c[1]);
      }
  }

  std::string point(const std::array<double, 2>& c) const { return fmt(x(c)) + "," + fmt(y(c)); }
  double x(const std::array<double, 2>& c) const { return margin + (c[0] - min_x_) * scale; }
  double y(const std::array<double, 2>& c) const { return margin + (max_y_ - c[1]) * scale; }
  double width() const { return 2 * margin + (max_x_ - min_x_) * scale; }
  double height() const { return 2 * margin + (max_y_ - min_y_) * scale; }

private:
  double min_x_ = std::numeric_limits<double>::max(), max_x_ = std::numeric_limits<double>::lowest();
  double min_y_ = std::numeric_limits<double>::max(), max_y_ = std::numeric_limits<double>::lowest();
};

// fill_of(w) returns the fill and any extra attributes of w's polygon.
template <class F>
std::string draw(const std::vector<Shape>& shapes, F&& fill_of) {
  const Canvas canvas(shapes);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(canvas.width()) << "\" height=\""
     << fmt(canvas.height()) << "\" viewBox=\"0 0 " << fmt(canvas.width()) << ' ' << fmt(canvas.height())
     << "\">\n<g id=\"alcoves\">\n";
  for (const auto& s : shapes) {
    const auto [fill, attrs] = fill_of(s.w);
    os << "<polygon class=\"alcove\" data-word=\"" << s.w.to_string() << "\"" << attrs << " points=\""
       << canvas.point(s.corners[0]) << ' ' << canvas.point(s.corners[1]) << ' ' << canvas.point(s.corners[2])
       << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
  }
  os << "</g>\n<g id=\"walls\" stroke-width=\"1\">\n";
  for (const auto& s : shapes)
    for (int k = 0; k < 3; ++k) {
      const auto& p = s.corners[(k + 1) % 3];
      const auto& q = s.corners[(k + 2) % 3];
      os << "<line x1=\"" << fmt(canvas.x(p)) << "\" y1=\"" << fmt(canvas.y(p)) << "\" x2=\"" << fmt(canvas.x(q))
         << "\" y2=\"" << fmt(canvas.y(q)) << "\" stroke=\"" << wall_colour(k) << "\"/>\n";
    }
  os << "</g>\n</svg>\n";
  return os.str();
}

} // namespace

std::string render_regions(int radius) {
  return draw(shapes_up_to(std::max(radius, 0)), [](const Element& w) {
    const RegionKind kind = classify(w).kind;
    return std::pair<std::string, std::string>{region_fill(kind), " data-region=\"" + to_string(kind) + "\""};
  });
}

std::string render_interval(const Element& x, const Element& y, int radius) {
  const Interval interval = build_interval(x, y);
  return draw(shapes_up_to(std::max(radius, y.length())), [&](const Element& w) {
    const bool member = interval.contains(w);
    std::string attrs = " data-region=\"" + to_string(classify(w).kind) + "\"";
    if (member)
      attrs += " data-member=\"true\"";
    std::string fill = w.is_identity() ? "#ffd700" : member ? "#f4a0c0" : "#ffffff";
    return std::pair<std::string, std::string>{fill, attrs};
  });
}

} // namespace bruhat
