#include "gridlink/render.hpp"

#include <fstream>
#include <sstream>

#include "gridlink/error.hpp"
#include "gridlink/linking.hpp"

namespace gridlink {
namespace {

constexpr int kMargin = 40;
constexpr int kGap = 7;
constexpr const char* kStroke[2] = {"#1f6fb4", "#c8322c"};

struct Edge {
  int component;  // 0 or 1
  GridPoint from;
  GridPoint to;
};

std::vector<Edge> edges_of(const GridLink& link, Component which,
                           bool vertical) {
  const auto path = component_path(link, which).vertices;
  std::vector<Edge> out;
  const int c = which == Component::first ? 0 : 1;
  for (std::size_t i = vertical ? 0 : 1; i < path.size(); i += 2) {
    out.push_back({c, path[i], path[(i + 1) % path.size()]});
  }
  return out;
}

bool strictly_between(int v, int a, int b) {
  return (a < v && v < b) || (b < v && v < a);
}

}  // namespace

PixelPoint to_pixel(const GridLink& link, GridPoint p) {
  return {kMargin + p.column * kCellSize,
          kMargin + (link.order() + 1 - p.row) * kCellSize};
}

std::string render_svg(const GridLink& link) {
  const int size = link.order();
  const int extent = 2 * kMargin + (size + 1) * kCellSize;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << extent
      << "\" height=\"" << extent + kCellSize << "\" viewBox=\"0 0 " << extent
      << ' ' << extent + kCellSize << "\">\n";
  svg << "  <defs>\n";
  for (int c = 0; c < 2; ++c) {
    svg << "    <marker id=\"arrow" << c + 1
        << "\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"7\" "
           "markerHeight=\"7\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" "
           "fill=\""
        << kStroke[c] << "\"/></marker>\n";
  }
  svg << "  </defs>\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Grid lines and axis labels.
  svg << "  <g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 1; i <= size; ++i) {
    const PixelPoint bottom = to_pixel(link, {i, 1});
    const PixelPoint top = to_pixel(link, {i, size});
    svg << "    <line x1=\"" << bottom.x << "\" y1=\"" << bottom.y
        << "\" x2=\"" << top.x << "\" y2=\"" << top.y << "\"/>\n";
    const PixelPoint left = to_pixel(link, {1, i});
    const PixelPoint right = to_pixel(link, {size, i});
    svg << "    <line x1=\"" << left.x << "\" y1=\"" << left.y << "\" x2=\""
        << right.x << "\" y2=\"" << right.y << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\">\n";
  for (int i = 1; i <= size; ++i) {
    const PixelPoint col = to_pixel(link, {i, 1});
    const PixelPoint row = to_pixel(link, {1, i});
    svg << "    <text class=\"column-label\" x=\"" << col.x << "\" y=\""
        << col.y + kCellSize / 2 + 5 << "\">" << i << "</text>\n";
    svg << "    <text class=\"row-label\" x=\"" << row.x - kCellSize / 2 - 5
        << "\" y=\"" << row.y + 5 << "\">" << i << "</text>\n";
  }
  svg << "  </g>\n";

  auto draw_edge = [&](const Edge& e, const char* kind) {
    const PixelPoint a = to_pixel(link, e.from);
    const PixelPoint b = to_pixel(link, e.to);
    svg << "  <path class=\"edge " << kind << " c" << e.component + 1
        << "\" d=\"M" << a.x << ',' << a.y << " L" << (a.x + b.x) / 2.0 << ','
        << (a.y + b.y) / 2.0 << " L" << b.x << ',' << b.y
        << "\" fill=\"none\" stroke=\"" << kStroke[e.component]
        << "\" stroke-width=\"3\" marker-mid=\"url(#arrow" << e.component + 1
        << ")\"/>\n";
  };

  std::vector<Edge> horizontal;
  std::vector<Edge> vertical;
  for (Component which : {Component::first, Component::second}) {
    for (const Edge& e : edges_of(link, which, false)) horizontal.push_back(e);
    for (const Edge& e : edges_of(link, which, true)) vertical.push_back(e);
  }

  for (const Edge& e : horizontal) draw_edge(e, "horizontal");
  // Break the under-strand wherever a vertical edge passes over it.
  for (const Edge& h : horizontal) {
    for (const Edge& v : vertical) {
      if (!strictly_between(v.from.column, h.from.column, h.to.column) ||
          !strictly_between(h.from.row, v.from.row, v.to.row)) {
        continue;
      }
      const PixelPoint at = to_pixel(link, {v.from.column, h.from.row});
      svg << "  <rect class=\"gap "
          << (h.component == v.component ? "self" : "inter") << "\" x=\""
          << at.x - kGap << "\" y=\"" << at.y - kGap << "\" width=\""
          << 2 * kGap << "\" height=\"" << 2 * kGap
          << "\" fill=\"white\"/>\n";
    }
  }
  for (const Edge& e : vertical) draw_edge(e, "vertical");

  for (Component which : {Component::first, Component::second}) {
    const int c = which == Component::first ? 1 : 2;
    for (const GridPoint& p : component_path(link, which).vertices) {
      const PixelPoint px = to_pixel(link, p);
      svg << "  <circle class=\"vertex c" << c << "\" cx=\"" << px.x
          << "\" cy=\"" << px.y << "\" r=\"3\" fill=\"" << kStroke[c - 1]
          << "\"/>\n";
    }
  }

  svg << "  <text class=\"caption\" x=\"" << extent / 2 << "\" y=\""
      << extent + kCellSize / 2
      << "\" font-family=\"sans-serif\" font-size=\"16\" "
         "text-anchor=\"middle\">lk = "
      << linking_number(link) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const GridLink& link, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path);
  out << render_svg(link);
  if (!out) throw Error(ErrorKind::io_error, "failed writing " + path);
}

}  // namespace gridlink
