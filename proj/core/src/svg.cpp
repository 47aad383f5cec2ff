#include "rectdt/svg.hpp"

#include <algorithm>
#include <sstream>

namespace rectdt {

std::string render_svg(const Triangulation& t, const SvgOptions& options) {
  const PointSet ps = t.input_points();
  double xmin = ps[0].x.to_double(), xmax = xmin;
  double ymin = ps[0].y.to_double(), ymax = ymin;
  for (const auto& p : ps.points) {
    xmin = std::min(xmin, p.x.to_double());
    xmax = std::max(xmax, p.x.to_double());
    ymin = std::min(ymin, p.y.to_double());
    ymax = std::max(ymax, p.y.to_double());
  }
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double mx = 0.1 * std::max(xmax - xmin, extent * 1e-3);
  const double my = 0.1 * std::max(ymax - ymin, extent * 1e-3);
  const double radius = 0.006 * extent;

  // SVG y grows downwards, so every y is negated.
  std::ostringstream os;
  os.precision(10);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.canvas << "\" height=\"" << options.canvas
     << "\" viewBox=\"" << xmin - mx << ' ' << -(ymax + my) << ' ' << (xmax - xmin) + 2 * mx << ' '
     << (ymax - ymin) + 2 * my << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  os << "<rect x=\"" << xmin - mx << "\" y=\"" << -(ymax + my) << "\" width=\"" << (xmax - xmin) + 2 * mx
     << "\" height=\"" << (ymax - ymin) + 2 * my << "\" fill=\"white\"/>\n";

  if (options.circumhomothets) {
    os << "<g fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1\" stroke-dasharray=\"4 3\" "
          "vector-effect=\"non-scaling-stroke\">\n";
    for (const auto& [tri, h] : t.circumhomothets()) {
      Box b = h.box();
      if (t.aspect().transposed) b = Box{b.ymin, b.ymax, b.xmin, b.xmax};
      os << "  <rect x=\"" << b.xmin.to_double() << "\" y=\"" << -b.ymax.to_double() << "\" width=\""
         << b.width().to_double() << "\" height=\"" << b.height().to_double()
         << "\" vector-effect=\"non-scaling-stroke\"><title>" << tri[0] << ',' << tri[1] << ',' << tri[2]
         << "</title></rect>\n";
    }
    os << "</g>\n";
  }

  os << "<g stroke=\"#1f3a5f\" stroke-width=\"1.5\">\n";
  for (const auto& [a, b] : t.edges()) {
    os << "  <line x1=\"" << ps[a].x.to_double() << "\" y1=\"" << -ps[a].y.to_double() << "\" x2=\""
       << ps[b].x.to_double() << "\" y2=\"" << -ps[b].y.to_double() << "\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  os << "</g>\n<g fill=\"black\">\n";
  for (VertexId i = 0; i < ps.size(); ++i) {
    os << "  <circle cx=\"" << ps[i].x.to_double() << "\" cy=\"" << -ps[i].y.to_double() << "\" r=\"" << radius
       << "\"><title>" << i << "</title></circle>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace rectdt
