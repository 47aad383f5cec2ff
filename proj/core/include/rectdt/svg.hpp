#pragma once

#include <string>

#include "rectdt/delaunay.hpp"

namespace rectdt {

struct SvgOptions {
  int canvas = 800;  // pixel width and height
  bool circumhomothets = true;
};

/// Points, edges and (dashed) circumhomothets in the caller's frame. The
/// viewBox is the point bounding box plus a 10% margin.
std::string render_svg(const Triangulation& t, const SvgOptions& options = {});

}  // namespace rectdt
