#pragma once

#include "porism/chain.hpp"
#include "porism/geom.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace porism {

/// Minimal SVG 1.1 document builder: fixed layers, polyline-sampled conics,
/// deterministic formatting.
class SvgScene {
public:
  void add_circle(const std::string& layer, const Circle& c, const std::string& stroke);
  void add_line(const std::string& layer, const Line& l, const std::string& stroke);
  void add_polygon(const std::string& layer, const Polygon& p, const std::string& stroke);
  void add_points(const std::string& layer, const std::vector<Point>& pts,
                  const std::string& fill);
  void add_conic(const std::string& layer, const Conic& c, const std::string& stroke);

  void write(std::ostream& out) const;

private:
  struct Element {
    std::string layer;
    std::string body;
  };
  void bump(Point p);
  std::vector<Element> elems_;
  double min_x_ = 1e300, min_y_ = 1e300, max_x_ = -1e300, max_y_ = -1e300;
};

/// Standard scene for a porism configuration: outer conic, caustic, chain at
/// t = 0, polygon and pedal polygon, plus an optional locus point set.
SvgScene porism_scene(const PorismConfig& cfg, const std::vector<Point>& locus);

}  // namespace porism
