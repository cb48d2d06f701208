#include "porism/svg.hpp"

#include "porism/family.hpp"
#include "porism/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace porism {

void SvgScene::bump(Point p) {
  min_x_ = std::min(min_x_, p.x);
  min_y_ = std::min(min_y_, p.y);
  max_x_ = std::max(max_x_, p.x);
  max_y_ = std::max(max_y_, p.y);
}

void SvgScene::add_circle(const std::string& layer, const Circle& c,
                          const std::string& stroke) {
  std::ostringstream os;
  os << "<circle cx=\"" << format_double(c.center.x) << "\" cy=\""
     << format_double(c.center.y) << "\" r=\"" << format_double(c.radius)
     << "\" fill=\"none\" stroke=\"" << stroke << "\"/>";
  elems_.push_back({layer, os.str()});
  bump(c.center + Point{c.radius, c.radius});
  bump(c.center - Point{c.radius, c.radius});
}

void SvgScene::add_line(const std::string& layer, const Line& l, const std::string& stroke) {
  // draw a long chord of the line through its nearest-to-origin point
  const Point p = l.point();
  const Point d = l.direction();
  const double ext = 4.0 * (1.0 + p.norm());
  const Point a = p - ext * d, b = p + ext * d;
  std::ostringstream os;
  os << "<line x1=\"" << format_double(a.x) << "\" y1=\"" << format_double(a.y)
     << "\" x2=\"" << format_double(b.x) << "\" y2=\"" << format_double(b.y)
     << "\" stroke=\"" << stroke << "\"/>";
  elems_.push_back({layer, os.str()});
}

void SvgScene::add_polygon(const std::string& layer, const Polygon& p,
                           const std::string& stroke) {
  std::ostringstream os;
  os << "<polygon points=\"";
  for (size_t i = 0; i < p.v.size(); ++i) {
    if (i) os << ' ';
    os << format_double(p.v[i].x) << ',' << format_double(p.v[i].y);
    bump(p.v[i]);
  }
  os << "\" fill=\"none\" stroke=\"" << stroke << "\"/>";
  elems_.push_back({layer, os.str()});
}

void SvgScene::add_points(const std::string& layer, const std::vector<Point>& pts,
                          const std::string& fill) {
  std::ostringstream os;
  double r = 0.004 * (1.0 + std::max(max_x_ - min_x_, max_y_ - min_y_));
  if (!std::isfinite(r) || r <= 0) r = 0.01;
  for (const Point& p : pts) {
    os << "<circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(p.y)
       << "\" r=\"" << format_double(r) << "\" fill=\"" << fill << "\"/>";
    bump(p);
  }
  elems_.push_back({layer, os.str()});
}

void SvgScene::add_conic(const std::string& layer, const Conic& c, const std::string& stroke) {
  // sample the conic in its principal frame; clip to the current bbox scale
  ConicGeometry g;
  try {
    g = conic_geometry(c);
  } catch (const GeomError&) {
    return;
  }
  const double span = std::isfinite(max_x_ - min_x_) && max_x_ > min_x_
                          ? std::max(max_x_ - min_x_, max_y_ - min_y_)
                          : 4.0;
  const double lim = 2.0 * span;
  std::vector<std::vector<Point>> strands;
  const Point ax = g.axis;
  const Point ay = ax.perp();
  if (g.kind == ConicKind::Ellipse || g.kind == ConicKind::Circle) {
    std::vector<Point> s;
    for (int i = 0; i <= 256; ++i) {
      const double th = 2.0 * std::numbers::pi * i / 256;
      s.push_back(g.center + g.semi_major * std::cos(th) * ax +
                  g.semi_minor * std::sin(th) * ay);
    }
    strands.push_back(std::move(s));
  } else if (g.kind == ConicKind::Hyperbola) {
    const double umax = std::acosh(std::max(2.0, lim / g.semi_major));
    for (double sgn : {1.0, -1.0}) {
      std::vector<Point> s;
      for (int i = 0; i <= 128; ++i) {
        const double u = -umax + 2.0 * umax * i / 128;
        s.push_back(g.center + sgn * g.semi_major * std::cosh(u) * ax +
                    g.semi_minor * std::sinh(u) * ay);
      }
      strands.push_back(std::move(s));
    }
  } else {
    const double tmax = std::sqrt(lim / std::max(g.focal_dist, 1e-12));
    std::vector<Point> s;
    for (int i = 0; i <= 128; ++i) {
      const double u = -tmax + 2.0 * tmax * i / 128;
      s.push_back(g.vertex + g.focal_dist * u * u * ax + 2.0 * g.focal_dist * u * ay);
    }
    strands.push_back(std::move(s));
  }
  for (const auto& s : strands) {
    std::ostringstream os;
    os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" points=\"";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) os << ' ';
      os << format_double(s[i].x) << ',' << format_double(s[i].y);
    }
    os << "\"/>";
    elems_.push_back({layer, os.str()});
  }
}

void SvgScene::write(std::ostream& out) const {
  double x0 = min_x_, y0 = min_y_, x1 = max_x_, y1 = max_y_;
  if (!(x1 > x0)) {
    x0 = y0 = -1;
    x1 = y1 = 1;
  }
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << format_double(x0) << ' ' << format_double(y0) << ' ' << format_double(x1 - x0)
      << ' ' << format_double(y1 - y0) << "\">\n";
  const double sw = 0.002 * std::max(x1 - x0, y1 - y0);
  out << "<g stroke-width=\"" << format_double(sw) << "\" transform=\"scale(1,-1)\">\n";
  std::vector<std::string> layers;
  for (const Element& e : elems_)
    if (std::find(layers.begin(), layers.end(), e.layer) == layers.end())
      layers.push_back(e.layer);
  for (const std::string& layer : layers) {
    out << "<g id=\"" << layer << "\">\n";
    for (const Element& e : elems_)
      if (e.layer == layer) out << e.body << '\n';
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
}

SvgScene porism_scene(const PorismConfig& cfg, const std::vector<Point>& locus) {
  SvgScene scene;
  const SteinerChain chain = chain_at(cfg, 0.0);
  for (const Circle& c : chain.circles) scene.add_circle("chain", c, "#4477cc");
  scene.add_circle("caustic", chain.caustic, "#999999");
  scene.add_polygon("polygon", polygon_of(chain), "#dd8822");
  scene.add_polygon("pedal", pedal_polygon_of(chain), "#cc44aa");
  for (const GCircle& g : {chain.soddy_inner, chain.soddy_outer}) {
    if (is_circle(g))
      scene.add_circle("soddy", as_circle(g), "#55bbcc");
    else
      scene.add_line("soddy", as_line(g), "#55bbcc");
  }
  // outer conic from a vertex sweep
  std::vector<Point> pts;
  for (int i = 0; i < 72; ++i) {
    const double t = 2.0 * std::numbers::pi / cfg.n * (i + 0.37) / 72;
    try {
      for (const Circle& c : chain_at(cfg, t).circles) {
        if (c.center.norm() < 50.0 * (cfg.big_r + cfg.x0 + cfg.lambda))
          pts.push_back(c.center);
      }
    } catch (const GeomError&) {
    }
  }
  try {
    scene.add_conic("outer-conic", conic_from_points(pts).conic, "#777777");
  } catch (const GeomError&) {
  }
  if (!locus.empty()) scene.add_points("locus", locus, "#228833");
  return scene;
}

}  // namespace porism
