#include "porism/family.hpp"

#include <cmath>

namespace porism {

Polygon polygon_of(const SteinerChain& chain) {
  Polygon p;
  p.v.reserve(chain.circles.size());
  for (const Circle& c : chain.circles) p.v.push_back(c.center);
  return p;
}

Polygon polygon_at(const PorismConfig& cfg, double t) { return polygon_of(chain_at(cfg, t)); }

Polygon pedal_polygon_of(const SteinerChain& chain) { return Polygon{chain.contacts}; }

Polygon pedal_polygon_at(const PorismConfig& cfg, double t) {
  return pedal_polygon_of(chain_at(cfg, t));
}

Polygon foot_pedal_polygon(const Polygon& poly, Point p) {
  Polygon out;
  out.v.reserve(poly.v.size());
  for (int i = 0; i < poly.size(); ++i) out.v.push_back(poly.side(i).foot(p));
  return out;
}

std::string to_string(BranchState s) {
  switch (s) {
    case BranchState::SingleBranch: return "single-branch";
    case BranchState::SplitBranch: return "split-branch";
    case BranchState::NotHyperbola: return "not-hyperbola";
  }
  return "?";
}

std::vector<int> branch_signs(const PorismConfig& cfg, const Polygon& poly) {
  // By symmetry the hyperbola's transverse axis is the x-axis; its center is
  // the midpoint of the closed-form foci.
  const OuterConicForm oc = outer_conic_closed_form(cfg);
  const double cx = 0.5 * (oc.f1.x + oc.f2.x);
  std::vector<int> signs;
  signs.reserve(poly.v.size());
  for (const Point& p : poly.v) signs.push_back(p.x >= cx ? 1 : -1);
  return signs;
}

int minority_vertex(const PorismConfig& cfg, const Polygon& poly) {
  const std::vector<int> signs = branch_signs(cfg, poly);
  int pos = 0;
  for (int s : signs) pos += (s > 0);
  const int neg = static_cast<int>(signs.size()) - pos;
  if (pos == 0 || neg == 0) return -1;
  const int minority_sign = pos < neg ? 1 : -1;
  const int count = std::min(pos, neg);
  if (count != 1) return -2;  // not a recognized porism state
  for (size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == minority_sign) return static_cast<int>(i);
  return -1;
}

BranchState branch_state_of(const PorismConfig& cfg, const SteinerChain& chain) {
  if (classify_regime(cfg) != Regime::Hyperbola) return BranchState::NotHyperbola;
  const int m = minority_vertex(cfg, polygon_of(chain));
  return m == -1 ? BranchState::SingleBranch : BranchState::SplitBranch;
}

BranchState branch_state(const PorismConfig& cfg, double t) {
  return branch_state_of(cfg, chain_at(cfg, t));
}

Centroids centroids(const Polygon& poly) {
  const int n = poly.size();
  Centroids out;
  for (const Point& p : poly.v) out.c0 = out.c0 + p;
  out.c0 = out.c0 / static_cast<double>(n);

  double per = 0.0;
  Point c1{0, 0};
  for (int i = 0; i < n; ++i) {
    const Point a = poly.vertex(i), b = poly.vertex(i + 1);
    const double len = dist(a, b);
    c1 = c1 + len * 0.5 * (a + b);
    per += len;
  }
  if (per <= 0.0) throw ZeroPerimeter("centroids: zero perimeter");
  out.c1 = c1 / per;

  double area2 = 0.0;
  Point c2{0, 0};
  for (int i = 0; i < n; ++i) {
    const Point a = poly.vertex(i), b = poly.vertex(i + 1);
    const double w = a.cross(b);
    c2 = c2 + w * (a + b);
    area2 += w;
  }
  if (std::abs(area2) < 1e-300) throw ZeroArea("centroids: zero area");
  out.c2 = c2 / (3.0 * area2);
  return out;
}

Polygon homothetic_triangle(double a, double b, double t) {
  if (!(a >= b) || !(b > 0.0))
    throw InvalidConfiguration("homothetic_triangle: need a >= b > 0");
  Polygon p;
  for (int k = 0; k < 3; ++k) {
    const double th = t + 2.0 * std::numbers::pi * k / 3.0;
    p.v.push_back({a * std::cos(th), b * std::sin(th)});
  }
  return p;
}

Polygon polar_image_polygon(const Polygon& poly, const Circle& inv, const Tolerances& tol) {
  const int n = poly.size();
  std::vector<Line> polars;
  polars.reserve(static_cast<size_t>(n));
  for (const Point& v : poly.v) polars.push_back(polar_line(v, inv));

  Polygon out;
  out.v.reserve(static_cast<size_t>(n));
  double scale = 0.0;
  for (const Point& v : poly.v) scale = std::max(scale, dist(v, inv.center));
  for (int i = 0; i < n; ++i) {
    const Point pole = pole_point(poly.side(i), inv);
    // image vertex i lies on the polars of both endpoints of side i
    const auto cross = intersect(polars[static_cast<size_t>(i)],
                                 polars[static_cast<size_t>((i + 1) % n)], 1e-14);
    if (!cross)
      throw DegeneratePolar("polar_image_polygon: consecutive polars are parallel");
    if (dist(pole, *cross) > tol.geometry * std::max(1.0, scale) * 1e2)
      throw DegeneratePolar("polar_image_polygon: dual routes disagree");
    out.v.push_back(pole);
  }
  return out;
}

}  // namespace porism
