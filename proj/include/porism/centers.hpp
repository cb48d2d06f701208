#pragma once

#include "porism/geom.hpp"

#include <array>
#include <optional>
#include <vector>

namespace porism {

/// Counterclockwise triangle with cached side lengths and angles.
struct Triangle {
  Point a, b, c;       // vertices A, B, C
  double la, lb, lc;   // side lengths a = |BC|, b = |CA|, c = |AB|
  double A, B, C;      // interior angles

  static Triangle from_points(Point a, Point b, Point c);
  double semiperimeter() const { return 0.5 * (la + lb + lc); }
  double area() const;
  Point vertex(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

bool is_acute(const Triangle& t);

Point incenter(const Triangle& t);
double inradius(const Triangle& t);
Circle circumcircle(const Triangle& t);

/// Contact points of the incircle with the sides, as a triangle (vertex 0 on
/// side BC, etc.).
Triangle intouch_triangle(const Triangle& t);

/// Cartesian point of the normalized barycentric combination (a*alpha,
/// b*beta, c*gamma) of a trilinear triple.
Point center_from_trilinear(const Triangle& t, const std::array<double, 3>& trilinear);
Point center_from_barycentric(const Triangle& t, const std::array<double, 3>& bary);

bool center_supported(int id);
const std::vector<int>& supported_center_ids();

/// Kimberling center X_id from the standard trilinear catalogue. Throws
/// CenterUndefined when the center does not exist for this triangle (point at
/// infinity, degenerate formula).
Point kimberling(const Triangle& t, int id);

/// The two Soddy circles of the three mutually tangent circles centered at
/// the vertices (radii s-a, s-b, s-c). The outer circle is absent when it
/// degenerates to a line (sum of half-angle tangents equal to 2); enclosing
/// solutions carry their actual positive radius.
struct SoddyCircles {
  Circle inner;
  std::optional<Circle> outer;
  bool outer_encloses = false;
};

SoddyCircles soddy_circles_of(const Triangle& t);

}  // namespace porism
