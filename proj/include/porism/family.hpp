#pragma once

#include "porism/chain.hpp"
#include "porism/geom.hpp"

namespace porism {

/// Steiner-Soddy polygon: the centers of the chain circles, in chain order.
Polygon polygon_at(const PorismConfig& cfg, double t);
Polygon polygon_of(const SteinerChain& chain);

/// Harmonic pedal polygon: the contact points, in chain order. Coincides with
/// the foot-of-perpendicular pedal of polygon_at with respect to the caustic
/// center.
Polygon pedal_polygon_at(const PorismConfig& cfg, double t);
Polygon pedal_polygon_of(const SteinerChain& chain);

/// Feet of perpendiculars from p onto the sides of poly (vertex i of the
/// result is the foot on side i).
Polygon foot_pedal_polygon(const Polygon& poly, Point p);

enum class BranchState { SingleBranch, SplitBranch, NotHyperbola };

std::string to_string(BranchState s);

/// Sign of each vertex's transverse coordinate in the hyperbola's principal
/// frame (+1 / -1); only meaningful in the hyperbola regime.
std::vector<int> branch_signs(const PorismConfig& cfg, const Polygon& poly);

BranchState branch_state(const PorismConfig& cfg, double t);
BranchState branch_state_of(const PorismConfig& cfg, const SteinerChain& chain);

/// Index of the lone vertex on the minority branch, or -1 when all vertices
/// share a branch (or the regime is not hyperbola).
int minority_vertex(const PorismConfig& cfg, const Polygon& poly);

struct Centroids {
  Point c0;  // vertex centroid
  Point c1;  // perimeter centroid (side midpoints weighted by length)
  Point c2;  // area centroid
};

Centroids centroids(const Polygon& poly);

/// Triangle with vertices at eccentric angles t, t + 2pi/3, t + 4pi/3 on the
/// ellipse with semi-axes (a, b); circumscribes the concentric ellipse at
/// half scale.
Polygon homothetic_triangle(double a, double b, double t);

/// Polygon whose side lines are the polars of poly's vertices. Vertices are
/// computed as poles of poly's side lines and cross-checked against
/// intersections of consecutive polars.
Polygon polar_image_polygon(const Polygon& poly, const Circle& inv,
                            const Tolerances& tol = Tolerances{});

}  // namespace porism
