#pragma once

#include "porism/centers.hpp"
#include "porism/chain.hpp"
#include "porism/family.hpp"

#include <functional>
#include <string>
#include <vector>

namespace porism {

struct InvariantReport {
  std::string name;
  int k = 0;
  int samples = 0;
  double mean = 0.0;
  double max_abs_deviation = 0.0;
  double relative_deviation = 0.0;  // max_abs_deviation / max(|mean|, floor)
  bool pass = false;
};

/// Interior angle of the polygon at vertex i, measured as the angle of the
/// sector at the vertex that contains the caustic center. For a convex
/// polygon this is the ordinary interior angle; in everted states it picks
/// the tangent-wedge angle, keeping tan(theta/2) = r/r_i valid at every phase.
double interior_angle(const Polygon& poly, int i, Point caustic_center);

/// Per-vertex signed half-tangents sigma_i * tan(theta_i/2); sigma_i = -1
/// exactly for the minority-branch vertex in the hyperbola regime's split
/// state, matching the sign of the chain curvature.
std::vector<double> signed_half_tangents(const PorismConfig& cfg, const SteinerChain& chain);

/// Sum of k-th powers of the signed half-tangents; conserved over the porism
/// for 1 <= k <= N-1.
double half_tangent_sum(const PorismConfig& cfg, double t, int k);
double half_tangent_sum_of(const PorismConfig& cfg, const SteinerChain& chain, int k);

/// |1/rho - (1/r4 + 1/r5)/2| with 1/rho the sum of signed chain curvatures and
/// r4, r5 the signed Soddy curvatures (negative when enclosing, zero for a
/// line). N = 3 only.
double descartes_residual(const SteinerChain& chain);

struct PedalSums {
  double lhs = 0.0;  // sum of tan^k of the reference half-angles
  double rhs = 0.0;  // sum of cot^k of the pedal triangle angles
};

PedalSums pedal_cot_sums(const Triangle& tri, const Triangle& pedal, int k);

/// Sum of k-th powers of the signed chain curvatures.
double curvature_power_sum(const SteinerChain& chain, int k);

struct CentroidCheck {
  double collinearity_residual = 0.0;  // normalized cross product of (C2-I, C1-I)
  double ratio_residual = 0.0;         // | |C1-I| / |C2-I| - 3/2 |
};

/// Checks I, C2, C1 collinear with (C1-I) = (3/2)(C2-I) for a tangential
/// polygon with incenter I. Throws RatioUndefined when C2 = I.
CentroidCheck centroid_ratio_check(const Polygon& poly, Point incenter_pt);

/// Evaluates fn over `samples` phases covering one porism period, skipping
/// degenerate phases, and reports the spread of the sampled values.
InvariantReport sweep_invariant(const std::string& name, const PorismConfig& cfg,
                                int samples, int k,
                                const std::function<double(const SteinerChain&)>& fn,
                                double rel_tol);

}  // namespace porism
