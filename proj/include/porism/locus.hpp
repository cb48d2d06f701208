#pragma once

#include "porism/centers.hpp"
#include "porism/chain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace porism {

enum class LocusKind { Stationary, Segment, Circle, Conic, Other };

std::string to_string(LocusKind k);

struct LocusResult {
  LocusKind kind = LocusKind::Other;
  double fit_residual = 0.0;  // normalized RMS of the winning stage
  int samples = 0;            // valid points used
  int gaps = 0;
  bool gap_flag = false;      // more than half the sweep was undefined
  // Fitted parameters, populated per kind:
  Point point;                // Stationary
  Point seg_a, seg_b;         // Segment endpoints (extremal projections)
  Circle circle;              // Circle
  Conic conic;                // Conic (also filled for Circle fits)
};

struct Sweep {
  std::vector<Point> points;
  int gaps = 0;
  int samples = 0;
};

/// Positions of center `id` over `samples` uniformly spaced phases of the
/// porism (N = 3). Undefined centers and degenerate phases become gaps.
Sweep sweep_center(const PorismConfig& cfg, int id, int samples);

/// Stationary / segment / circle / conic / other cascade; the tightest kind
/// whose normalized residual beats its threshold wins.
LocusResult classify_locus(const std::vector<Point>& pts, const Tolerances& tol,
                           int total_samples = -1);

struct CircleFit {
  Circle circle;
  double rms = 0.0;  // radial RMS in the normalized frame
};

/// Algebraic circle fit refined by a few Gauss-Newton steps.
CircleFit fit_circle(const std::vector<Point>& pts);

struct LineFit {
  Line line;
  double rms = 0.0;  // perpendicular RMS over total RMS
  Point e0, e1;      // extremal projections
};

LineFit fit_line(const std::vector<Point>& pts);

/// The line traced by the orthocenter over Poncelet triangles inscribed in
/// the parabola 4*c*y = x^2 and circumscribing the axis-centered circle at
/// (0, y0) that closes the porism.
Line x4_parabola_line(double c, double y0);

/// Poncelet triangles inscribed in the unit parabola y = x^2 circumscribing
/// the incircle with center (0, r^2 + r) and radius r, sampled over the
/// first vertex's abscissa.
std::vector<Triangle> poncelet_parabola_triangles(double r, int samples);

}  // namespace porism
