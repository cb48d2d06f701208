#pragma once

#include "porism/geom.hpp"

#include <numbers>
#include <vector>

namespace porism {

/// The four scalars that determine the whole porism: chain length N, pre-image
/// circumradius R, inversion center (x0, 0) and inversion radius lambda.
struct PorismConfig {
  int n = 3;
  double big_r = 1.0;
  double x0 = 0.0;
  double lambda = 1.0;

  double alpha() const { return std::numbers::pi / n; }
  Circle inversion_circle() const { return Circle{{x0, 0.0}, lambda}; }

  /// Validates and canonicalizes (x0 >= 0 by mirror symmetry). Rejects a
  /// configuration whose phase-zero pre-image chain has a circle through the
  /// inversion center.
  static PorismConfig make(int n, double big_r, double x0, double lambda);
};

/// The regular pre-image: N identical mutually tangent circles on the regular
/// N-gon, their incircle, and the two concentric Soddy circles.
struct RegularPreImage {
  std::vector<Circle> chain;  // circle k centered at angle 2*pi*k/N (phase 0)
  Circle incircle;            // through the chain contact points
  Circle soddy_inner;         // S_reg, radius R(1 - sin a)
  Circle soddy_outer;         // S'_reg, radius R(1 + sin a)
};

RegularPreImage regular_preimage(const PorismConfig& cfg);

/// Steiner chain at porism phase t (pre-image rotation). Fields soddy_inner /
/// soddy_outer are the inversive images of S_reg / S'_reg; which of them
/// plays the enclosing role in the image depends on the regime.
struct SteinerChain {
  double phase = 0.0;
  std::vector<Circle> circles;
  /// Curvature of each chain circle with the enclosure sign: negative when
  /// the image circle contains the rest of the configuration.
  std::vector<double> signed_curvature;
  std::vector<Point> contacts;  // contact k between circles k and k+1
  GCircle soddy_inner;
  GCircle soddy_outer;
  Circle caustic;  // circle through the contacts, tangent to the polygon sides
};

SteinerChain chain_at(const PorismConfig& cfg, double t);

enum class Regime { Ellipse, Parabola, Hyperbola };

std::string to_string(Regime r);

/// Conic type of the outer conic from the inversion center position relative
/// to the regular Soddy circles.
Regime classify_regime(const PorismConfig& cfg,
                       const Tolerances& tol = Tolerances{});

/// Closed form for the caustic (I, r); singular when x0 = R cos(alpha).
Circle caustic_closed_form(const PorismConfig& cfg);

struct OuterConicForm {
  Point f1;         // focus with the + sign branch (center of the S_reg image)
  Point f2;         // focus with the - sign branch (center of the S'_reg image)
  double vertex_x;  // abscissa of the conic vertex on the symmetry axis
};

OuterConicForm outer_conic_closed_form(const PorismConfig& cfg);

struct BrocardForm {
  Point center;
  double semi_x = 0.0;  // |a'|, semi-axis along the symmetry axis
  double semi_y = 0.0;  // b', semi-axis perpendicular to it
  int sign_x = 1;       // sign the printed a' evaluates to
};

/// Closed form for the Brocard inellipse, the caustic of the pedal family.
BrocardForm brocard_inellipse_closed_form(const PorismConfig& cfg);

/// Phases where a rotated chain circle passes through the inversion center
/// (the porism degenerates there); empty outside the hyperbola band.
std::vector<double> degenerate_phases(const PorismConfig& cfg);

}  // namespace porism
