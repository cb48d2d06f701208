#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace porism {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class GeomError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define PORISM_ERROR(NAME)                                                    \
  class NAME : public GeomError {                                             \
  public:                                                                     \
    using GeomError::GeomError;                                               \
  }

PORISM_ERROR(PointAtInversionCenter);
PORISM_ERROR(LineThroughCenter);
PORISM_ERROR(RankDeficient);
PORISM_ERROR(DegenerateConic);
PORISM_ERROR(DegenerateChainCircle);
PORISM_ERROR(CausticSingular);
PORISM_ERROR(FormulaSingular);
PORISM_ERROR(CenterUndefined);
PORISM_ERROR(DegeneratePolar);
PORISM_ERROR(ZeroPerimeter);
PORISM_ERROR(ZeroArea);
PORISM_ERROR(RatioUndefined);
PORISM_ERROR(TooFewPoints);
PORISM_ERROR(InvalidConfiguration);

#undef PORISM_ERROR

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

/// Residual thresholds used throughout the library. All residuals they gate
/// are evaluated on normalized quantities (unit-norm coefficient vectors,
/// unit-RMS point clouds), so the defaults are scale free.
struct Tolerances {
  double geometry = 1e-10;       // identity-type residuals (tangency, round trips)
  double classification = 1e-7;  // conic kind decisions on normalized coefficients
  double stationary = 1e-9;      // locus cascade thresholds, tightest first
  double segment = 1e-8;
  double circle = 1e-7;
  double conic = 1e-6;

  static Tolerances defaults() { return Tolerances{}; }
  static Tolerances strict();
  /// Profile selected by PORISM_TOLERANCE_PROFILE (strict|default).
  static Tolerances from_env();
};

// ---------------------------------------------------------------------------
// Primitives
// ---------------------------------------------------------------------------

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double px, double py) : x(px), y(py) {}

  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  Point operator/(double s) const { return {x / s, y / s}; }
  Point operator-() const { return {-x, -y}; }

  double dot(Point o) const { return x * o.x + y * o.y; }
  double cross(Point o) const { return x * o.y - y * o.x; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
  Point unit() const;
  Point perp() const { return {-y, x}; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point operator*(double s, Point p) { return p * s; }
inline double dist(Point a, Point b) { return (a - b).norm(); }

/// Implicit line a*x + b*y + c = 0 with a^2 + b^2 = 1 and canonical sign
/// (a > 0, or a == 0 and b > 0) so equal lines compare equal.
struct Line {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  static Line from_coeffs(double a, double b, double c);
  static Line through(Point p, Point q);
  /// Line through p with unit normal n.
  static Line with_normal(Point p, Point n);

  double signed_distance(Point p) const { return a * p.x + b * p.y + c; }
  double distance(Point p) const { return std::abs(signed_distance(p)); }
  Point foot(Point p) const;
  Point normal() const { return {a, b}; }
  Point direction() const { return {-b, a}; }
  /// One point on the line (the foot of the origin).
  Point point() const { return {-c * a, -c * b}; }
};

std::optional<Point> intersect(const Line& l, const Line& m, double parallel_tol = 1e-14);

struct Circle {
  Point center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point c, double r) : center(c), radius(r) {}
  Point at(double angle) const {
    return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
  }
  bool contains(Point p) const { return dist(p, center) < radius; }
};

/// Circle-or-line; generalized circles are closed under inversion.
using GCircle = std::variant<Circle, Line>;

inline bool is_circle(const GCircle& g) { return std::holds_alternative<Circle>(g); }
inline bool is_line(const GCircle& g) { return std::holds_alternative<Line>(g); }
inline const Circle& as_circle(const GCircle& g) { return std::get<Circle>(g); }
inline const Line& as_line(const GCircle& g) { return std::get<Line>(g); }

struct Polygon {
  std::vector<Point> v;

  Polygon() = default;
  explicit Polygon(std::vector<Point> pts) : v(std::move(pts)) {}
  int size() const { return static_cast<int>(v.size()); }
  Point vertex(int i) const { return v[((i % size()) + size()) % size()]; }
  Line side(int i) const { return Line::through(vertex(i), vertex(i + 1)); }
  double perimeter() const;
  double signed_area() const;
};

// ---------------------------------------------------------------------------
// Conics
// ---------------------------------------------------------------------------

enum class ConicKind { Ellipse, Parabola, Hyperbola, Circle, DegeneratePair, Empty };

std::string to_string(ConicKind k);

/// A x^2 + B xy + C y^2 + D x + E y + F = 0, coefficient vector unit norm.
struct Conic {
  std::array<double, 6> coef{1, 0, 1, 0, 0, -1};
  ConicKind kind = ConicKind::Circle;

  static Conic from_coeffs(const std::array<double, 6>& c,
                           double class_tol = Tolerances{}.classification);
  double eval(Point p) const {
    return coef[0] * p.x * p.x + coef[1] * p.x * p.y + coef[2] * p.y * p.y +
           coef[3] * p.x + coef[4] * p.y + coef[5];
  }
  double discriminant() const { return coef[1] * coef[1] - 4.0 * coef[0] * coef[2]; }
  /// Determinant of the full 3x3 symmetric matrix of the form.
  double det3() const;
};

struct ConicFit {
  Conic conic;
  double residual = 0.0;  // RMS algebraic residual in the normalized frame
};

/// Principal-axes data of a non-degenerate conic.
struct ConicGeometry {
  ConicKind kind = ConicKind::Ellipse;
  Point center;              // undefined for parabola
  Point axis;                // unit major/transverse axis direction (x-positive)
  double semi_major = 0.0;   // ellipse: a >= b; hyperbola: transverse semi-axis
  double semi_minor = 0.0;   // ellipse: b; hyperbola: conjugate semi-axis
  Point f1, f2;              // foci (f1 = f2 = focus for parabola)
  // Parabola only:
  Point vertex;
  double focal_dist = 0.0;   // vertex-to-focus distance
  std::optional<Line> directrix;
};

ConicFit conic_from_points(const std::vector<Point>& pts,
                           const Tolerances& tol = Tolerances{});
ConicKind conic_classify(const Conic& c, double tol);
ConicGeometry conic_geometry(const Conic& c, const Tolerances& tol = Tolerances{});
/// Foci of an ellipse/hyperbola, or focus + directrix of a parabola.
ConicGeometry conic_foci(const Conic& c, const Tolerances& tol = Tolerances{});

/// Fit the conic tangent to all given lines (dual fit: the same least-squares
/// machinery applied to line coordinates, then the adjugate maps back).
ConicFit conic_from_tangent_lines(const std::vector<Line>& lines,
                                  const Tolerances& tol = Tolerances{});

// ---------------------------------------------------------------------------
// Inversive operations
// ---------------------------------------------------------------------------

Point invert_point(Point p, const Circle& inv);
GCircle invert_gcircle(const GCircle& g, const Circle& inv);
Line polar_line(Point p, const Circle& inv);
Point pole_point(const Line& l, const Circle& inv);

/// Signed curvature of the inversive image of `src`: positive for an ordinary
/// image circle, negative when the image encloses the images of everything
/// outside `src`, and zero exactly when `src` passes through the center.
double inverted_signed_curvature(const Circle& src, const Circle& inv);

// ---------------------------------------------------------------------------
// Polygon predicates and builders
// ---------------------------------------------------------------------------

/// Winding-number test; points within `boundary_tol` of an edge count inside.
bool point_in_polygon(Point p, const Polygon& poly, double boundary_tol = 1e-12);

Circle circle_through(Point p, Point q, Point r);

}  // namespace porism
