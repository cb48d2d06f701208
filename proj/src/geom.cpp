#include "porism/geom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdlib>

namespace porism {

Tolerances Tolerances::strict() {
  Tolerances t;
  t.geometry = 1e-12;
  t.classification = 1e-9;
  t.stationary = 1e-11;
  t.segment = 1e-10;
  t.circle = 1e-9;
  t.conic = 1e-8;
  return t;
}

Tolerances Tolerances::from_env() {
  const char* profile = std::getenv("PORISM_TOLERANCE_PROFILE");
  if (profile != nullptr && std::string(profile) == "strict") return strict();
  return defaults();
}

Point Point::unit() const {
  const double n = norm();
  if (n == 0.0) throw GeomError("unit(): zero vector");
  return {x / n, y / n};
}

Line Line::from_coeffs(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (n == 0.0) throw GeomError("Line: zero normal");
  a /= n;
  b /= n;
  c /= n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{a, b, c};
}

Line Line::through(Point p, Point q) {
  const Point d = q - p;
  // normal (-dy, dx), offset so p satisfies the equation
  return from_coeffs(-d.y, d.x, d.y * p.x - d.x * p.y);
}

Line Line::with_normal(Point p, Point n) {
  return from_coeffs(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

Point Line::foot(Point p) const {
  const double d = signed_distance(p);
  return {p.x - d * a, p.y - d * b};
}

std::optional<Point> intersect(const Line& l, const Line& m, double parallel_tol) {
  const double det = l.a * m.b - l.b * m.a;
  if (std::abs(det) < parallel_tol) return std::nullopt;
  return Point{(l.b * m.c - l.c * m.b) / det, (l.c * m.a - l.a * m.c) / det};
}

double Polygon::perimeter() const {
  double p = 0.0;
  for (int i = 0; i < size(); ++i) p += dist(vertex(i), vertex(i + 1));
  return p;
}

double Polygon::signed_area() const {
  double s = 0.0;
  for (int i = 0; i < size(); ++i) s += vertex(i).cross(vertex(i + 1));
  return 0.5 * s;
}

std::string to_string(ConicKind k) {
  switch (k) {
    case ConicKind::Ellipse: return "ellipse";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::Circle: return "circle";
    case ConicKind::DegeneratePair: return "degenerate";
    case ConicKind::Empty: return "empty";
  }
  return "?";
}

double Conic::det3() const {
  const double A = coef[0], B = coef[1], C = coef[2], D = coef[3], E = coef[4], F = coef[5];
  return A * (C * F - E * E / 4.0) - (B / 2.0) * (B / 2.0 * F - E / 2.0 * D / 2.0) +
         (D / 2.0) * (B / 2.0 * E / 2.0 - C * D / 2.0);
}

namespace {

std::array<double, 6> unit_coeffs(std::array<double, 6> c) {
  double n = 0.0;
  for (double v : c) n += v * v;
  n = std::sqrt(n);
  if (n == 0.0) throw DegenerateConic("conic: zero coefficient vector");
  for (double& v : c) v /= n;
  // canonical sign: largest-magnitude coefficient positive
  int imax = 0;
  for (int i = 1; i < 6; ++i)
    if (std::abs(c[i]) > std::abs(c[imax])) imax = i;
  if (c[imax] < 0.0)
    for (double& v : c) v = -v;
  return c;
}

struct Frame {
  double mx = 0.0, my = 0.0, s = 1.0;

  static Frame of(const std::vector<Point>& pts) {
    Frame f;
    for (const Point& p : pts) {
      f.mx += p.x;
      f.my += p.y;
    }
    f.mx /= static_cast<double>(pts.size());
    f.my /= static_cast<double>(pts.size());
    double r2 = 0.0;
    for (const Point& p : pts) r2 += (p.x - f.mx) * (p.x - f.mx) + (p.y - f.my) * (p.y - f.my);
    f.s = std::sqrt(r2 / static_cast<double>(pts.size()));
    if (f.s == 0.0) f.s = 1.0;
    return f;
  }
  Point apply(Point p) const { return {(p.x - mx) / s, (p.y - my) / s}; }
};

// Map conic coefficients from the normalized frame x' = (x-mx)/s back to the
// original frame.
std::array<double, 6> denormalize(const std::array<double, 6>& c, const Frame& f) {
  const double A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
  const double s = f.s, mx = f.mx, my = f.my;
  std::array<double, 6> o;
  o[0] = A / (s * s);
  o[1] = B / (s * s);
  o[2] = C / (s * s);
  o[3] = -2.0 * A * mx / (s * s) - B * my / (s * s) + D / s;
  o[4] = -B * mx / (s * s) - 2.0 * C * my / (s * s) + E / s;
  o[5] = A * mx * mx / (s * s) + B * mx * my / (s * s) + C * my * my / (s * s) -
         D * mx / s - E * my / s + F;
  return o;
}

}  // namespace

Conic Conic::from_coeffs(const std::array<double, 6>& c, double class_tol) {
  Conic out;
  out.coef = unit_coeffs(c);
  out.kind = conic_classify(out, class_tol);
  return out;
}

ConicKind conic_classify(const Conic& c, double tol) {
  if (std::abs(c.det3()) < tol * tol) return ConicKind::DegeneratePair;
  const double disc = c.discriminant();
  if (std::abs(disc) < tol) return ConicKind::Parabola;
  if (disc > 0.0) return ConicKind::Hyperbola;
  if (std::abs(c.coef[0] - c.coef[2]) < tol && std::abs(c.coef[1]) < tol)
    return ConicKind::Circle;
  return ConicKind::Ellipse;
}

ConicFit conic_from_points(const std::vector<Point>& pts, const Tolerances& tol) {
  if (pts.size() < 5) throw TooFewPoints("conic_from_points: need at least 5 points");
  const Frame f = Frame::of(pts);

  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), 6);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Point p = f.apply(pts[static_cast<size_t>(i)]);
    m(i, 0) = p.x * p.x;
    m(i, 1) = p.x * p.y;
    m(i, 2) = p.y * p.y;
    m(i, 3) = p.x;
    m(i, 4) = p.y;
    m(i, 5) = 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv[4] < tol.classification * sv[0])
    throw RankDeficient("conic_from_points: ambiguous conic (rank-deficient design)");

  std::array<double, 6> cn;
  for (int i = 0; i < 6; ++i) cn[static_cast<size_t>(i)] = svd.matrixV()(i, 5);

  ConicFit out;
  out.residual =
      sv.size() >= 6 ? sv[5] / std::sqrt(static_cast<double>(pts.size())) : 0.0;
  out.conic = Conic::from_coeffs(denormalize(cn, f), tol.classification);
  return out;
}

ConicFit conic_from_tangent_lines(const std::vector<Line>& lines, const Tolerances& tol) {
  if (lines.size() < 5) throw TooFewPoints("conic_from_tangent_lines: need at least 5 lines");
  // Dual fit: a line (u, v, w) is tangent to the conic with matrix M iff
  // (u v w) adj(M) (u v w)^T = 0, so the line triples satisfy a quadratic
  // form exactly like points do.
  Eigen::MatrixXd m(static_cast<Eigen::Index>(lines.size()), 6);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Line& l = lines[static_cast<size_t>(i)];
    // scale w so typical magnitudes are comparable
    const double u = l.a, v = l.b, w = l.c;
    m(i, 0) = u * u;
    m(i, 1) = u * v;
    m(i, 2) = v * v;
    m(i, 3) = u * w;
    m(i, 4) = v * w;
    m(i, 5) = w * w;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv[4] < tol.classification * sv[0])
    throw RankDeficient("conic_from_tangent_lines: ambiguous dual conic");

  // Dual matrix [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]
  const auto q = svd.matrixV().col(5);
  Eigen::Matrix3d dual;
  dual << q[0], q[1] / 2, q[3] / 2, q[1] / 2, q[2], q[4] / 2, q[3] / 2, q[4] / 2, q[5];
  // Primal conic matrix is the adjugate of the dual.
  Eigen::Matrix3d pr = dual.determinant() * dual.inverse();

  ConicFit out;
  out.residual =
      sv.size() >= 6 ? sv[5] / std::sqrt(static_cast<double>(lines.size())) : 0.0;
  out.conic = Conic::from_coeffs(
      {pr(0, 0), 2.0 * pr(0, 1), pr(1, 1), 2.0 * pr(0, 2), 2.0 * pr(1, 2), pr(2, 2)},
      tol.classification);
  return out;
}

ConicGeometry conic_geometry(const Conic& c, const Tolerances& tol) {
  const ConicKind kind = conic_classify(c, tol.classification);
  if (kind == ConicKind::DegeneratePair || kind == ConicKind::Empty)
    throw DegenerateConic("conic_geometry: degenerate conic");

  ConicGeometry g;
  g.kind = kind;
  const double A = c.coef[0], B = c.coef[1], C = c.coef[2], D = c.coef[3], E = c.coef[4],
               F = c.coef[5];

  Eigen::Matrix2d q;
  q << A, B / 2.0, B / 2.0, C;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(q);
  const Eigen::Vector2d ev = eig.eigenvalues();
  const Eigen::Matrix2d evec = eig.eigenvectors();

  if (kind == ConicKind::Parabola) {
    // one eigenvalue ~ 0; rotate so the quadratic part is mu * Y^2
    const int zi = std::abs(ev[0]) < std::abs(ev[1]) ? 0 : 1;
    const int mi = 1 - zi;
    Point ax{evec(0, zi), evec(1, zi)};   // axis direction (zero eigenvector)
    const Point yd{evec(0, mi), evec(1, mi)};
    const double mu = ev[mi];
    // coordinates: X along ax, Y along yd; conic: mu Y^2 + d X + e Y + f = 0
    const double d = D * ax.x + E * ax.y;
    const double e = D * yd.x + E * yd.y;
    const double f = F;
    if (std::abs(d) < 1e-300) throw DegenerateConic("conic_geometry: parabola without axis term");
    const double yv = -e / (2.0 * mu);
    const double xv = -(f - e * e / (4.0 * mu)) / d;
    // Y'^2 = -(d/mu)(X - xv): opens toward +X when -(d/mu) > 0
    double fourp = -d / mu;
    Point open_dir = ax;
    if (fourp < 0.0) {
      fourp = -fourp;
      open_dir = -ax;
    }
    const double p = fourp / 4.0;
    g.vertex = xv * ax + yv * yd;
    g.axis = open_dir;
    g.focal_dist = p;
    g.f1 = g.f2 = g.vertex + p * open_dir;
    g.directrix = Line::with_normal(g.vertex - p * open_dir, open_dir);
    return g;
  }

  // central conic: solve for the center
  const double det = 4.0 * A * C - B * B;
  g.center = {(B * E - 2.0 * C * D) / det, (B * D - 2.0 * A * E) / det};
  const double fc = F + (D * g.center.x + E * g.center.y) / 2.0;
  // principal frame: ev[i] X_i^2 + fc = 0
  const double s0 = -fc / ev[0];
  const double s1 = -fc / ev[1];  // squared semi-axes (one negative for hyperbola)

  if (kind == ConicKind::Hyperbola) {
    const int ti = s0 > 0.0 ? 0 : 1;  // transverse axis has positive squared semi-axis
    const int ci = 1 - ti;
    if (s0 * s1 > 0.0) throw DegenerateConic("conic_geometry: inconsistent hyperbola");
    g.semi_major = std::sqrt(s0 > 0 ? s0 : s1);
    g.semi_minor = std::sqrt(-(ti == 0 ? s1 : s0));
    Point ax{evec(0, ti), evec(1, ti)};
    if (ax.x < 0.0 || (ax.x == 0.0 && ax.y < 0.0)) ax = -ax;
    g.axis = ax;
    const double fd = std::hypot(g.semi_major, g.semi_minor);
    g.f1 = g.center + fd * ax;
    g.f2 = g.center - fd * ax;
    (void)ci;
    return g;
  }

  if (s0 <= 0.0 || s1 <= 0.0) throw DegenerateConic("conic_geometry: empty conic");
  const int mi = s0 >= s1 ? 0 : 1;
  g.semi_major = std::sqrt(std::max(s0, s1));
  g.semi_minor = std::sqrt(std::min(s0, s1));
  Point ax{evec(0, mi), evec(1, mi)};
  if (ax.x < 0.0 || (ax.x == 0.0 && ax.y < 0.0)) ax = -ax;
  g.axis = ax;
  const double fd = std::sqrt(std::max(0.0, g.semi_major * g.semi_major -
                                                g.semi_minor * g.semi_minor));
  g.f1 = g.center + fd * ax;
  g.f2 = g.center - fd * ax;
  return g;
}

ConicGeometry conic_foci(const Conic& c, const Tolerances& tol) { return conic_geometry(c, tol); }

// ---------------------------------------------------------------------------
// Inversion
// ---------------------------------------------------------------------------

Point invert_point(Point p, const Circle& inv) {
  const Point d = p - inv.center;
  const double d2 = d.norm2();
  if (d2 < 1e-28 * inv.radius * inv.radius)
    throw PointAtInversionCenter("invert_point: point at the inversion center");
  return inv.center + (inv.radius * inv.radius / d2) * d;
}

GCircle invert_gcircle(const GCircle& g, const Circle& inv) {
  const double k = inv.radius * inv.radius;
  // A curve is judged "through the center" when its distance to the center is
  // below lambda * 1e-9, which keeps behavior continuous near degeneration.
  const double through_tol = inv.radius * 1e-9;

  if (is_line(g)) {
    const Line& l = as_line(g);
    const double delta = l.signed_distance(inv.center);
    if (std::abs(delta) < through_tol) return l;  // line through center is fixed
    // image: circle with diameter from center to the inverse of the foot
    const Point n = l.normal();
    const Point c = inv.center - (k / (2.0 * delta)) * n;
    return Circle{c, k / (2.0 * std::abs(delta))};
  }

  const Circle& s = as_circle(g);
  const Point d = s.center - inv.center;
  const double dn = d.norm();
  if (std::abs(dn - s.radius) < through_tol) {
    // circle through the center: image is a line perpendicular to the center
    // ray through the image of the antipode
    const Point dir = dn > 0 ? d.unit() : Point{1, 0};
    const double far = dn + s.radius;
    const Point q = inv.center + (k / far) * dir;
    return Line::with_normal(q, dir);
  }
  const double t = d.norm2() - s.radius * s.radius;
  const Point c = inv.center + (k / t) * d;
  return Circle{c, k * s.radius / std::abs(t)};
}

double inverted_signed_curvature(const Circle& src, const Circle& inv) {
  const double t = (src.center - inv.center).norm2() - src.radius * src.radius;
  return t / (inv.radius * inv.radius * src.radius);
}

Line polar_line(Point p, const Circle& inv) {
  const Point u = p - inv.center;
  const double un = u.norm();
  if (un < 1e-14 * inv.radius)
    throw PointAtInversionCenter("polar_line: pole at the inversion center");
  const Point n = u / un;
  const double d = inv.radius * inv.radius / un;  // distance from center along n
  return Line::with_normal(inv.center + d * n, n);
}

Point pole_point(const Line& l, const Circle& inv) {
  const double delta = l.signed_distance(inv.center);
  if (std::abs(delta) < 1e-14 * inv.radius)
    throw LineThroughCenter("pole_point: line through the inversion center");
  return inv.center - (inv.radius * inv.radius / delta) * l.normal();
}

// ---------------------------------------------------------------------------
// Polygon predicates
// ---------------------------------------------------------------------------

bool point_in_polygon(Point p, const Polygon& poly, double boundary_tol) {
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    const Point a = poly.vertex(i), b = poly.vertex(i + 1);
    const Point ab = b - a;
    const double t = std::clamp((p - a).dot(ab) / ab.norm2(), 0.0, 1.0);
    if (dist(p, a + t * ab) <= boundary_tol) return true;  // boundary counts inside
  }
  // winding number
  double angle = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point u = poly.vertex(i) - p;
    const Point w = poly.vertex(i + 1) - p;
    angle += std::atan2(u.cross(w), u.dot(w));
  }
  return std::abs(angle) > 3.14159;  // |winding| >= 1
}

Circle circle_through(Point p, Point q, Point r) {
  const double d = 2.0 * (p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y));
  if (std::abs(d) < 1e-300) throw DegenerateConic("circle_through: collinear points");
  const double p2 = p.norm2(), q2 = q.norm2(), r2 = r.norm2();
  const Point c{(p2 * (q.y - r.y) + q2 * (r.y - p.y) + r2 * (p.y - q.y)) / d,
                (p2 * (r.x - q.x) + q2 * (p.x - r.x) + r2 * (q.x - p.x)) / d};
  return Circle{c, dist(c, p)};
}

}  // namespace porism
