#include "porism/centers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace porism {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kThird = kPi / 3.0;
}  // namespace

Triangle Triangle::from_points(Point pa, Point pb, Point pc) {
  Triangle t;
  t.a = pa;
  t.b = pb;
  t.c = pc;
  if ((pb - pa).cross(pc - pa) < 0.0) std::swap(t.b, t.c);  // normalize CCW
  t.la = dist(t.b, t.c);
  t.lb = dist(t.c, t.a);
  t.lc = dist(t.a, t.b);
  if (t.la <= 0 || t.lb <= 0 || t.lc <= 0 ||
      t.la + t.lb <= t.lc || t.lb + t.lc <= t.la || t.lc + t.la <= t.lb)
    throw InvalidConfiguration("Triangle: degenerate vertices");
  auto ang = [](Point at, Point p, Point q) {
    const Point u = p - at, w = q - at;
    return std::atan2(std::abs(u.cross(w)), u.dot(w));
  };
  t.A = ang(t.a, t.b, t.c);
  t.B = ang(t.b, t.c, t.a);
  t.C = ang(t.c, t.a, t.b);
  return t;
}

double Triangle::area() const { return 0.5 * std::abs((b - a).cross(c - a)); }

bool is_acute(const Triangle& t) {
  const double a2 = t.la * t.la, b2 = t.lb * t.lb, c2 = t.lc * t.lc;
  return a2 + b2 > c2 && b2 + c2 > a2 && c2 + a2 > b2;
}

Point incenter(const Triangle& t) {
  return (t.la * t.a + t.lb * t.b + t.lc * t.c) / (t.la + t.lb + t.lc);
}

double inradius(const Triangle& t) { return t.area() / t.semiperimeter(); }

Circle circumcircle(const Triangle& t) { return circle_through(t.a, t.b, t.c); }

Triangle intouch_triangle(const Triangle& t) {
  const double s = t.semiperimeter();
  // contact on BC at distance s-b from B, and cyclically
  const Point pa = t.b + (s - t.lb) / t.la * (t.c - t.b);
  const Point pb = t.c + (s - t.lc) / t.lb * (t.a - t.c);
  const Point pc = t.a + (s - t.la) / t.lc * (t.b - t.a);
  return Triangle::from_points(pa, pb, pc);
}

Point center_from_barycentric(const Triangle& t, const std::array<double, 3>& w) {
  const double sum = w[0] + w[1] + w[2];
  const double scale = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw CenterUndefined("barycentric: invalid weight triple");
  if (std::abs(sum) < 1e-14 * scale)
    throw CenterUndefined("barycentric: point at infinity");
  return (w[0] * t.a + w[1] * t.b + w[2] * t.c) / sum;
}

Point center_from_trilinear(const Triangle& t, const std::array<double, 3>& tri) {
  return center_from_barycentric(t, {t.la * tri[0], t.lb * tri[1], t.lc * tri[2]});
}

namespace {

// sec(A/2) cos(B/2) cos(C/2), the X(7) representative the Soddy-line centers
// are expressed against.
double scc(double A, double B, double C) {
  return std::cos(B / 2) * std::cos(C / 2) / std::cos(A / 2);
}

double guard_div(double num, double den) {
  if (std::abs(den) < 1e-13) throw CenterUndefined("center formula degenerates");
  return num / den;
}

}  // namespace

const std::vector<int>& supported_center_ids() {
  static const std::vector<int> ids = {1, 2,  3,  4,  5,  6,  7,  8,   9,   10,  13,
                                       14, 15, 16, 20, 65, 77, 80, 105, 170, 175, 176};
  return ids;
}

bool center_supported(int id) {
  const auto& ids = supported_center_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Point kimberling(const Triangle& t, int id) {
  const double a = t.la, b = t.lb, c = t.lc;
  const double A = t.A, B = t.B, C = t.C;
  const double s = t.semiperimeter();
  const double sa = (b * b + c * c - a * a) / 2;  // Conway S_A
  const double sb = (c * c + a * a - b * b) / 2;
  const double sc = (a * a + b * b - c * c) / 2;

  switch (id) {
    case 1: return center_from_trilinear(t, {1, 1, 1});
    case 2: return center_from_barycentric(t, {1, 1, 1});
    case 3: return center_from_barycentric(t, {a * a * sa, b * b * sb, c * c * sc});
    case 4: return center_from_barycentric(t, {sb * sc, sc * sa, sa * sb});
    case 5:
      return center_from_trilinear(t, {std::cos(B - C), std::cos(C - A), std::cos(A - B)});
    case 6: return center_from_barycentric(t, {a * a, b * b, c * c});
    case 7:
      return center_from_barycentric(t, {(s - b) * (s - c), (s - c) * (s - a), (s - a) * (s - b)});
    case 8: return center_from_barycentric(t, {s - a, s - b, s - c});
    case 9: return center_from_barycentric(t, {a * (s - a), b * (s - b), c * (s - c)});
    case 10: return center_from_barycentric(t, {b + c, c + a, a + b});
    case 13:
      return center_from_trilinear(t, {guard_div(1.0, std::sin(A + kThird)),
                                       guard_div(1.0, std::sin(B + kThird)),
                                       guard_div(1.0, std::sin(C + kThird))});
    case 14:
      return center_from_trilinear(t, {guard_div(1.0, std::sin(A - kThird)),
                                       guard_div(1.0, std::sin(B - kThird)),
                                       guard_div(1.0, std::sin(C - kThird))});
    case 15:
      return center_from_trilinear(t, {std::sin(A + kThird), std::sin(B + kThird),
                                       std::sin(C + kThird)});
    case 16:
      return center_from_trilinear(t, {std::sin(A - kThird), std::sin(B - kThird),
                                       std::sin(C - kThird)});
    case 20:
      return center_from_trilinear(t, {std::cos(A) - std::cos(B) * std::cos(C),
                                       std::cos(B) - std::cos(C) * std::cos(A),
                                       std::cos(C) - std::cos(A) * std::cos(B)});
    case 65:
      // orthocenter of the intouch triangle
      return center_from_trilinear(t, {std::cos(B) + std::cos(C),
                                       std::cos(C) + std::cos(A),
                                       std::cos(A) + std::cos(B)});
    case 77:
      return center_from_trilinear(t, {guard_div(std::cos(A), 1 + std::cos(A)),
                                       guard_div(std::cos(B), 1 + std::cos(B)),
                                       guard_div(std::cos(C), 1 + std::cos(C))});
    case 80:
      return center_from_trilinear(t, {guard_div(1.0, 1 - 2 * std::cos(A)),
                                       guard_div(1.0, 1 - 2 * std::cos(B)),
                                       guard_div(1.0, 1 - 2 * std::cos(C))});
    case 105:
      return center_from_trilinear(
          t, {guard_div(1.0, b * (b - a) + c * (c - a)),
              guard_div(1.0, c * (c - b) + a * (a - b)),
              guard_div(1.0, a * (a - c) + b * (b - c))});
    case 170: {
      // Soddy-line center: harmonic conjugate of the de Longchamps point
      // with respect to the Soddy circle centers.
      const Point x20 = kimberling(t, 20);
      const Point f1 = kimberling(t, 175);
      const Point f2 = kimberling(t, 176);
      if (dist(f1, f2) < 1e-12 * (t.la + t.lb + t.lc))
        return 0.5 * (f1 + f2);  // coincident Soddy centers (equilateral limit)
      const Point d = (f2 - f1).unit();
      const double up = (x20 - f1).dot(d);
      const double ub = (f2 - f1).dot(d);
      const double den = 2.0 * up - ub;
      if (std::abs(den) < 1e-13 * (std::abs(up) + std::abs(ub)))
        throw CenterUndefined("X170: harmonic conjugate at infinity");
      return f1 + (up * ub / den) * d;
    }
    case 175:
      return center_from_trilinear(
          t, {scc(A, B, C) - 1, scc(B, C, A) - 1, scc(C, A, B) - 1});
    case 176:
      return center_from_trilinear(
          t, {scc(A, B, C) + 1, scc(B, C, A) + 1, scc(C, A, B) + 1});
    default:
      throw InvalidConfiguration("kimberling: unsupported center id " + std::to_string(id));
  }
}

SoddyCircles soddy_circles_of(const Triangle& t) {
  const double s = t.semiperimeter();
  const std::array<double, 3> r = {s - t.la, s - t.lb, s - t.lc};
  const std::array<Point, 3> z = {t.a, t.b, t.c};
  const std::array<double, 3> k = {1 / r[0], 1 / r[1], 1 / r[2]};

  using Cx = std::complex<double>;
  auto cx = [](Point p) { return Cx(p.x, p.y); };
  const double e2 = k[0] * k[1] + k[1] * k[2] + k[2] * k[0];
  const double root = 2.0 * std::sqrt(e2);
  const double ksum = k[0] + k[1] + k[2];
  const Cx zk = cx(z[0]) * k[0] + cx(z[1]) * k[1] + cx(z[2]) * k[2];
  const Cx zroot = 2.0 * std::sqrt(cx(z[0]) * cx(z[1]) * k[0] * k[1] +
                                   cx(z[1]) * cx(z[2]) * k[1] * k[2] +
                                   cx(z[2]) * cx(z[0]) * k[2] * k[0]);

  // Descartes with complex centers; the square-root branch is fixed by
  // checking tangency to all three circles.
  auto solve = [&](double curv) -> std::optional<Circle> {
    if (std::abs(curv) < 1e-12 * ksum) return std::nullopt;  // degenerates to a line
    const double rad = 1.0 / std::abs(curv);
    Circle best;
    double best_err = 1e300;
    for (double sgn : {1.0, -1.0}) {
      const Cx zc = (zk + sgn * zroot) / curv;
      const Circle cand{{zc.real(), zc.imag()}, rad};
      double err = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double d = dist(cand.center, z[i]);
        // external tangency for positive curvature, internal for negative
        const double want = curv > 0 ? rad + r[static_cast<size_t>(i)]
                                     : rad - r[static_cast<size_t>(i)];
        err = std::max(err, std::abs(d - want));
      }
      if (err < best_err) {
        best_err = err;
        best = cand;
      }
    }
    if (best_err > 1e-6 * rad + 1e-9) return std::nullopt;
    return best;
  };

  SoddyCircles out;
  const auto inner = solve(ksum + root);
  if (!inner) throw CenterUndefined("soddy_circles_of: inner Soddy circle not found");
  out.inner = *inner;
  const double outer_curv = ksum - root;
  const auto outer = solve(outer_curv);
  if (outer) {
    out.outer = outer;
    out.outer_encloses = outer_curv < 0.0;
  }
  return out;
}

}  // namespace porism
