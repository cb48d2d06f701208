#include <doctest.h>

#include "porism/centers.hpp"
#include "porism/chain.hpp"

#include <cmath>
#include <numbers>

using namespace porism;

namespace {

const Triangle kScalene = Triangle::from_points({0.2, 0.1}, {4.1, 0.3}, {1.1, 2.9});
const Triangle kRight345 = Triangle::from_points({0, 0}, {4, 0}, {0, 3});
const Triangle kEquilateral =
    Triangle::from_points({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});

Point circumcenter_solve(const Triangle& t) { return circumcircle(t).center; }

Point orthocenter_solve(const Triangle& t) {
  // intersection of two altitudes
  const Line ha = Line::with_normal(t.a, (t.c - t.b).unit());
  const Line hb = Line::with_normal(t.b, (t.a - t.c).unit());
  return *intersect(ha, hb);
}

}  // namespace

TEST_CASE("trilinear basics") {
  // (1:1:1) is the incenter: equidistant from the three side lines
  const Point i = center_from_trilinear(kScalene, {1, 1, 1});
  const Polygon p{{kScalene.a, kScalene.b, kScalene.c}};
  const double d0 = p.side(0).distance(i);
  CHECK(p.side(1).distance(i) == doctest::Approx(d0).epsilon(1e-13));
  CHECK(p.side(2).distance(i) == doctest::Approx(d0).epsilon(1e-13));

  // circumcenter of a right triangle is the hypotenuse midpoint
  const Point o = center_from_trilinear(
      kRight345, {std::cos(kRight345.A), std::cos(kRight345.B), std::cos(kRight345.C)});
  CHECK(dist(o, Point{2.0, 1.5}) < 1e-12);

  CHECK_THROWS_AS(center_from_trilinear(kScalene, {0, 0, 0}), CenterUndefined);
}

TEST_CASE("kimberling table against independent constructions") {
  const Triangle& t = kScalene;
  CHECK(dist(kimberling(t, 2), (t.a + t.b + t.c) / 3.0) < 1e-13);
  CHECK(dist(kimberling(t, 3), circumcenter_solve(t)) < 1e-12);
  CHECK(dist(kimberling(t, 4), orthocenter_solve(t)) < 1e-12);
  // nine-point center: midpoint of O and H
  CHECK(dist(kimberling(t, 5),
             0.5 * (circumcenter_solve(t) + orthocenter_solve(t))) < 1e-12);
  // de Longchamps: reflection of H over O
  CHECK(dist(kimberling(t, 20),
             2.0 * circumcenter_solve(t) - orthocenter_solve(t)) < 1e-11);
  // symmedian point: side distances proportional to side lengths
  {
    const Point k = kimberling(t, 6);
    const Polygon p{{t.a, t.b, t.c}};
    const double q0 = p.side(0).distance(k) / dist(t.a, t.b);
    // side(0) = (A, B) has length c; pair distances with the sides they face
    const double da = Line::through(t.b, t.c).distance(k) / t.la;
    const double db = Line::through(t.c, t.a).distance(k) / t.lb;
    const double dc = Line::through(t.a, t.b).distance(k) / t.lc;
    CHECK(db == doctest::Approx(da).epsilon(1e-12));
    CHECK(dc == doctest::Approx(da).epsilon(1e-12));
    (void)q0;
  }
  // Gergonne point: cevians through intouch vertices concur there
  {
    const Point g = kimberling(t, 7);
    const Triangle it = intouch_triangle(t);
    CHECK(Line::through(t.a, it.a).distance(g) < 1e-12);
    CHECK(Line::through(t.b, it.b).distance(g) < 1e-12);
    CHECK(Line::through(t.c, it.c).distance(g) < 1e-12);
  }
  // Nagel line: X1, X2, X10 collinear with X10 the midpoint of X1-X8
  {
    const Point x1 = kimberling(t, 1);
    const Point x8 = kimberling(t, 8);
    const Point x10 = kimberling(t, 10);
    CHECK(dist(x10, 0.5 * (x1 + x8)) < 1e-12);
  }
  // mittenpunkt: symmedian point of the excentral triangle
  {
    const double a = t.la, b = t.lb, c = t.lc;
    const Point ia = center_from_trilinear(t, {-1, 1, 1});
    const Point ib = center_from_trilinear(t, {1, -1, 1});
    const Point ic = center_from_trilinear(t, {1, 1, -1});
    const Triangle exc = Triangle::from_points(ia, ib, ic);
    CHECK(dist(kimberling(t, 9), kimberling(exc, 6)) < 1e-11);
    (void)a; (void)b; (void)c;
  }
  // first Fermat point: sees each side under 120 degrees
  {
    const Point f = kimberling(t, 13);
    auto ang = [&](Point p, Point q) {
      const Point u = p - f, w = q - f;
      return std::atan2(std::abs(u.cross(w)), u.dot(w));
    };
    CHECK(ang(t.a, t.b) == doctest::Approx(2.0 * std::numbers::pi / 3).epsilon(1e-10));
    CHECK(ang(t.b, t.c) == doctest::Approx(2.0 * std::numbers::pi / 3).epsilon(1e-10));
  }
  // isodynamic points: distances to vertices inversely proportional to sides
  for (int id : {15, 16}) {
    const Point p = kimberling(t, id);
    const double pa = dist(p, t.a) * t.la;
    CHECK(dist(p, t.b) * t.lb == doctest::Approx(pa).epsilon(1e-9));
    CHECK(dist(p, t.c) * t.lc == doctest::Approx(pa).epsilon(1e-9));
  }
  // X65: orthocenter of the intouch triangle (circumcenter of the intouch
  // triangle is the incenter, so H' = A' + B' + C' - 2I)
  {
    const Triangle it = intouch_triangle(t);
    const Point h = it.a + it.b + it.c - 2.0 * incenter(t);
    CHECK(dist(kimberling(t, 65), h) < 1e-12);
  }
  // X77, X170 lie on the line X1-X7 (the Soddy line)
  for (int id : {77, 170}) {
    const Point x1 = kimberling(t, 1);
    const Point x7 = kimberling(t, 7);
    const Point p = kimberling(t, id);
    CHECK(std::abs((p - x1).cross((x7 - x1).unit())) < 1e-10 * (1 + (p - x1).norm()));
  }
  // X105 lies on the circumcircle
  {
    const Circle cc = circumcircle(t);
    CHECK(std::abs(dist(kimberling(t, 105), cc.center) - cc.radius) < 1e-11 * cc.radius);
  }
  // X175/X176 are the outer/inner Soddy circle centers
  {
    const SoddyCircles sod = soddy_circles_of(t);
    REQUIRE(sod.outer.has_value());
    CHECK(dist(kimberling(t, 176), sod.inner.center) < 1e-9);
    CHECK(dist(kimberling(t, 175), sod.outer->center) < 1e-9);
  }
}

TEST_CASE("right triangle orthocenter sits at the right-angle vertex") {
  CHECK(dist(kimberling(kRight345, 4), {0, 0}) < 1e-12);
}

TEST_CASE("equilateral coincidence for centers defined there") {
  const Point center = (kEquilateral.a + kEquilateral.b + kEquilateral.c) / 3.0;
  // X14, X16, X80 and friends are genuinely indeterminate at the equilateral
  for (int id : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 15, 20, 65, 77, 170, 175, 176})
    CHECK(dist(kimberling(kEquilateral, id), center) < 1e-9);
}

TEST_CASE("intouch triangle") {
  SUBCASE("3-4-5 contact distances are s-a, s-b, s-c") {
    const Triangle t = kRight345;  // a=|BC|=5, b=|CA|=3, c=|AB|=4, s=6
    const Triangle it = intouch_triangle(t);
    // contact on BC at distance s-b from B
    CHECK(dist(it.a, t.b) == doctest::Approx(6.0 - t.lb).epsilon(1e-12));
    CHECK(dist(it.b, t.c) == doctest::Approx(6.0 - t.lc).epsilon(1e-12));
    CHECK(dist(it.c, t.a) == doctest::Approx(6.0 - t.la).epsilon(1e-12));
    // contacts are feet of perpendiculars from the incenter
    const Point i = incenter(t);
    CHECK(dist(Line::through(t.b, t.c).foot(i), it.a) < 1e-12);
  }

  SUBCASE("porism triangle: intouch equals the chain contact polygon") {
    const PorismConfig cfg = PorismConfig::make(3, 1, 0.08, 1);
    for (double ph : {0.2, 1.3}) {
      const SteinerChain ch = chain_at(cfg, ph);
      const Triangle tri = Triangle::from_points(
          ch.circles[0].center, ch.circles[1].center, ch.circles[2].center);
      const Triangle it = intouch_triangle(tri);
      // same three points as the chain contacts, as sets
      for (const Point& c : ch.contacts) {
        const double d = std::min({dist(c, it.a), dist(c, it.b), dist(c, it.c)});
        CHECK(d < 1e-10);
      }
    }
  }

  SUBCASE("intouch triangles are always acute") {
    CHECK(is_acute(intouch_triangle(kRight345)));
    CHECK(is_acute(intouch_triangle(kScalene)));
    CHECK(is_acute(intouch_triangle(
        Triangle::from_points({0, 0}, {1, 0}, {0.5, 4.0}))));
  }
}

TEST_CASE("is_acute") {
  CHECK(is_acute(kEquilateral));
  CHECK_FALSE(is_acute(kRight345));
  CHECK_FALSE(is_acute(Triangle::from_points({0, 0}, {1, 0}, {0.5, 0.16})));
}

TEST_CASE("soddy circle construction") {
  SUBCASE("three unit circles at equilateral vertices, side 2") {
    // curvatures 1,1,1: soddy curvatures 3 +- 2 sqrt(3)
    const Triangle t = Triangle::from_points({0, 0}, {2, 0}, {1, std::sqrt(3.0)});
    const SoddyCircles sod = soddy_circles_of(t);
    CHECK(1.0 / sod.inner.radius == doctest::Approx(3 + 2 * std::sqrt(3.0)).epsilon(1e-12));
    REQUIRE(sod.outer.has_value());
    CHECK(1.0 / sod.outer->radius ==
          doctest::Approx(std::abs(3 - 2 * std::sqrt(3.0))).epsilon(1e-12));
    CHECK(sod.outer_encloses);
  }

  SUBCASE("X175 escapes to infinity when the half-tangent sum reaches 2") {
    // parabola-regime porism triangle: outer Soddy circle is a line
    const PorismConfig cfg = PorismConfig::make(3, 1, 1.0 - std::sqrt(3.0) / 2.0, 1);
    const SteinerChain ch = chain_at(cfg, 0.9);
    const Triangle tri = Triangle::from_points(
        ch.circles[0].center, ch.circles[1].center, ch.circles[2].center);
    const SoddyCircles sod = soddy_circles_of(tri);
    CHECK_FALSE(sod.outer.has_value());
    CHECK_THROWS_AS(kimberling(tri, 175), CenterUndefined);
  }
}

TEST_CASE("unsupported ids are rejected") {
  CHECK(center_supported(105));
  CHECK_FALSE(center_supported(999));
  CHECK_THROWS_AS(kimberling(kScalene, 999), InvalidConfiguration);
}
