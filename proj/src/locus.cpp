#include "porism/locus.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace porism {

std::string to_string(LocusKind k) {
  switch (k) {
    case LocusKind::Stationary: return "stationary";
    case LocusKind::Segment: return "segment";
    case LocusKind::Circle: return "circle";
    case LocusKind::Conic: return "conic";
    case LocusKind::Other: return "other";
  }
  return "?";
}

Sweep sweep_center(const PorismConfig& cfg, int id, int samples) {
  if (cfg.n != 3) throw InvalidConfiguration("sweep_center: N = 3 only");
  if (samples < 16) throw InvalidConfiguration("sweep_center: need at least 16 samples");
  if (!center_supported(id))
    throw InvalidConfiguration("sweep_center: unsupported center id " + std::to_string(id));
  Sweep sw;
  sw.samples = samples;
  const double period = 2.0 * std::numbers::pi / 3.0;
  const double offset = period * 0.5 / samples;
  for (int i = 0; i < samples; ++i) {
    const double t = offset + period * i / samples;
    try {
      const SteinerChain chain = chain_at(cfg, t);
      double vmax = 0.0;
      for (const Circle& c : chain.circles) vmax = std::max(vmax, c.center.norm());
      if (vmax > 1e6 * (cfg.big_r + cfg.x0 + cfg.lambda)) {
        ++sw.gaps;
        continue;
      }
      const Triangle tri = Triangle::from_points(chain.circles[0].center,
                                                 chain.circles[1].center,
                                                 chain.circles[2].center);
      sw.points.push_back(kimberling(tri, id));
    } catch (const GeomError&) {
      ++sw.gaps;
    }
  }
  return sw;
}

CircleFit fit_circle(const std::vector<Point>& pts) {
  if (pts.size() < 3) throw TooFewPoints("fit_circle: need at least 3 points");
  // Kasa algebraic fit: x^2 + y^2 + D x + E y + F = 0
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), 3);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(pts.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Point& p = pts[static_cast<size_t>(i)];
    m(i, 0) = p.x;
    m(i, 1) = p.y;
    m(i, 2) = 1.0;
    rhs(i) = -(p.x * p.x + p.y * p.y);
  }
  const Eigen::Vector3d sol = m.colPivHouseholderQr().solve(rhs);
  Point c{-sol[0] / 2.0, -sol[1] / 2.0};
  double r2 = c.norm2() - sol[2];
  if (r2 <= 0.0) throw DegenerateConic("fit_circle: no real circle");
  double r = std::sqrt(r2);

  // Gauss-Newton refinement on (cx, cy, r) minimizing sum (dist - r)^2
  for (int it = 0; it < 12; ++it) {
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (const Point& p : pts) {
      const double d = dist(p, c);
      if (d < 1e-300) continue;
      const Eigen::Vector3d j{-(p.x - c.x) / d, -(p.y - c.y) / d, -1.0};
      jtj += j * j.transpose();
      jtr += j * (d - r);
    }
    const Eigen::Vector3d step = jtj.ldlt().solve(-jtr);
    c.x += step[0];
    c.y += step[1];
    r += step[2];
    if (step.norm() < 1e-14 * (std::abs(r) + 1.0)) break;
  }
  if (r <= 0.0) throw DegenerateConic("fit_circle: collapsed radius");

  CircleFit out;
  out.circle = Circle{c, r};
  double ss = 0.0, scale2 = 0.0;
  Point mean{0, 0};
  for (const Point& p : pts) mean = mean + p;
  mean = mean / static_cast<double>(pts.size());
  for (const Point& p : pts) {
    ss += (dist(p, c) - r) * (dist(p, c) - r);
    scale2 += (p - mean).norm2();
  }
  const double scale = std::sqrt(scale2 / static_cast<double>(pts.size()));
  out.rms = std::sqrt(ss / static_cast<double>(pts.size())) / std::max(scale, 1e-300);
  return out;
}

LineFit fit_line(const std::vector<Point>& pts) {
  if (pts.size() < 2) throw TooFewPoints("fit_line: need at least 2 points");
  Point mean{0, 0};
  for (const Point& p : pts) mean = mean + p;
  mean = mean / static_cast<double>(pts.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (const Point& p : pts) {
    const Point d = p - mean;
    sxx += d.x * d.x;
    sxy += d.x * d.y;
    syy += d.y * d.y;
  }
  Eigen::Matrix2d cov;
  cov << sxx, sxy, sxy, syy;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
  const Point dir{eig.eigenvectors()(0, 1), eig.eigenvectors()(1, 1)};  // principal axis

  LineFit out;
  out.line = Line::with_normal(mean, dir.perp());
  double lo = 1e300, hi = -1e300, perp2 = 0.0;
  for (const Point& p : pts) {
    const double u = (p - mean).dot(dir);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    perp2 += (p - mean).cross(dir) * (p - mean).cross(dir);
  }
  out.e0 = mean + lo * dir;
  out.e1 = mean + hi * dir;
  const double total = sxx + syy;
  out.rms = total > 0 ? std::sqrt(perp2 / total) : 0.0;
  return out;
}

LocusResult classify_locus(const std::vector<Point>& pts, const Tolerances& tol,
                           int total_samples) {
  if (pts.size() < 16) throw TooFewPoints("classify_locus: need at least 16 valid points");
  LocusResult res;
  res.samples = static_cast<int>(pts.size());
  if (total_samples > 0) {
    res.gaps = total_samples - res.samples;
    if (res.samples * 2 < total_samples) {
      res.gap_flag = true;
      res.kind = LocusKind::Other;
      return res;
    }
  }

  Point mean{0, 0};
  for (const Point& p : pts) mean = mean + p;
  mean = mean / static_cast<double>(pts.size());
  double diameter = 0.0;
  for (const Point& p : pts) diameter = std::max(diameter, 2.0 * dist(p, mean));
  if (diameter < tol.stationary * (1.0 + mean.norm())) {
    res.kind = LocusKind::Stationary;
    res.point = mean;
    res.fit_residual = diameter;
    return res;
  }

  const LineFit lf = fit_line(pts);
  if (lf.rms < tol.segment) {
    res.kind = LocusKind::Segment;
    res.seg_a = lf.e0;
    res.seg_b = lf.e1;
    res.fit_residual = lf.rms;
    return res;
  }

  try {
    const CircleFit cf = fit_circle(pts);
    if (cf.rms < tol.circle) {
      res.kind = LocusKind::Circle;
      res.circle = cf.circle;
      res.fit_residual = cf.rms;
      res.conic = Conic::from_coeffs({1, 0, 1, -2 * cf.circle.center.x,
                                      -2 * cf.circle.center.y,
                                      cf.circle.center.norm2() -
                                          cf.circle.radius * cf.circle.radius});
      return res;
    }
  } catch (const GeomError&) {
  }

  try {
    const ConicFit fit = conic_from_points(pts, tol);
    if (fit.residual < tol.conic &&
        fit.conic.kind != ConicKind::DegeneratePair) {
      res.kind = LocusKind::Conic;
      res.conic = fit.conic;
      res.fit_residual = fit.residual;
      return res;
    }
  } catch (const GeomError&) {
  }

  res.kind = LocusKind::Other;
  return res;
}

Line x4_parabola_line(double c, double y0) {
  if (!(c > 0.0)) throw InvalidConfiguration("x4_parabola_line: need c > 0");
  const double rad = c * c * c * (c + y0);
  if (rad < 0.0)
    throw InvalidConfiguration("x4_parabola_line: circle does not admit closure");
  const double y = (-6.0 * c * c + y0 * c + 2.0 * std::sqrt(rad)) / c;
  return Line::from_coeffs(0.0, 1.0, -y);
}

std::vector<Triangle> poncelet_parabola_triangles(double r, int samples) {
  if (!(r > 0.0)) throw InvalidConfiguration("poncelet_parabola_triangles: need r > 0");
  const Point o{0.0, r * r + r};  // incircle center that closes the porism
  std::vector<Triangle> out;
  out.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double a = -2.0 + 4.0 * (i + 0.5) / samples;
    const Point va{a, a * a};
    const Point v = o - va;
    const double d = v.norm();
    if (d <= 1.3 * r) continue;  // vertex on/near the circle gives thin triangles
    // unit normals of the two tangent lines from va
    const Point u = v / d;
    const double cosu = r / d;
    const double sinu = std::sqrt(std::max(0.0, 1.0 - cosu * cosu));
    std::vector<double> xs;
    for (double sgn : {1.0, -1.0}) {
      const Point n = cosu * u + sgn * sinu * u.perp();
      // tangent line n . x = n . va; second parabola intersection by Vieta
      if (std::abs(n.y) < 1e-12) continue;  // vertical tangent, no second point
      xs.push_back(-n.x / n.y - a);
    }
    if (xs.size() != 2) continue;
    // near-axis tangents send the far vertex to the end of the parabola,
    // where coordinate cancellation swamps the construction
    if (std::abs(xs[0]) > 20.0 || std::abs(xs[1]) > 20.0) continue;
    const Point vb{xs[0], xs[0] * xs[0]};
    const Point vc{xs[1], xs[1] * xs[1]};
    // closure: the third side must also be tangent to the circle
    if (std::abs(Line::through(vb, vc).distance(o) - r) > 1e-7 * (1.0 + r)) continue;
    try {
      out.push_back(Triangle::from_points(va, vb, vc));
    } catch (const GeomError&) {
    }
  }
  return out;
}

}  // namespace porism
