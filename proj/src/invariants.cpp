#include "porism/invariants.hpp"

#include <cmath>

namespace porism {

double interior_angle(const Polygon& poly, int i, Point caustic_center) {
  const Point p = poly.vertex(i);
  const Point u = (poly.vertex(i - 1) - p).unit();
  const Point w = (poly.vertex(i + 1) - p).unit();
  const Point d = (caustic_center - p).unit();
  // d bisects the sector containing the caustic center, so the angles from d
  // to the nearer of +-u and of +-w are both theta/2.
  auto half = [&](Point e) {
    const double x = std::atan2(std::abs(d.cross(e)), d.dot(e));
    return std::min(x, std::numbers::pi - x);
  };
  return half(u) + half(w);
}

std::vector<double> signed_half_tangents(const PorismConfig& cfg, const SteinerChain& chain) {
  const Polygon poly = polygon_of(chain);
  const double r = chain.caustic.radius;
  std::vector<int> flip(static_cast<size_t>(cfg.n), 1);
  if (classify_regime(cfg) == Regime::Hyperbola) {
    const int m = minority_vertex(cfg, poly);
    if (m >= 0) flip[static_cast<size_t>(m)] = -1;
  }
  std::vector<double> out(static_cast<size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) {
    const double theta = interior_angle(poly, i, chain.caustic.center);
    out[static_cast<size_t>(i)] = flip[static_cast<size_t>(i)] * std::tan(theta / 2.0);
  }
  (void)r;
  return out;
}

double half_tangent_sum_of(const PorismConfig& cfg, const SteinerChain& chain, int k) {
  if (k < 1 || k > cfg.n - 1)
    throw InvalidConfiguration("half_tangent_sum: k must be in [1, N-1]");
  double sum = 0.0;
  for (double u : signed_half_tangents(cfg, chain)) sum += std::pow(u, k);
  return sum;
}

double half_tangent_sum(const PorismConfig& cfg, double t, int k) {
  return half_tangent_sum_of(cfg, chain_at(cfg, t), k);
}

namespace {

// Signed curvature of a Soddy image from the assembled chain geometry:
// negative when it encloses the chain circles, zero for a line.
double soddy_signed_curvature(const GCircle& g, const SteinerChain& chain) {
  if (is_line(g)) return 0.0;
  const Circle& s = as_circle(g);
  const Circle& probe = chain.circles.front();
  const double d = dist(s.center, probe.center);
  if (d + probe.radius <= s.radius * (1.0 + 1e-9)) return -1.0 / s.radius;  // encloses
  return 1.0 / s.radius;
}

}  // namespace

double descartes_residual(const SteinerChain& chain) {
  if (chain.circles.size() != 3)
    throw InvalidConfiguration("descartes_residual: N = 3 only");
  // Chain curvatures with the enclosure sign, recovered from the geometry.
  double invrho = 0.0;
  for (size_t i = 0; i < 3; ++i) {
    const Circle& ci = chain.circles[i];
    const Circle& cj = chain.circles[(i + 1) % 3];
    const bool encloses = dist(ci.center, cj.center) + cj.radius <= ci.radius * (1.0 + 1e-9);
    invrho += (encloses ? -1.0 : 1.0) / ci.radius;
  }
  const double k4 = soddy_signed_curvature(chain.soddy_inner, chain);
  const double k5 = soddy_signed_curvature(chain.soddy_outer, chain);
  return std::abs(invrho - (k4 + k5) / 2.0);
}

PedalSums pedal_cot_sums(const Triangle& tri, const Triangle& pedal, int k) {
  if (k != 1 && k != 2) throw InvalidConfiguration("pedal_cot_sums: k must be 1 or 2");
  PedalSums out;
  for (double ang : {tri.A, tri.B, tri.C}) out.lhs += std::pow(std::tan(ang / 2.0), k);
  for (double ang : {pedal.A, pedal.B, pedal.C})
    out.rhs += std::pow(1.0 / std::tan(ang), k);
  return out;
}

double curvature_power_sum(const SteinerChain& chain, int k) {
  const int n = static_cast<int>(chain.circles.size());
  if (k < 1 || k > n - 1)
    throw InvalidConfiguration("curvature_power_sum: k must be in [1, N-1]");
  double sum = 0.0;
  for (double kappa : chain.signed_curvature) sum += std::pow(kappa, k);
  return sum;
}

CentroidCheck centroid_ratio_check(const Polygon& poly, Point incenter_pt) {
  const Centroids c = centroids(poly);
  const Point u = c.c2 - incenter_pt;
  const Point w = c.c1 - incenter_pt;
  const double scale = poly.perimeter();
  if (u.norm() < 1e-12 * scale)
    throw RatioUndefined("centroid_ratio_check: area centroid at the incenter");
  CentroidCheck out;
  out.collinearity_residual = std::abs(u.cross(w)) / (scale * scale);
  out.ratio_residual = std::abs(w.norm() / u.norm() - 1.5);
  return out;
}

InvariantReport sweep_invariant(const std::string& name, const PorismConfig& cfg,
                                int samples, int k,
                                const std::function<double(const SteinerChain&)>& fn,
                                double rel_tol) {
  InvariantReport rep;
  rep.name = name;
  rep.k = k;
  std::vector<double> values;
  values.reserve(static_cast<size_t>(samples));
  const double period = 2.0 * std::numbers::pi / cfg.n;
  const double offset = period * 0.5 / samples;  // stay off the phase grid ends
  for (int i = 0; i < samples; ++i) {
    const double t = offset + period * i / samples;
    try {
      const SteinerChain chain = chain_at(cfg, t);
      // skip near-degenerate phases where a vertex escapes to infinity
      double vmax = 0.0;
      for (const Circle& c : chain.circles) vmax = std::max(vmax, c.center.norm());
      if (vmax > 1e6 * (cfg.big_r + cfg.x0 + cfg.lambda)) continue;
      values.push_back(fn(chain));
    } catch (const GeomError&) {
      continue;  // recorded as a gap
    }
  }
  rep.samples = static_cast<int>(values.size());
  if (values.empty()) return rep;
  double sum = 0.0;
  for (double v : values) sum += v;
  rep.mean = sum / static_cast<double>(values.size());
  for (double v : values)
    rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(v - rep.mean));
  rep.relative_deviation = rep.max_abs_deviation / std::max(std::abs(rep.mean), 1e-30);
  rep.pass = rep.relative_deviation < rel_tol;
  return rep;
}

}  // namespace porism
