#include "porism/chain.hpp"

#include <algorithm>
#include <cmath>

namespace porism {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PorismConfig PorismConfig::make(int n, double big_r, double x0, double lambda) {
  if (n < 3) throw InvalidConfiguration("PorismConfig: n must be at least 3");
  if (!(big_r > 0.0)) throw InvalidConfiguration("PorismConfig: r must be positive");
  if (!(lambda > 0.0)) throw InvalidConfiguration("PorismConfig: lambda must be positive");
  if (!std::isfinite(x0)) throw InvalidConfiguration("PorismConfig: x0 must be finite");
  PorismConfig cfg;
  cfg.n = n;
  cfg.big_r = big_r;
  cfg.x0 = std::abs(x0);  // mirror symmetry
  cfg.lambda = lambda;
  // Incidence of the inversion center with a rotated chain circle is a
  // per-phase hazard (chain_at raises DegenerateChainCircle); a blanket
  // construction-time rejection would outlaw the parabola regime, whose
  // boundary value x0 = R(1 - sin a) always touches the phase-zero circle.
  return cfg;
}

RegularPreImage regular_preimage(const PorismConfig& cfg) {
  const double a = cfg.alpha();
  const double rc = cfg.big_r * std::sin(a);
  RegularPreImage pre;
  pre.chain.reserve(static_cast<size_t>(cfg.n));
  for (int k = 0; k < cfg.n; ++k) {
    const double th = kTwoPi * k / cfg.n;
    pre.chain.push_back(
        Circle{{cfg.big_r * std::cos(th), cfg.big_r * std::sin(th)}, rc});
  }
  pre.incircle = Circle{{0, 0}, cfg.big_r * std::cos(a)};
  pre.soddy_inner = Circle{{0, 0}, cfg.big_r * (1.0 - std::sin(a))};
  pre.soddy_outer = Circle{{0, 0}, cfg.big_r * (1.0 + std::sin(a))};
  return pre;
}

SteinerChain chain_at(const PorismConfig& cfg, double t) {
  const double a = cfg.alpha();
  const double rc = cfg.big_r * std::sin(a);
  const Circle inv = cfg.inversion_circle();

  SteinerChain ch;
  ch.phase = t;
  ch.circles.reserve(static_cast<size_t>(cfg.n));
  ch.signed_curvature.reserve(static_cast<size_t>(cfg.n));
  ch.contacts.reserve(static_cast<size_t>(cfg.n));

  for (int k = 0; k < cfg.n; ++k) {
    const double th = t + kTwoPi * k / cfg.n;
    const Circle pre{{cfg.big_r * std::cos(th), cfg.big_r * std::sin(th)}, rc};
    if (std::abs(dist(pre.center, inv.center) - rc) < 1e-9 * cfg.lambda)
      throw DegenerateChainCircle("chain_at: chain circle through the inversion center");
    const GCircle img = invert_gcircle(pre, inv);
    ch.circles.push_back(as_circle(img));
    ch.signed_curvature.push_back(inverted_signed_curvature(pre, inv));
  }

  const double apo = cfg.big_r * std::cos(a);
  for (int k = 0; k < cfg.n; ++k) {
    // pre-image contact between circles k and k+1: midpoint of their centers,
    // on the incircle
    const double th = t + kTwoPi * (k + 0.5) / cfg.n;
    ch.contacts.push_back(invert_point({apo * std::cos(th), apo * std::sin(th)}, inv));
  }

  const RegularPreImage pre = regular_preimage(cfg);
  ch.soddy_inner = invert_gcircle(pre.soddy_inner, inv);
  ch.soddy_outer = invert_gcircle(pre.soddy_outer, inv);

  const GCircle caustic = invert_gcircle(pre.incircle, inv);
  if (!is_circle(caustic))
    throw CausticSingular("chain_at: caustic degenerates to a line (x0 = R cos a)");
  ch.caustic = as_circle(caustic);
  return ch;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Ellipse: return "ellipse";
    case Regime::Parabola: return "parabola";
    case Regime::Hyperbola: return "hyperbola";
  }
  return "?";
}

Regime classify_regime(const PorismConfig& cfg, const Tolerances& tol) {
  const double s = std::sin(cfg.alpha());
  const double lo = cfg.big_r * (1.0 - s);
  const double hi = cfg.big_r * (1.0 + s);
  const double eps = tol.classification * cfg.big_r;
  if (std::abs(cfg.x0 - lo) < eps || std::abs(cfg.x0 - hi) < eps) return Regime::Parabola;
  if (cfg.x0 < lo || cfg.x0 > hi) return Regime::Ellipse;
  return Regime::Hyperbola;
}

Circle caustic_closed_form(const PorismConfig& cfg) {
  const double ca = std::cos(cfg.alpha());
  const double s = cfg.big_r * cfg.big_r * ca * ca - cfg.x0 * cfg.x0;
  if (std::abs(s) < 1e-12 * cfg.big_r * cfg.big_r)
    throw CausticSingular("caustic_closed_form: R^2 cos^2(a) = x0^2");
  const double l2 = cfg.lambda * cfg.lambda;
  return Circle{{cfg.x0 + cfg.x0 * l2 / s, 0.0}, l2 * cfg.big_r * ca / std::abs(s)};
}

OuterConicForm outer_conic_closed_form(const PorismConfig& cfg) {
  const double R = cfg.big_r, x0 = cfg.x0;
  const double l2 = cfg.lambda * cfg.lambda;
  const double ca = std::cos(cfg.alpha()), sa = std::sin(cfg.alpha());
  const double c2 = ca * ca, c4 = c2 * c2;
  const double R2 = R * R, R4 = R2 * R2, x2 = x0 * x0, x4 = x2 * x2;

  const double den = R4 * c4 + 2.0 * R2 * c2 * x2 - 4.0 * R2 * x2 + x4;
  if (std::abs(den) < 1e-12 * R4)
    throw FormulaSingular("outer_conic_closed_form: vanishing focus denominator");
  const double common = R4 * c4 - R2 * c2 * (l2 - 2.0 * x2) + 2.0 * R2 * (l2 - 2.0 * x2) -
                        x2 * (l2 - x2);
  const double wing = 2.0 * R2 * sa * l2;

  const double vden = R2 * std::cos(2.0 * cfg.alpha()) + R2 - 4.0 * R * x0 + 2.0 * x2;
  if (std::abs(vden) < 1e-12 * R2)
    throw FormulaSingular("outer_conic_closed_form: vanishing vertex denominator");
  const double vnum = std::cos(2.0 * cfg.alpha()) * R2 * x0 +
                      R * (R * x0 + 2.0 * l2 - 4.0 * x2) - 2.0 * x0 * (l2 - x2);

  OuterConicForm out;
  out.f1 = {x0 * (common + wing) / den, 0.0};
  out.f2 = {x0 * (common - wing) / den, 0.0};
  out.vertex_x = vnum / vden;
  return out;
}

BrocardForm brocard_inellipse_closed_form(const PorismConfig& cfg) {
  const double R = cfg.big_r, x0 = cfg.x0;
  const double l2 = cfg.lambda * cfg.lambda;
  const double ca = std::cos(cfg.alpha());
  const double c2 = ca * ca, c4 = c2 * c2;
  const double R2 = R * R, x2 = x0 * x0, x4 = x2 * x2;

  const double den = R2 * (R2 - 4.0 * x2) * c4 + 2.0 * R2 * x2 * c2 + x4;
  if (std::abs(den) < 1e-14 * R2 * R2 || den <= 0.0)
    throw FormulaSingular("brocard_inellipse_closed_form: vanishing denominator");

  const double ax = l2 * R * (x2 - R2 * c2) * c2 / den;
  BrocardForm out;
  out.center = {x0 + l2 * x0 * (R2 * c2 * std::cos(2.0 * cfg.alpha()) - x2) / den, 0.0};
  out.semi_x = std::abs(ax);
  out.sign_x = ax < 0.0 ? -1 : 1;
  out.semi_y = l2 * R * c2 / std::sqrt(den);
  return out;
}

std::vector<double> degenerate_phases(const PorismConfig& cfg) {
  // dist((x0,0), R cis(t + 2 pi k / N)) = R sin(a)
  // => cos(t + 2 pi k / N) = (R^2 + x0^2 - R^2 sin^2 a) / (2 R x0)
  std::vector<double> out;
  if (cfg.x0 == 0.0) return out;
  const double sa = std::sin(cfg.alpha());
  const double cth = (cfg.big_r * cfg.big_r * (1.0 - sa * sa) + cfg.x0 * cfg.x0) /
                     (2.0 * cfg.big_r * cfg.x0);
  if (std::abs(cth) > 1.0) return out;
  const double base = std::acos(cth);
  for (int k = 0; k < cfg.n; ++k) {
    for (double sgn : {1.0, -1.0}) {
      double t = sgn * base - kTwoPi * k / cfg.n;
      t = std::fmod(std::fmod(t, kTwoPi) + kTwoPi, kTwoPi);
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace porism
