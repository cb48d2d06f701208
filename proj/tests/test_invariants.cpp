#include <doctest.h>

#include "porism/invariants.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace porism;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("half tangent sum basics") {
  SUBCASE("equilateral: 3 tan(30 deg) = sqrt(3)") {
    const PorismConfig cfg = PorismConfig::make(3, 1, 0, 1);
    CHECK(half_tangent_sum(cfg, 0.3, 1) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  }

  SUBCASE("parabola regime: tau = 2") {
    const PorismConfig cfg = PorismConfig::make(3, 1, 1.0 - std::sqrt(3.0) / 2.0, 1);
    for (double t : {0.4, 1.0, 1.8})
      CHECK(half_tangent_sum(cfg, t, 1) == doctest::Approx(2.0).epsilon(1e-10));
  }

  SUBCASE("angle-based equals radius-based with branch signs") {
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const double sa = std::sin(kPi / n);
      const double x0 = (1.0 - sa) + 2.0 * sa * u(rng);  // anywhere, any regime
      PorismConfig cfg;
      try {
        cfg = PorismConfig::make(n, 1.0, x0, 0.8 + u(rng));
      } catch (const GeomError&) {
        continue;
      }
      for (int p = 0; p < 6; ++p) {
        try {
          const SteinerChain ch = chain_at(cfg, 0.05 + 2.0 * kPi / n * p / 6.3);
          double vmax = 0;
          for (const Circle& c : ch.circles) vmax = std::max(vmax, c.center.norm());
          if (vmax > 1e4) continue;
          const auto tans = signed_half_tangents(cfg, ch);
          for (int i = 0; i < n; ++i) {
            const double radius_based =
                ch.caustic.radius * ch.signed_curvature[static_cast<size_t>(i)];
            CHECK(tans[static_cast<size_t>(i)] ==
                  doctest::Approx(radius_based).epsilon(1e-9));
          }
        } catch (const GeomError&) {
        }
      }
    }
  }

  SUBCASE("k out of range is rejected") {
    const PorismConfig cfg = PorismConfig::make(3, 1, 0.05, 1);
    CHECK_THROWS_AS(half_tangent_sum(cfg, 0.1, 0), InvalidConfiguration);
    CHECK_THROWS_AS(half_tangent_sum(cfg, 0.1, 3), InvalidConfiguration);
  }
}

TEST_CASE("half tangent sums are conserved across the sweep") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int regime = 0; regime < 3; ++regime) {
    for (int trial = 0; trial < 4; ++trial) {
      const int n = 3 + (trial + regime) % 6;
      const double sa = std::sin(kPi / n), ca = std::cos(kPi / n);
      double x0 = 0;
      if (regime == 0) x0 = (1.0 - sa) * (0.1 + 0.8 * u(rng));
      if (regime == 1) x0 = 1.0 - sa;
      if (regime == 2) {
        do {
          x0 = (1.0 - sa) + 2.0 * sa * (0.1 + 0.8 * u(rng));
        } while (std::abs(x0 - ca) < 0.02);
      }
      const PorismConfig cfg = PorismConfig::make(n, 1.0, x0, 0.7 + u(rng));
      for (int k = 1; k < n; ++k) {
        const InvariantReport rep = sweep_invariant(
            "half-tangent", cfg, 120, k,
            [&](const SteinerChain& ch) { return half_tangent_sum_of(cfg, ch, k); },
            1e-8);
        CHECK(rep.pass);
        CHECK(rep.samples > 100);
      }
    }
  }
}

TEST_CASE("descartes identity") {
  SUBCASE("symmetric chain") {
    const SteinerChain ch = chain_at(PorismConfig::make(3, 1, 0, 1), 0.77);
    CHECK(descartes_residual(ch) < 1e-12);
  }

  SUBCASE("all three regimes") {
    for (double x0 : {0.06, 1.0 - std::sqrt(3.0) / 2.0, 0.58, 2.3}) {
      const PorismConfig cfg = PorismConfig::make(3, 1, x0, 1.1);
      for (int i = 0; i < 24; ++i) {
        try {
          const SteinerChain ch = chain_at(cfg, 2.0 * kPi / 3 * (i + 0.5) / 24);
          double vmax = 0;
          for (const Circle& c : ch.circles) vmax = std::max(vmax, c.center.norm());
          if (vmax > 1e4) continue;
          CHECK(descartes_residual(ch) < 1e-10);
        } catch (const GeomError&) {
        }
      }
    }
  }

  SUBCASE("N=3 only") {
    const SteinerChain ch = chain_at(PorismConfig::make(4, 1, 0.1, 1), 0.2);
    CHECK_THROWS_AS(descartes_residual(ch), InvalidConfiguration);
  }
}

TEST_CASE("tau equals r over rho") {
  // the half-tangent sum equals the caustic radius times the signed
  // curvature sum of the chain
  for (double x0 : {0.05, 0.45, 2.2}) {
    const PorismConfig cfg = PorismConfig::make(3, 1, x0, 1);
    for (int i = 0; i < 16; ++i) {
      try {
        const SteinerChain ch = chain_at(cfg, 2.0 * kPi / 3 * (i + 0.5) / 16);
        double vmax = 0;
        for (const Circle& c : ch.circles) vmax = std::max(vmax, c.center.norm());
        if (vmax > 1e4) continue;
        const double tau = half_tangent_sum_of(cfg, ch, 1);
        const double rk = ch.caustic.radius * curvature_power_sum(ch, 1);
        CHECK(tau == doctest::Approx(rk).epsilon(1e-10));
      } catch (const GeomError&) {
      }
    }
  }
}

TEST_CASE("pedal cotangent sums") {
  SUBCASE("equilateral values") {
    const Triangle t = Triangle::from_points({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
    const Triangle it = intouch_triangle(t);
    const PedalSums s1 = pedal_cot_sums(t, it, 1);
    CHECK(s1.lhs == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(s1.rhs == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    const PedalSums s2 = pedal_cot_sums(t, it, 2);
    CHECK(s2.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s2.rhs == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("identical and conserved over ellipse-regime sweep") {
    const PorismConfig cfg = PorismConfig::make(3, 1, 0.08, 1);
    double first1 = 0, first2 = 0;
    for (int i = 0; i < 90; ++i) {
      const SteinerChain ch = chain_at(cfg, 2.0 * kPi / 3 * (i + 0.5) / 90);
      const Triangle tri = Triangle::from_points(
          ch.circles[0].center, ch.circles[1].center, ch.circles[2].center);
      const Triangle ped = Triangle::from_points(ch.contacts[0], ch.contacts[1],
                                                 ch.contacts[2]);
      const PedalSums s1 = pedal_cot_sums(tri, ped, 1);
      const PedalSums s2 = pedal_cot_sums(tri, ped, 2);
      CHECK(std::abs(s1.lhs - s1.rhs) < 1e-10);
      CHECK(std::abs(s2.lhs - s2.rhs) < 1e-10);
      if (i == 0) {
        first1 = s1.lhs;
        first2 = s2.lhs;
      } else {
        CHECK(s1.lhs == doctest::Approx(first1).epsilon(1e-10));
        CHECK(s2.lhs == doctest::Approx(first2).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("curvature power sums") {
  SUBCASE("concentric chain is constant trivially") {
    const PorismConfig cfg = PorismConfig::make(4, 1, 0, 1.2);
    const SteinerChain ch = chain_at(cfg, 0.9);
    const double expect = 4.0 / ch.circles[0].radius;
    CHECK(curvature_power_sum(ch, 1) == doctest::Approx(expect).epsilon(1e-12));
  }

  SUBCASE("constant across phases for a generic N=5 config, k=1..4") {
    const PorismConfig cfg = PorismConfig::make(5, 1, 0.35, 1);
    for (int k = 1; k <= 4; ++k) {
      const InvariantReport rep = sweep_invariant(
          "curvature-power", cfg, 360, k,
          [&](const SteinerChain& ch) { return curvature_power_sum(ch, k); }, 1e-9);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("invariant report fields are consistent") {
  const PorismConfig cfg = PorismConfig::make(3, 1, 0.08, 1);
  const InvariantReport rep = sweep_invariant(
      "tau", cfg, 64, 1,
      [&](const SteinerChain& ch) { return half_tangent_sum_of(cfg, ch, 1); }, 1e-8);
  CHECK(rep.name == "tau");
  CHECK(rep.samples == 64);
  CHECK(rep.relative_deviation ==
        doctest::Approx(rep.max_abs_deviation / std::abs(rep.mean)));
  CHECK(rep.pass);
}
