// Accelerated-observer module: parameter maps, wedge expansions, thermal
// reduction, Bogoliubov identities, kinematics.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rqi/fock.hpp"
#include "rqi/rindler.hpp"

using namespace rqi;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(20260817u);
  return gen;
}

double urand(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

}  // namespace

TEST_CASE("squeezing parameter round-trips and hyperbolic identities") {
  SECTION("tanh r = exp(-pi Omega) by direct substitution") {
    for (double omega : {0.05, 0.2206356001526516, 1.0, 3.0, 10.0}) {
      SqueezeParam p = r_from_omega(omega);
      REQUIRE(p.tanh_r() == Catch::Approx(std::exp(-M_PI * omega)).epsilon(1e-12));
      REQUIRE(p.omega() == Catch::Approx(omega).epsilon(1e-12));
    }
  }
  SECTION("cosh^2 - sinh^2 = 1 from recomputed views") {
    for (double r : {1e-3, 0.25, 1.0, 2.5}) {
      SqueezeParam p = SqueezeParam::from_r(r);
      REQUIRE(p.cosh_r() * p.cosh_r() - p.sinh_r() * p.sinh_r() == Catch::Approx(1.0).margin(1e-12));
      REQUIRE(p.cosh_r() == Catch::Approx(1.0 / std::sqrt(1.0 - std::exp(-2.0 * M_PI * p.omega())))
                                .epsilon(1e-12));
    }
  }
  SECTION("tanh r = 1/2 requires Omega = ln 2 / pi") {
    SqueezeParam p = r_from_omega(std::log(2.0) / M_PI);
    REQUIRE(p.r() == Catch::Approx(0.5493061443340548).epsilon(1e-13));
    REQUIRE(p.tanh_r() == Catch::Approx(0.5).epsilon(1e-13));
  }
  SECTION("large Omega limit collapses to inertial") {
    REQUIRE(r_from_omega(50.0).r() < 1e-60);
    REQUIRE(r_from_omega(50.0).r() > 0.0);
  }
  SECTION("domain errors") {
    REQUIRE_THROWS_AS(r_from_omega(0.0), DomainError);
    REQUIRE_THROWS_AS(r_from_omega(-1.0), DomainError);
    REQUIRE_THROWS_AS(SqueezeParam::from_r(-0.1), DomainError);
    REQUIRE_THROWS_AS(SqueezeParam::from_r(std::nan("")), DomainError);
  }
}

TEST_CASE("physical parameter construction") {
  SECTION("Omega = omega_R c / a and full round-trip") {
    const double omega_r = 2.0 * M_PI * 1.0e3;  // 1 kHz mode
    const double a = omega_r * kSpeedOfLight;   // makes Omega = 1
    SqueezeParam p = r_from_physical(omega_r, a);
    REQUIRE(p.omega() == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(p.omega_r().value() == omega_r);
    REQUIRE(p.acceleration().value() == a);
    REQUIRE_FALSE(p.underflowed());
  }
  SECTION("small-r branch matches r ~ exp(-pi Omega) to relative r^2") {
    for (double omega : {2.0, 3.0, 5.0}) {
      SqueezeParam p = r_from_omega(omega);
      const double approx = std::exp(-M_PI * omega);
      REQUIRE(std::abs(p.r() - approx) / p.r() <= p.r() * p.r());
    }
  }
  SECTION("r = 1e-3 needs omega_R/(a/c) near 2.199") {
    const double exact = -std::log(std::tanh(1e-3)) / M_PI;
    REQUIRE(r_from_omega(exact).r() == Catch::Approx(1e-3).epsilon(1e-12));
    // the r ~ tanh r approximation puts it at -ln(1e-3)/pi, off only at O(r^2)
    const double approx = -std::log(1e-3) / M_PI;
    REQUIRE(approx == Catch::Approx(2.198806796638283).epsilon(1e-12));
    REQUIRE(std::abs(exact - approx) / exact < 1e-6);
  }
  SECTION("laboratory accelerations underflow to exactly zero and say so") {
    // a = 10 m/s^2, optical mode: Omega ~ 1e22, exp(-pi Omega) flushes to 0.
    SqueezeParam p = r_from_physical(2.83e15, 10.0);
    REQUIRE(p.r() == 0.0);
    REQUIRE(p.underflowed());
  }
  SECTION("nonpositive inputs rejected") {
    REQUIRE_THROWS_AS(r_from_physical(0.0, 1.0), DomainError);
    REQUIRE_THROWS_AS(r_from_physical(1.0, 0.0), DomainError);
    REQUIRE_THROWS_AS(r_from_physical(1.0, -9.8), DomainError);
  }
}

TEST_CASE("thermal temperature of the accelerated vacuum") {
  SECTION("linear in acceleration") {
    const double t1 = unruh_temperature(5.0);
    REQUIRE(unruh_temperature(10.0) == Catch::Approx(2.0 * t1).epsilon(1e-15));
  }
  SECTION("inverting for 1 kelvin") {
    const double a = 2.0 * M_PI * kSpeedOfLight * kBoltzmann / kReducedPlanck;
    REQUIRE(a == Catch::Approx(2.4660830214026107e+20).epsilon(1e-12));
    REQUIRE(unruh_temperature(a) == Catch::Approx(1.0).epsilon(1e-12));
  }
  SECTION("earth-surface acceleration is astronomically cold") {
    REQUIRE(unruh_temperature(9.8) == Catch::Approx(3.973913252290326e-20).epsilon(1e-12));
  }
  SECTION("attached to physical parameters") {
    SqueezeParam p = r_from_physical(1.0e3, 9.8);
    REQUIRE(p.unruh_temperature_kelvin().value() ==
            Catch::Approx(3.973913252290326e-20).epsilon(1e-12));
    REQUIRE_FALSE(SqueezeParam::from_r(1.0).unruh_temperature_kelvin().has_value());
  }
  SECTION("nonpositive rejected") {
    REQUIRE_THROWS_AS(unruh_temperature(0.0), DomainError);
    REQUIRE_THROWS_AS(unruh_temperature(-1.0), DomainError);
  }
}

TEST_CASE("cutoff selection from the geometric tail") {
  SECTION("smallest N with tanh^{2N} r below the target, clamped") {
    REQUIRE(cutoff_for(0.0) == kMinCutoff);
    REQUIRE(cutoff_for(1e-3) == kMinCutoff);  // rule wants 2, clamp floors at 8
    REQUIRE(cutoff_for(0.25) == 10);
    REQUIRE(cutoff_for(0.5) == 18);
    REQUIRE(cutoff_for(1.0) == 51);
    REQUIRE(cutoff_for(2.0) == 378);
    REQUIRE(cutoff_for(3.0) == kMaxCutoff);  // rule wants 2787, clamp caps
  }
  SECTION("returned cutoff actually meets the bound where unclamped") {
    for (double r : {0.25, 0.5, 1.0, 2.0}) {
      const int n = cutoff_for(r);
      const double q = std::tanh(r) * std::tanh(r);
      REQUIRE(std::pow(q, n) <= 1e-12);
      if (n > kMinCutoff) REQUIRE(std::pow(q, n - 1) > 1e-12);
    }
  }
  SECTION("custom tail target") {
    const int loose = cutoff_for(1.0, 1e-6);
    const int tight = cutoff_for(1.0, 1e-15);
    REQUIRE(loose < cutoff_for(1.0));
    REQUIRE(tight > cutoff_for(1.0));
    REQUIRE(std::pow(std::tanh(1.0), 2 * tight) <= 1e-15);
  }
  SECTION("saturated tanh still terminates") {
    REQUIRE(cutoff_for(30.0) == kMaxCutoff);
    REQUIRE(cutoff_for(800.0) == kMaxCutoff);
  }
  SECTION("bad inputs") {
    REQUIRE_THROWS_AS(cutoff_for(-1.0), DomainError);
    REQUIRE_THROWS_AS(cutoff_for(1.0, 0.0), DomainError);
    REQUIRE_THROWS_AS(cutoff_for(1.0, 1.0), DomainError);
  }
}

TEST_CASE("squeezed vacuum expansion of the inertial vacuum") {
  SECTION("r = 0 gives the joint ground state exactly") {
    TruncatedKet tk = squeezed_vacuum(SqueezeParam::from_r(0.0), 8);
    REQUIRE(tk.ket.amplitudes()[tk.ket.flat_index({0, 0})] == Complex(1.0, 0.0));
    REQUIRE(tk.ket.squared_norm() == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(tk.tail_weight == 0.0);
    REQUIRE(tk.renormalization == Catch::Approx(1.0).margin(1e-15));
  }
  SECTION("amplitudes are tanh^n r / cosh r on the diagonal tuples") {
    const SqueezeParam p = SqueezeParam::from_r(1.0);
    TruncatedKet tk = squeezed_vacuum(p, 40);
    const double scale = tk.renormalization / p.cosh_r();
    for (int n = 0; n < 40; ++n) {
      const Complex a = tk.ket.amplitudes()[tk.ket.flat_index({n, n})];
      REQUIRE(a.real() == Catch::Approx(scale * std::pow(p.tanh_r(), n)).epsilon(1e-12));
      REQUIRE(a.imag() == 0.0);
    }
    // off-diagonal tuples carry nothing
    REQUIRE(std::abs(tk.ket.amplitudes()[tk.ket.flat_index({1, 0})]) == 0.0);
    REQUIRE(std::abs(tk.ket.amplitudes()[tk.ket.flat_index({3, 7})]) == 0.0);
  }
  SECTION("tail weight is the geometric remainder, matching the discarded sum") {
    const SqueezeParam p = SqueezeParam::from_r(1.0);
    TruncatedKet tk = squeezed_vacuum(p, 40);
    REQUIRE(tk.tail_weight == Catch::Approx(3.4505492352438856e-10).epsilon(1e-12));
    // independently: sum of |tanh^n / cosh|^2 over n >= 40
    double discarded = 0.0;
    for (int n = 40; n < 400; ++n)
      discarded += std::pow(p.tanh_r(), 2 * n) / (p.cosh_r() * p.cosh_r());
    REQUIRE(tk.tail_weight == Catch::Approx(discarded).epsilon(1e-10));
    // renormalization restores unit norm from the kept weight 1 - tail
    REQUIRE(tk.ket.squared_norm() == Catch::Approx(1.0).margin(1e-14));
    REQUIRE(tk.renormalization == Catch::Approx(1.0 / std::sqrt(1.0 - tk.tail_weight)).epsilon(1e-12));
  }
  SECTION("cutoff below 2 rejected") {
    REQUIRE_THROWS_AS(squeezed_vacuum(SqueezeParam::from_r(1.0), 1), DomainError);
  }
}

TEST_CASE("one-particle expansion built two independent ways") {
  SECTION("r = 0 reduces to |1, 0>") {
    TruncatedKet tk = minkowski_one_particle(SqueezeParam::from_r(0.0), 8);
    REQUIRE(std::abs(tk.ket.amplitudes()[tk.ket.flat_index({1, 0})] - Complex(1.0, 0.0)) < 1e-15);
    REQUIRE(tk.tail_weight == Catch::Approx(0.0).margin(1e-300));
  }
  SECTION("closed form vs ladder construction, elementwise") {
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
      const SqueezeParam p = SqueezeParam::from_r(r);
      const int cutoff = cutoff_for(r);
      TruncatedKet direct = minkowski_one_particle(p, cutoff);
      TruncatedKet laddered = minkowski_one_particle_ladder(p, cutoff);
      REQUIRE(direct.ket.modes() == laddered.ket.modes());
      const double diff =
          (direct.ket.amplitudes() - laddered.ket.amplitudes()).cwiseAbs().maxCoeff();
      REQUIRE(diff <= 1e-12);
    }
  }
  SECTION("amplitude law sqrt(n+1) tanh^n r / cosh^2 r on (n+1, n)") {
    const SqueezeParam p = SqueezeParam::from_r(0.75);
    TruncatedKet tk = minkowski_one_particle(p, 30);
    const double scale = tk.renormalization / (p.cosh_r() * p.cosh_r());
    for (int n = 0; n + 1 < 30; ++n) {
      const Complex a = tk.ket.amplitudes()[tk.ket.flat_index({n + 1, n})];
      REQUIRE(a.real() ==
              Catch::Approx(scale * std::sqrt(n + 1.0) * std::pow(p.tanh_r(), n)).epsilon(1e-12));
    }
  }
  SECTION("tail weight matches the directly summed discarded weight") {
    const SqueezeParam p = SqueezeParam::from_r(1.0);
    const int cutoff = 40;
    TruncatedKet tk = minkowski_one_particle(p, cutoff);
    double discarded = 0.0;
    const double c4 = std::pow(p.cosh_r(), 4);
    for (int n = cutoff - 1; n < 500; ++n)
      discarded += (n + 1.0) * std::pow(p.tanh_r(), 2 * n) / c4;
    REQUIRE(tk.tail_weight == Catch::Approx(discarded).epsilon(1e-10));
  }
  SECTION("orthogonal to the vacuum expansion") {
    const SqueezeParam p = SqueezeParam::from_r(1.2);
    TruncatedKet vac = squeezed_vacuum(p, 32);
    TruncatedKet one = minkowski_one_particle(p, 32);
    REQUIRE(std::abs(inner(vac.ket, one.ket)) < 1e-15);
  }
}

TEST_CASE("thermal reduced state on the observable wedge") {
  SECTION("r = 0 is the ground-state projector") {
    DensityOp rho = thermal_vacuum(SqueezeParam::from_r(0.0), 6);
    REQUIRE(std::abs(rho.matrix()(0, 0) - Complex(1.0, 0.0)) < 1e-15);
    for (int n = 1; n < 6; ++n) REQUIRE(std::abs(rho.matrix()(n, n)) == 0.0);
  }
  SECTION("geometric weights (1-q) q^n, renormalized over the truncation") {
    const SqueezeParam p = SqueezeParam::from_r(0.8);
    const int cutoff = 24;
    DensityOp rho = thermal_vacuum(p, cutoff);
    const double q = p.tanh_r() * p.tanh_r();
    const double norm = (1.0 - q) / (1.0 - std::pow(q, cutoff));
    for (int n = 0; n < cutoff; ++n)
      REQUIRE(rho.matrix()(n, n).real() == Catch::Approx(norm * std::pow(q, n)).epsilon(1e-12));
    REQUIRE(rho.trace_real() == Catch::Approx(1.0).margin(1e-14));
  }
  SECTION("equals the reduced state of the vacuum expansion") {
    // reduced_density contracts without materializing the rank-1 operator,
    // so rule-selected cutoffs stay cheap
    for (double r : {0.25, 0.7, 1.5}) {
      const SqueezeParam p = SqueezeParam::from_r(r);
      const int cutoff = cutoff_for(r);
      DensityOp direct = thermal_vacuum(p, cutoff);
      DensityOp traced = reduced_density(squeezed_vacuum(p, cutoff).ket, {kRegionI});
      REQUIRE((direct.matrix() - traced.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    }
    // explicit outer-product route once, at a size where it is affordable
    const SqueezeParam p = SqueezeParam::from_r(0.7);
    DensityOp traced = partial_trace(outer(squeezed_vacuum(p, 20).ket), {kRegionI});
    REQUIRE((thermal_vacuum(p, 20).matrix() - traced.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SECTION("mean occupation approaches sinh^2 r") {
    const SqueezeParam p = SqueezeParam::from_r(1.0);
    const int cutoff = cutoff_for(1.0);
    DensityOp rho = thermal_vacuum(p, cutoff);
    double mean = 0.0;
    for (int n = 0; n < cutoff; ++n) mean += n * rho.matrix()(n, n).real();
    REQUIRE(mean == Catch::Approx(p.sinh_r() * p.sinh_r()).margin(1e-8));
  }
}

TEST_CASE("composite annihilator nearly kills the truncated vacuum expansion") {
  SECTION("r = 0 is annihilated exactly") {
    REQUIRE(unruh_annihilator_defect(SqueezeParam::from_r(0.0), 8) == 0.0);
  }
  SECTION("defect at r = 0.5, cutoff 40 is tiny and matches the analytic value") {
    const SqueezeParam p = SqueezeParam::from_r(0.5);
    const double defect = unruh_annihilator_defect(p, 40);
    REQUIRE(defect <= 1e-10);
    REQUIRE(defect == Catch::Approx(2.461011931839076e-13).epsilon(1e-6));
    // the residual IS the severed top rung; the cancelling lower rungs leave
    // quadrature rounding junk of order eps * sinh * cosh on top of it
    REQUIRE(defect <= annihilator_defect_bound(p, 40) * (1.0 + 1e-6));
  }
  SECTION("defect is bounded by the analytic tail and nonincreasing in cutoff") {
    // past cutoff ~50 at r = 0.5 the true residual sinks below the rounding
    // noise of the cancelled rungs, so the comparisons carry a small floor
    const SqueezeParam p = SqueezeParam::from_r(0.5);
    const double floor = 1e-14;
    double prev = 1.0;
    for (int cutoff = 10; cutoff <= 60; cutoff += 5) {
      const double d = unruh_annihilator_defect(p, cutoff);
      const double bound = annihilator_defect_bound(p, cutoff);
      REQUIRE(d <= bound * (1.0 + 1e-6) + floor);
      if (bound > 1e-12) REQUIRE(d == Catch::Approx(bound).epsilon(1e-6));
      REQUIRE(d <= prev * (1.0 + 1e-6) + floor);
      prev = d;
    }
  }
  SECTION("bound holds across moderate squeezing at rule-selected cutoffs") {
    for (double r : {0.1, 0.5, 1.0, 1.5, 2.0}) {
      const SqueezeParam p = SqueezeParam::from_r(r);
      const int cutoff = cutoff_for(r);
      REQUIRE(unruh_annihilator_defect(p, cutoff) <=
              annihilator_defect_bound(p, cutoff) * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("proper-time phase rotation") {
  const SqueezeParam p = SqueezeParam::from_r(0.6);
  SECTION("tau = 0 is the identity") {
    TruncatedKet tk = minkowski_one_particle(p, 16);
    FockKet out = apply_proper_time_phase(tk.ket, p, 0.0);
    REQUIRE((out.amplitudes() - tk.ket.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("vacuum expansion is invariant: its support is diagonal") {
    TruncatedKet tk = squeezed_vacuum(p, 16);
    FockKet out = apply_proper_time_phase(tk.ket, p, 3.7);
    REQUIRE((out.amplitudes() - tk.ket.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("one-particle expansion picks up one uniform phase") {
    TruncatedKet tk = minkowski_one_particle(p, 16);
    const double tau = 1.3;
    FockKet out = apply_proper_time_phase(tk.ket, p, tau);
    const Complex expected = std::polar(1.0, -p.omega() * tau);
    for (Eigen::Index i = 0; i < tk.ket.dim(); ++i) {
      const Complex a = tk.ket.amplitudes()[i];
      if (std::abs(a) == 0.0) continue;
      REQUIRE(std::abs(out.amplitudes()[i] - expected * a) < 1e-15);
    }
    REQUIRE(out.squared_norm() == Catch::Approx(tk.ket.squared_norm()).margin(1e-14));
  }
  SECTION("inertial limit is the identity even at nonzero tau") {
    TruncatedKet tk = minkowski_one_particle(SqueezeParam::from_r(0.0), 8);
    FockKet out = apply_proper_time_phase(tk.ket, SqueezeParam::from_r(0.0), 2.0);
    REQUIRE((out.amplitudes() - tk.ket.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("missing wedge modes rejected") {
    FockKet k({{4, "Solo"}});
    REQUIRE_THROWS_AS(apply_proper_time_phase(k, p, 1.0), IndexError);
  }
}

TEST_CASE("hyperbolic worldline and wedge charts") {
  SECTION("tau = 0 sits at (0, 1/a), the closest approach") {
    WorldlineEvent e = worldline(2.0, 0.0);
    REQUIRE(e.t == 0.0);
    REQUIRE(e.z == Catch::Approx(0.5).epsilon(1e-15));
    REQUIRE(e.eta == 0.0);
    REQUIRE(e.zeta == Catch::Approx(0.5).epsilon(1e-15));
  }
  SECTION("an inertial sender at the closest-approach point crosses the horizon at t = 1/a") {
    // future horizon is the null line t = z; a static observer at z = 1/a meets it then
    const double a = 3.0;
    WorldlineEvent e = worldline(a, 0.0);
    REQUIRE(e.z == Catch::Approx(1.0 / a).epsilon(1e-15));  // crossing time equals e.z
  }
  SECTION("z^2 - t^2 = 1/a^2 along the worldline, moderate rapidity") {
    for (double a : {0.5, 1.0, 4.0}) {
      for (double tau = -4.0 / a; tau <= 4.0 / a; tau += 0.5 / a) {
        WorldlineEvent e = worldline(a, tau);
        const double lhs = (e.z - e.t) * (e.z + e.t);
        REQUIRE(lhs == Catch::Approx(1.0 / (a * a)).epsilon(1e-12));
      }
    }
  }
  SECTION("chart round-trip, strict tolerance at moderate rapidity") {
    for (int trial = 0; trial < 200; ++trial) {
      const double eta = urand(-4.0, 4.0);
      const double zeta = urand(0.05, 20.0);
      auto [t, z] = rindler_to_minkowski(eta, zeta);
      auto [eta2, zeta2] = minkowski_to_rindler(t, z);
      REQUIRE(std::abs(eta2 - eta) <= 1e-12 * std::max(1.0, std::abs(eta)));
      REQUIRE(std::abs(zeta2 - zeta) <= 1e-12 * zeta);
    }
  }
  SECTION("chart round-trip at high rapidity, precision-scaled tolerance") {
    // recovering zeta from (t, z) cancels catastrophically: the achievable
    // relative error grows like eps * e^{2|eta|}
    for (double eta : {6.0, 10.0, 15.0}) {
      const double zeta = 1.7;
      auto [t, z] = rindler_to_minkowski(eta, zeta);
      auto [eta2, zeta2] = minkowski_to_rindler(t, z);
      const double budget =
          std::max(1e-12, 8.0 * std::numeric_limits<double>::epsilon() * std::exp(2.0 * eta));
      REQUIRE(std::abs(zeta2 - zeta) / zeta <= budget);
      REQUIRE(std::abs(eta2 - eta) <= budget * std::max(1.0, eta));
    }
  }
  SECTION("beyond eta ~ 18 the forward images merge in double precision") {
    // e^{-2 eta} drops below machine epsilon, so t and z agree to the ulp:
    // the wedge separation z - t is no longer representable and no inverse
    // can recover zeta
    auto [t, z] = rindler_to_minkowski(20.0, 1.7);
    REQUIRE(z - t <= 4.0 * std::numeric_limits<double>::epsilon() * z);
  }
  SECTION("minkowski chart direction is stable everywhere") {
    // (t, z) -> (eta, zeta) -> (t, z) holds to a few ulp even at high rapidity
    for (int trial = 0; trial < 200; ++trial) {
      const double z = urand(0.1, 50.0);
      const double t = z * urand(-0.999999, 0.999999);
      auto [eta, zeta] = minkowski_to_rindler(t, z);
      auto [t2, z2] = rindler_to_minkowski(eta, zeta);
      REQUIRE(std::abs(t2 - t) <= 1e-12 * std::max(1.0, std::abs(t)));
      REQUIRE(std::abs(z2 - z) <= 1e-12 * z);
    }
  }
  SECTION("constant-zeta curves are hyperbolae z^2 - t^2 = zeta^2") {
    const double zeta = 2.5;
    for (double eta = -3.0; eta <= 3.0; eta += 0.375) {
      auto [t, z] = rindler_to_minkowski(eta, zeta);
      REQUIRE((z - t) * (z + t) == Catch::Approx(zeta * zeta).epsilon(1e-12));
    }
  }
  SECTION("identity at eta = 0") {
    auto [t, z] = rindler_to_minkowski(0.0, 3.25);
    REQUIRE(t == 0.0);
    REQUIRE(z == 3.25);
  }
  SECTION("chart domain errors") {
    REQUIRE_THROWS_AS(rindler_to_minkowski(1.0, 0.0), DomainError);
    REQUIRE_THROWS_AS(rindler_to_minkowski(1.0, -2.0), DomainError);
    REQUIRE_THROWS_AS(minkowski_to_rindler(2.0, 1.0), DomainError);   // past horizon
    REQUIRE_THROWS_AS(minkowski_to_rindler(1.0, 1.0), DomainError);   // on the horizon
    REQUIRE_THROWS_AS(minkowski_to_rindler(0.0, -1.0), DomainError);  // left wedge
    REQUIRE_THROWS_AS(worldline(0.0, 1.0), DomainError);
    REQUIRE_THROWS_AS(worldline(-1.0, 1.0), DomainError);
  }
}
