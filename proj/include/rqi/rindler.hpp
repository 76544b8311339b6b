// rindler.hpp
// Uniformly accelerated observer: worldline kinematics, the acceleration ->
// squeezing parameter map, and the two-mode squeezed expansions of inertial
// states over the left/right Rindler wedge mode pair.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "rqi/constants.hpp"
#include "rqi/fock.hpp"

namespace rqi {

// Labels of the wedge mode pair every expansion below lives on.
inline const std::string kRegionI = "RegionI";
inline const std::string kRegionII = "RegionII";

// Acceleration-induced squeezing. Canonical parameter is r >= 0; the
// dimensionless frequency Omega obeys tanh r = exp(-pi Omega) and is derived
// on demand (it diverges at r = 0). Physical anchors (mode frequency in
// rad/s, proper acceleration in m/s^2) are carried only when the parameter
// was built from them; r alone fixes just their ratio.
class SqueezeParam {
 public:
  static SqueezeParam from_r(double r) {
    if (!(r >= 0.0) || !std::isfinite(r))
      throw DomainError("squeezing parameter must satisfy r >= 0, got " + std::to_string(r));
    return SqueezeParam(r);
  }

  double r() const { return r_; }
  double tanh_r() const { return std::tanh(r_); }
  double cosh_r() const { return std::cosh(r_); }
  double sinh_r() const { return std::sinh(r_); }

  // Dimensionless frequency omega_R / (a/c); +infinity at r = 0.
  double omega() const { return -std::log(std::tanh(r_)) / M_PI; }

  // True when a physical-parameter construction underflowed to exactly r = 0.
  bool underflowed() const { return underflowed_; }

  std::optional<double> omega_r() const { return omega_r_; }        // rad/s
  std::optional<double> acceleration() const { return accel_; }     // m/s^2

  std::optional<double> unruh_temperature_kelvin() const;

 private:
  friend SqueezeParam r_from_omega(double);
  friend SqueezeParam r_from_physical(double, double);

  explicit SqueezeParam(double r) : r_(r) {}

  double r_ = 0.0;
  std::optional<double> omega_r_;
  std::optional<double> accel_;
  bool underflowed_ = false;
};

// Invert tanh r = exp(-pi Omega). Underflow of the exponential (huge Omega)
// flushes r to exactly 0 and sets the flag.
inline SqueezeParam r_from_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw DomainError("dimensionless frequency must satisfy Omega > 0, got " +
                      std::to_string(omega));
  const double tanh_r = std::exp(-M_PI * omega);
  SqueezeParam p(std::atanh(tanh_r));
  p.underflowed_ = (tanh_r == 0.0);
  return p;
}

// Squeezing for a mode of frequency omega_R seen by an observer with proper
// acceleration a: Omega = omega_R / (a/c).
inline SqueezeParam r_from_physical(double omega_r, double acceleration) {
  if (!(omega_r > 0.0) || !std::isfinite(omega_r))
    throw DomainError("mode frequency must be positive, got " + std::to_string(omega_r));
  if (!(acceleration > 0.0) || !std::isfinite(acceleration))
    throw DomainError("acceleration must be positive, got " + std::to_string(acceleration));
  SqueezeParam p = r_from_omega(omega_r * kSpeedOfLight / acceleration);
  p.omega_r_ = omega_r;
  p.accel_ = acceleration;
  return p;
}

// T_U = hbar a / (2 pi c k_B).
inline double unruh_temperature(double acceleration) {
  if (!(acceleration > 0.0) || !std::isfinite(acceleration))
    throw DomainError("acceleration must be positive, got " + std::to_string(acceleration));
  return kReducedPlanck * acceleration / (2.0 * M_PI * kSpeedOfLight * kBoltzmann);
}

inline std::optional<double> SqueezeParam::unruh_temperature_kelvin() const {
  if (!accel_) return std::nullopt;
  return unruh_temperature(*accel_);
}

inline constexpr int kMinCutoff = 8;
inline constexpr int kMaxCutoff = 1024;

// Smallest cutoff whose discarded squeezed-vacuum tail tanh^{2N} r is at most
// eps, clamped to [kMinCutoff, kMaxCutoff].
inline int cutoff_for(double r, double eps = 1e-12) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("cutoff_for requires r >= 0");
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("tail target must lie in (0, 1)");
  int n = kMinCutoff;
  const double q = std::tanh(r) * std::tanh(r);
  if (q >= 1.0) return kMaxCutoff;  // tanh saturated in floating point
  if (q > 0.0) {
    double want = std::ceil(std::log(eps) / std::log(q));
    if (want > double(kMaxCutoff)) return kMaxCutoff;
    n = std::max(1, static_cast<int>(want));
    while (n > 1 && std::pow(q, n - 1) <= eps) --n;  // guard ceil rounding
    while (std::pow(q, n) > eps) ++n;
  }
  return std::clamp(n, kMinCutoff, kMaxCutoff);
}

inline int cutoff_for(const SqueezeParam& p, double eps = 1e-12) { return cutoff_for(p.r(), eps); }

// Truncated two-mode expansion: the ket, the exact discarded probability
// weight, and the factor the surviving amplitudes were scaled by to restore
// unit norm.
struct TruncatedKet {
  FockKet ket;
  double tail_weight = 0.0;
  double renormalization = 1.0;
};

namespace detail {

inline std::vector<ModeSpec> wedge_modes(int cutoff) {
  if (cutoff < 2) throw DomainError("wedge expansions need cutoff >= 2");
  return {{cutoff, kRegionI}, {cutoff, kRegionII}};
}

}  // namespace detail

// Inertial vacuum as seen from the accelerated frame: amplitude
// tanh^n(r)/cosh(r) on the diagonal tuple (n, n). Discarded tail is the
// geometric remainder tanh^{2N} r.
inline TruncatedKet squeezed_vacuum(const SqueezeParam& p, int cutoff) {
  FockKet k(detail::wedge_modes(cutoff));
  const double t = p.tanh_r();
  double amp = 1.0 / p.cosh_r();
  for (int n = 0; n < cutoff; ++n) {
    k.amplitudes()[k.flat_index({n, n})] = amp;
    amp *= t;
  }
  const double tail = std::pow(t * t, cutoff);
  const double factor = k.normalize();
  return TruncatedKet{std::move(k), tail, factor};
}

// Inertial one-particle state: amplitude sqrt(n+1) tanh^n(r)/cosh^2(r) on
// (n+1, n). Tail is the remainder of sum (n+1) q^n (1-q)^2 from n = N-1.
inline TruncatedKet minkowski_one_particle(const SqueezeParam& p, int cutoff) {
  FockKet k(detail::wedge_modes(cutoff));
  const double t = p.tanh_r();
  const double q = t * t;
  double geom = 1.0 / (p.cosh_r() * p.cosh_r());
  for (int n = 0; n + 1 < cutoff; ++n) {
    k.amplitudes()[k.flat_index({n + 1, n})] = std::sqrt(double(n) + 1.0) * geom;
    geom *= t;
  }
  const int m = cutoff - 1;
  const double tail = std::pow(q, m) * (double(m) * (1.0 - q) + 1.0);
  const double factor = k.normalize();
  return TruncatedKet{std::move(k), tail, factor};
}

// Same state built by the mode-mixing route: apply
// cosh(r) create_I - sinh(r) annihilate_II to the squeezed vacuum. Agrees
// with the closed form elementwise; creation at the top level truncates.
inline TruncatedKet minkowski_one_particle_ladder(const SqueezeParam& p, int cutoff) {
  const TruncatedKet vac = squeezed_vacuum(p, cutoff);
  const LadderResult raised = apply_ladder(vac.ket, kRegionI, Ladder::create);
  const LadderResult lowered = apply_ladder(vac.ket, kRegionII, Ladder::annihilate);
  FockKet k = Complex(p.cosh_r(), 0.0) * raised.ket - Complex(p.sinh_r(), 0.0) * lowered.ket;
  const double before = k.squared_norm();
  const double factor = k.normalize();
  return TruncatedKet{std::move(k), std::max(0.0, 1.0 - before), factor};
}

// Reduced state of the squeezed vacuum on region I: diagonal geometric
// weights (1-q) q^n with q = tanh^2 r, renormalized over the truncated
// ladder. Mean occupation converges to sinh^2 r.
inline DensityOp thermal_vacuum(const SqueezeParam& p, int cutoff) {
  if (cutoff < 2) throw DomainError("thermal_vacuum needs cutoff >= 2");
  DensityOp rho({{cutoff, kRegionI}});
  const double q = p.tanh_r() * p.tanh_r();
  double w = 1.0;  // q^n, filled before the (1-q) prefactor
  double sum = 0.0;
  for (int n = 0; n < cutoff; ++n) {
    rho.matrix()(n, n) = w;
    sum += w;
    w *= q;
  }
  rho.matrix() /= sum;  // equals multiplying by (1-q)/(1-q^N)
  return rho;
}

// Residual norm of (cosh r annihilate_I - sinh r create_II) applied to the
// truncated squeezed vacuum. The region-II mode is padded by one level so
// the top-rung image survives instead of being silently truncated; the
// residual is exactly the severed rung, sqrt(N) tanh^N r / sqrt(1 - tanh^{2N} r).
inline double unruh_annihilator_defect(const SqueezeParam& p, int cutoff) {
  const TruncatedKet vac = squeezed_vacuum(p, cutoff);
  const FockKet padded = pad_mode(vac.ket, kRegionII, cutoff + 1);
  const LadderResult lowered = apply_ladder(padded, kRegionI, Ladder::annihilate);
  const LadderResult raised = apply_ladder(padded, kRegionII, Ladder::create);
  const FockKet defect =
      Complex(p.cosh_r(), 0.0) * lowered.ket - Complex(p.sinh_r(), 0.0) * raised.ket;
  return defect.norm();
}

// Analytic value of the defect above; the tests pin the two against each other.
inline double annihilator_defect_bound(const SqueezeParam& p, int cutoff) {
  const double t = p.tanh_r();
  if (t == 0.0) return 0.0;
  const double top = std::sqrt(double(cutoff)) * std::pow(t, cutoff);
  return top / std::sqrt(1.0 - std::pow(t, 2 * cutoff));
}

// Free evolution in the accelerated frame for dimensionless proper time tau:
// each (n_I, n_II) amplitude picks up exp(-i Omega (n_I - n_II) tau). At
// r = 0 the chart degenerates (Omega diverges, tau -> 0); the map is defined
// as the identity there, and no downstream observable depends on the phase.
inline FockKet apply_proper_time_phase(const FockKet& k, const SqueezeParam& p, double tau) {
  if (!std::isfinite(tau)) throw DomainError("proper time must be finite");
  const int i_mode = k.mode_index(kRegionI);
  const int ii_mode = k.mode_index(kRegionII);
  const double omega = p.omega();
  if (tau == 0.0 || !std::isfinite(omega)) return k;

  FockKet out = k;
  const Eigen::Index si = k.stride(i_mode), sii = k.stride(ii_mode);
  const int ci = k.modes()[static_cast<std::size_t>(i_mode)].cutoff;
  const int cii = k.modes()[static_cast<std::size_t>(ii_mode)].cutoff;
  for (Eigen::Index idx = 0; idx < k.dim(); ++idx) {
    const int ni = static_cast<int>((idx / si) % ci);
    const int nii = static_cast<int>((idx / sii) % cii);
    if (ni == nii) continue;
    out.amplitudes()[idx] *= std::polar(1.0, -omega * double(ni - nii) * tau);
  }
  return out;
}

// Hyperbolic worldline of a uniformly accelerated observer, c = 1:
// t = sinh(a tau)/a, z = cosh(a tau)/a, so z^2 - t^2 = 1/a^2. eta/zeta are
// the Rindler coordinates of the same event.
struct WorldlineEvent {
  double tau = 0.0;
  double t = 0.0;
  double z = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
};

inline WorldlineEvent worldline(double acceleration, double tau) {
  if (!(acceleration > 0.0) || !std::isfinite(acceleration))
    throw DomainError("worldline acceleration must be positive");
  WorldlineEvent e;
  e.tau = tau;
  e.eta = acceleration * tau;
  e.zeta = 1.0 / acceleration;
  e.t = std::sinh(e.eta) / acceleration;
  e.z = std::cosh(e.eta) / acceleration;
  return e;
}

// (eta, zeta) -> (t, z) with t = zeta sinh eta, z = zeta cosh eta.
inline std::pair<double, double> rindler_to_minkowski(double eta, double zeta) {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw DomainError("zeta must be positive (right wedge)");
  return {zeta * std::sinh(eta), zeta * std::cosh(eta)};
}

// Inverse chart on the right wedge z > |t|. zeta uses the factored product
// to avoid squaring; eta = asinh(t/zeta) is stable where the doubles are.
inline std::pair<double, double> minkowski_to_rindler(double t, double z) {
  if (!(z > std::abs(t)))
    throw DomainError("event (t = " + std::to_string(t) + ", z = " + std::to_string(z) +
                      ") lies outside the right wedge z > |t|");
  const double zeta = std::sqrt((z - t) * (z + t));
  return {std::asinh(t / zeta), zeta};
}

}  // namespace rqi
