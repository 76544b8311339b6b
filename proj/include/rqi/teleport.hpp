// teleport.hpp
// Continuous-variable teleportation from an inertial sender to a uniformly
// accelerated receiver. Produces the receiver's conditional state two
// independent ways (closed-form band matrix vs full protocol pipeline) and
// the fidelity two independent ways (closed form vs trace form).
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "rqi/fock.hpp"
#include "rqi/rindler.hpp"

namespace rqi {

// Sender-side qubit modes. Both are hard two-level modes; the receiver's
// half of the entangled resource lives on the RegionI/RegionII pair.
inline const std::string kAliceIn = "AliceIn";
inline const std::string kAliceBell = "AliceBell";

// Normalized single-qubit input alpha |0> + beta |1>.
struct InputState {
  Complex alpha;
  Complex beta;

  InputState(Complex a, Complex b) : alpha(a), beta(b) {
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1.0) > 1e-12)
      throw DomainError("input state must be normalized: |alpha|^2 + |beta|^2 = " +
                        std::to_string(n2));
  }

  static InputState from_angle(double theta) {
    return InputState(Complex(std::cos(theta), 0.0), Complex(std::sin(theta), 0.0));
  }
};

// Conditional coefficients (x, y) of the receiver-side superposition for
// measurement record (l, m), before any correction operation.
struct OutcomeCoeffs {
  int l = 0;
  int m = 0;
  Complex x;
  Complex y;

  static OutcomeCoeffs from_xy(int l, int m, Complex x, Complex y) {
    if ((l != 0 && l != 1) || (m != 0 && m != 1))
      throw DomainError("measurement record bits must be 0 or 1");
    const double n2 = std::norm(x) + std::norm(y);
    if (std::abs(n2 - 1.0) > 1e-12)
      throw DomainError("outcome coefficients must be normalized: |x|^2 + |y|^2 = " +
                        std::to_string(n2));
    return OutcomeCoeffs{l, m, x, y};
  }
};

// Measurement-record table: (0,0) -> (alpha, beta), (0,1) -> (beta, alpha),
// (1,0) -> (alpha, -beta), (1,1) -> (-beta, alpha).
inline OutcomeCoeffs outcome_coefficients(int l, int m, const InputState& s) {
  if ((l != 0 && l != 1) || (m != 0 && m != 1))
    throw DomainError("measurement record bits must be 0 or 1");
  Complex x, y;
  if (l == 0 && m == 0) {
    x = s.alpha;
    y = s.beta;
  } else if (l == 0 && m == 1) {
    x = s.beta;
    y = s.alpha;
  } else if (l == 1 && m == 0) {
    x = s.alpha;
    y = -s.beta;
  } else {
    x = -s.beta;
    y = s.alpha;
  }
  return OutcomeCoeffs{l, m, x, y};
}

enum class Provenance { analytic, numeric };

// Receiver's conditional density matrix on RegionI plus the construction
// record. kept_trace is the weight surviving truncation before the final
// renormalization; probability is the measured projection probability when
// the numeric pipeline produced the state.
struct RobState {
  DensityOp rho;
  Provenance provenance;
  SqueezeParam params;
  OutcomeCoeffs outcome;
  double kept_trace = 1.0;
  std::optional<double> probability;
};

// Hadamard on a two-level mode.
inline FockKet apply_hadamard(const FockKet& k, std::string_view label) {
  const int mi = k.mode_index(label);
  if (k.modes()[static_cast<std::size_t>(mi)].cutoff != 2)
    throw CompositionError("hadamard acts on two-level modes only; mode \"" + std::string(label) +
                           "\" has cutoff " +
                           std::to_string(k.modes()[static_cast<std::size_t>(mi)].cutoff));
  const Eigen::Index s = k.stride(mi);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  FockKet out = k;
  Vector& amp = out.amplitudes();
  for (Eigen::Index idx = 0; idx < k.dim(); ++idx) {
    if ((idx / s) % 2 != 0) continue;  // visit each pair once, at digit 0
    const Complex a0 = amp[idx];
    const Complex a1 = amp[idx + s];
    amp[idx] = (a0 + a1) * inv_sqrt2;
    amp[idx + s] = (a0 - a1) * inv_sqrt2;
  }
  return out;
}

// Controlled-NOT between two two-level modes.
inline FockKet apply_cnot(const FockKet& k, std::string_view control, std::string_view target) {
  const int ci = k.mode_index(control);
  const int ti = k.mode_index(target);
  if (ci == ti) throw CompositionError("cnot control and target must differ");
  if (k.modes()[static_cast<std::size_t>(ci)].cutoff != 2 ||
      k.modes()[static_cast<std::size_t>(ti)].cutoff != 2)
    throw CompositionError("cnot acts on two-level modes only");
  const Eigen::Index sc = k.stride(ci);
  const Eigen::Index st = k.stride(ti);
  FockKet out = k;
  Vector& amp = out.amplitudes();
  for (Eigen::Index idx = 0; idx < k.dim(); ++idx) {
    if ((idx / sc) % 2 != 1) continue;  // control set
    if ((idx / st) % 2 != 0) continue;  // visit each target pair once
    std::swap(amp[idx], amp[idx + st]);
  }
  return out;
}

// Project one mode onto a definite occupation and drop the mode. The result
// is unnormalized; its squared norm is the projection probability when the
// input was normalized.
inline FockKet slice_mode(const FockKet& k, std::string_view label, int occupation) {
  const int mi = k.mode_index(label);
  const auto& spec = k.modes()[static_cast<std::size_t>(mi)];
  if (occupation < 0 || occupation >= spec.cutoff)
    throw IndexError("occupation " + std::to_string(occupation) + " outside mode \"" +
                     std::string(label) + "\" cutoff " + std::to_string(spec.cutoff));
  if (k.modes().size() < 2)
    throw CompositionError("cannot slice the only mode of a ket");

  std::vector<ModeSpec> rest = k.modes();
  rest.erase(rest.begin() + mi);
  FockKet out(rest);
  const Eigen::Index s = k.stride(mi);
  const Eigen::Index base = s * occupation;
  Eigen::Index written = 0;
  for (Eigen::Index idx = 0; idx < k.dim(); ++idx) {
    if ((idx / s) % spec.cutoff != 0) continue;
    out.amplitudes()[written++] = k.amplitudes()[idx + base];
  }
  return out;
}

// Entangled resource (|0>_B |vac-expansion> + |1>_B |one-expansion>)/sqrt(2)
// on AliceBell (x) RegionI (x) RegionII. Both receiver expansions are the
// renormalized truncations, so the resource has unit norm.
inline FockKet bell_resource(const SqueezeParam& p, int cutoff) {
  const TruncatedKet vac = squeezed_vacuum(p, cutoff);
  const TruncatedKet one = minkowski_one_particle(p, cutoff);
  const FockKet b0 = tensor(basis_ket({{2, kAliceBell}}, {0}), vac.ket);
  const FockKet b1 = tensor(basis_ket({{2, kAliceBell}}, {1}), one.ket);
  return (b0 + b1) * Complex(1.0 / std::sqrt(2.0), 0.0);
}

// Closed-form conditional state: band matrix with diagonal
// (|x|^2 q^n + n |y|^2 q^{n-1} / cosh^2 r) / cosh^2 r and first off-diagonal
// conj(x) y sqrt(n+1) q^n / cosh^3 r at (n+1, n), q = tanh^2 r. The form is
// exact at r = 0 (q^0 = 1 there), so no limit branch is needed. The trace
// of the untruncated series is exactly 1; the truncated matrix is scaled
// back to unit trace and the kept weight recorded.
inline RobState rob_state_analytic(const OutcomeCoeffs& o, const SqueezeParam& p, int cutoff) {
  if (cutoff < 2) throw DomainError("conditional state needs cutoff >= 2");
  const double q = p.tanh_r() * p.tanh_r();
  const double c2 = p.cosh_r() * p.cosh_r();
  const double c3 = c2 * p.cosh_r();
  const double x2 = std::norm(o.x);
  const double y2 = std::norm(o.y);
  const Complex cross = std::conj(o.x) * o.y;

  DensityOp rho({{cutoff, kRegionI}});
  Matrix& m = rho.matrix();
  double qn = 1.0;       // q^n
  double qn_prev = 1.0;  // q^{n-1}, meaningful from n = 1 on
  double trace = 0.0;
  for (int n = 0; n < cutoff; ++n) {
    double d = x2 * qn / c2;
    if (n > 0) d += double(n) * y2 * qn_prev / (c2 * c2);
    m(n, n) = d;
    trace += d;
    if (n + 1 < cutoff) {
      const Complex off = cross * std::sqrt(double(n) + 1.0) * qn / c3;
      m(n + 1, n) = off;
      m(n, n + 1) = std::conj(off);
    }
    qn_prev = qn;
    qn *= q;
  }
  m /= trace;
  return RobState{std::move(rho), Provenance::analytic, p, o, trace, std::nullopt};
}

// Free evolution of the conditional coefficients for dimensionless proper
// time tau: the one-quantum branch picks up e^{-i Omega tau}, so y rotates
// while x stays. Identity at r = 0, matching apply_proper_time_phase.
inline OutcomeCoeffs evolve_outcome(const OutcomeCoeffs& o, const SqueezeParam& p, double tau) {
  if (!std::isfinite(tau)) throw DomainError("proper time must be finite");
  const double omega = p.omega();
  if (tau == 0.0 || !std::isfinite(omega)) return o;
  return OutcomeCoeffs{o.l, o.m, o.x, o.y * std::polar(1.0, -omega * tau)};
}

// Full protocol pipeline: entangle, free-evolve the receiver's wedge pair
// for dimensionless proper time tau, gate, measure, trace out the hidden
// wedge. The conditional RegionI/RegionII content immediately before the
// trace-out is x |vac-expansion> + y e^{-i Omega tau} |one-expansion>.
inline RobState rob_state_numeric(const OutcomeCoeffs& o, const InputState& s,
                                  const SqueezeParam& p, int cutoff, double tau = 0.0) {
  FockKet input = make_ket({{2, kAliceIn}}, {{{0}, s.alpha}, {{1}, s.beta}});
  FockKet psi = tensor(input, bell_resource(p, cutoff));
  psi = apply_proper_time_phase(psi, p, tau);
  psi = apply_cnot(psi, kAliceIn, kAliceBell);
  psi = apply_hadamard(psi, kAliceIn);

  FockKet conditional = slice_mode(slice_mode(psi, kAliceIn, o.l), kAliceBell, o.m);
  const double probability = conditional.squared_norm();
  if (probability < 1e-15)
    throw DegenerateOutcomeError("measurement record (" + std::to_string(o.l) + ", " +
                                 std::to_string(o.m) + ") has vanishing probability " +
                                 std::to_string(probability));
  conditional *= Complex(1.0 / std::sqrt(probability), 0.0);

  DensityOp rho = reduced_density(conditional, {kRegionI});
  // store the evolved coefficients so the default fidelity target matches
  return RobState{std::move(rho), Provenance::numeric, p, evolve_outcome(o, p, tau), 1.0,
                  probability};
}

// Trace-form fidelity <psi_t| rho |psi_t> against the best-case receiver
// analog x |0> + y |1> embedded in the truncated ladder.
inline double fidelity_numeric(const RobState& rs, const OutcomeCoeffs& o) {
  FockKet target = make_ket(rs.rho.modes(), {{{0}, o.x}, {{1}, o.y}});
  return fidelity_pure(target, rs.rho);
}

inline double fidelity_numeric(const RobState& rs) { return fidelity_numeric(rs, rs.outcome); }

// Closed-form fidelity
// (1/cosh^2 r) [ |x|^4 + (tanh^2 r |x|^2 + |y|^2 / cosh^2 r) |y|^2
//                + 2 |x|^2 |y|^2 / cosh r ].
inline double fidelity_closed_form(const OutcomeCoeffs& o, const SqueezeParam& p) {
  const double x2 = std::norm(o.x);
  const double y2 = std::norm(o.y);
  const double c = p.cosh_r();
  const double t2 = p.tanh_r() * p.tanh_r();
  return (x2 * x2 + (t2 * x2 + y2 / (c * c)) * y2 + 2.0 * x2 * y2 / c) / (c * c);
}

// Input-angle average of the closed-form fidelity over theta in [0, pi],
// using <cos^4> = <sin^4> = 3/8 and <cos^2 sin^2> = 1/8:
// (1/cosh^2 r) [ 3/8 + tanh^2 r / 8 + (3/8)/cosh^2 r + (1/4)/cosh r ].
inline double averaged_fidelity_closed_form(const SqueezeParam& p) {
  const double c = p.cosh_r();
  const double t2 = p.tanh_r() * p.tanh_r();
  return (0.375 + 0.125 * t2 + 0.375 / (c * c) + 0.25 / c) / (c * c);
}

// Composite-Simpson average of the closed-form fidelity over theta in
// [0, pi] with (x, y) = (cos theta, sin theta).
inline double averaged_fidelity(const SqueezeParam& p, int quadrature_points = 1001) {
  if (quadrature_points < 3 || quadrature_points % 2 == 0)
    throw DomainError("composite Simpson needs an odd point count >= 3, got " +
                      std::to_string(quadrature_points));
  const double h = M_PI / double(quadrature_points - 1);
  auto f = [&p](double theta) {
    return fidelity_closed_form(
        OutcomeCoeffs{0, 0, Complex(std::cos(theta), 0.0), Complex(std::sin(theta), 0.0)}, p);
  };
  double sum = f(0.0) + f(M_PI);
  for (int i = 1; i + 1 < quadrature_points; ++i)
    sum += f(double(i) * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  return sum * h / 3.0 / M_PI;
}

}  // namespace rqi
