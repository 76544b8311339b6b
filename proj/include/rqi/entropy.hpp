// entropy.hpp
// Von Neumann entropies of the receiver's conditional states, the thermal
// vacuum, and the information gained by learning the sender's measurement
// record, plus the analytic two-level-sector model of that gain.
#pragma once

#include <cmath>
#include <string>

#include "rqi/fock.hpp"
#include "rqi/rindler.hpp"
#include "rqi/teleport.hpp"

namespace rqi {

// Entropies in bits at one squeezing value. dS_gain = S_pre - S_post by
// construction; dS_gain_tsm is the closed-form two-level-sector estimate.
struct EntropyReport {
  double r = 0.0;
  double S_pre = 0.0;
  double S_post = 0.0;
  double S_vac = 0.0;
  double dS_gain = 0.0;
  double dS_gain_tsm = 0.0;
};

// -sum lambda log2 lambda over the spectrum, 0 log 0 := 0. Eigenvalues
// below -tol.psd_floor mean the operator was not a state.
inline double von_neumann_entropy(const DensityOp& rho, const Tolerances& tol = {}) {
  double bits = 0.0;
  for (double lambda : eigenvalues_hermitian(rho, tol)) {
    if (lambda < -tol.psd_floor)
      throw ContractViolation("density operator has negative eigenvalue " +
                              std::to_string(lambda));
    if (lambda > 0.0) bits -= lambda * std::log2(lambda);
  }
  return bits;
}

namespace detail {

inline double binary_entropy_bits(double prob) {
  double bits = 0.0;
  if (prob > 0.0) bits -= prob * std::log2(prob);
  if (prob < 1.0) bits -= (1.0 - prob) * std::log2(1.0 - prob);
  return bits;
}

}  // namespace detail

// Receiver's state before the record arrives: uniform average of the four
// conditional states. The cross terms cancel pairwise ((l,0) against (l,1)
// carry opposite coefficient products), leaving a diagonal matrix.
inline DensityOp pre_measurement_state(const InputState& s, const SqueezeParam& p, int cutoff) {
  DensityOp acc({{cutoff, kRegionI}});
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m)
      acc += rob_state_analytic(outcome_coefficients(l, m, s), p, cutoff).rho;
  return 0.25 * acc;
}

// Receiver's state after learning one record, for the figure-fixed input
// (|0> + |1>)/sqrt(2) at record (0,0), i.e. x = y = 1/sqrt(2).
inline DensityOp post_measurement_state(const SqueezeParam& p, int cutoff) {
  const double s = 1.0 / std::sqrt(2.0);
  return rob_state_analytic(OutcomeCoeffs{0, 0, Complex(s, 0.0), Complex(s, 0.0)}, p, cutoff).rho;
}

inline DensityOp pre_measurement_state(const SqueezeParam& p, int cutoff) {
  const double s = 1.0 / std::sqrt(2.0);
  return pre_measurement_state(InputState(Complex(s, 0.0), Complex(s, 0.0)), p, cutoff);
}

// Closed-form entropy of the untruncated thermal vacuum:
// cosh^2 r log2 cosh^2 r - sinh^2 r log2 sinh^2 r.
inline double thermal_entropy_closed_form(const SqueezeParam& p) {
  const double c2 = p.cosh_r() * p.cosh_r();
  const double s2 = p.sinh_r() * p.sinh_r();
  double bits = c2 * std::log2(c2);
  if (s2 > 0.0) bits -= s2 * std::log2(s2);
  return bits;
}

inline double vacuum_entropy(const SqueezeParam& p, int cutoff) {
  return von_neumann_entropy(thermal_vacuum(p, cutoff));
}

// Two-level-sector model of the information gain, fully closed-form. The
// {|0>, |1>} restriction of the pre-measurement state renormalizes to
// diag(1/2, 1/2) at every squeezing (the same hyperbolic identity that
// makes the post block's diagonal uniform), so restricting both states
// symmetrically and crediting the pre side the exact one bit coincide; the
// post block is [[1, sech r], [sech r, 1]]/2 with eigenvalues
// (1 +- sech r)/2.
inline double two_state_model_gain(const SqueezeParam& p) {
  const double sech = 1.0 / p.cosh_r();
  return 1.0 - detail::binary_entropy_bits(0.5 * (1.0 + sech));
}

// Full report at one squeezing value for the figure-fixed input.
inline EntropyReport info_gain(const SqueezeParam& p, int cutoff) {
  EntropyReport rep;
  rep.r = p.r();
  rep.S_pre = von_neumann_entropy(pre_measurement_state(p, cutoff));
  rep.S_post = von_neumann_entropy(post_measurement_state(p, cutoff));
  rep.S_vac = vacuum_entropy(p, cutoff);
  rep.dS_gain = rep.S_pre - rep.S_post;
  rep.dS_gain_tsm = two_state_model_gain(p);
  return rep;
}

}  // namespace rqi
