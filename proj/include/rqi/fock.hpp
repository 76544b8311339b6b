// fock.hpp
// Dense truncated-Fock-space primitives: labeled bosonic modes, kets and
// density operators over them, tensor/trace algebra, ladder operators, and
// the Hermitian eigensolver the entropy code relies on.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace rqi {

using Complex = std::complex<double>;
using Vector  = Eigen::VectorXcd;
using Matrix  = Eigen::MatrixXcd;

// Library-wide numerical tolerances. elementwise guards amplitude-level
// comparisons, trace guards normalization, psd_floor is the most negative
// eigenvalue accepted from an operator that should be positive semidefinite.
struct Tolerances {
  double elementwise = 1e-12;
  double trace       = 1e-10;
  double psd_floor   = 1e-10;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

// Error hierarchy; the CLI maps these onto process exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexError : Error { using Error::Error; };        // unknown mode / occupation out of range
struct CompositionError : Error { using Error::Error; };  // incompatible mode layouts
struct ContractViolation : Error { using Error::Error; }; // numerical invariant broken
struct DomainError : Error { using Error::Error; };       // parameter outside its domain
struct DegenerateOutcomeError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// One bosonic mode truncated to occupations 0 .. cutoff-1.
struct ModeSpec {
  int cutoff = 1;
  std::string label;

  friend bool operator==(const ModeSpec&, const ModeSpec&) = default;
};

namespace detail {

inline void validate_modes(const std::vector<ModeSpec>& modes) {
  if (modes.empty()) throw CompositionError("a state needs at least one mode");
  for (const auto& m : modes) {
    if (m.cutoff < 1)
      throw DomainError("mode \"" + m.label + "\" has cutoff " + std::to_string(m.cutoff) +
                        "; cutoffs must be >= 1");
    if (m.label.empty()) throw DomainError("mode labels must be non-empty");
  }
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = i + 1; j < modes.size(); ++j)
      if (modes[i].label == modes[j].label)
        throw CompositionError("duplicate mode label \"" + modes[i].label + '"');
}

// Row-major strides: the first mode varies slowest, matching a ⊗ b ordering.
inline std::vector<Eigen::Index> make_strides(const std::vector<ModeSpec>& modes) {
  std::vector<Eigen::Index> s(modes.size());
  Eigen::Index acc = 1;
  for (std::size_t i = modes.size(); i-- > 0;) {
    s[i] = acc;
    acc *= modes[i].cutoff;
  }
  return s;
}

inline Eigen::Index total_dim(const std::vector<ModeSpec>& modes) {
  Eigen::Index d = 1;
  for (const auto& m : modes) d *= m.cutoff;
  return d;
}

inline int find_mode(const std::vector<ModeSpec>& modes, std::string_view label) {
  for (std::size_t i = 0; i < modes.size(); ++i)
    if (modes[i].label == label) return static_cast<int>(i);
  throw IndexError("no mode labeled \"" + std::string(label) + '"');
}

// Flat-space offsets of every joint occupation of `modes`, using the strides
// those modes carry in some enclosing space.
inline std::vector<Eigen::Index> enumerate_offsets(const std::vector<ModeSpec>& modes,
                                                   const std::vector<Eigen::Index>& strides) {
  Eigen::Index count = 1;
  for (const auto& m : modes) count *= m.cutoff;
  std::vector<Eigen::Index> offsets(static_cast<std::size_t>(count));
  std::vector<int> digits(modes.size(), 0);
  for (Eigen::Index j = 0; j < count; ++j) {
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < modes.size(); ++i) off += digits[i] * strides[i];
    offsets[static_cast<std::size_t>(j)] = off;
    for (std::size_t i = modes.size(); i-- > 0;) {
      if (++digits[i] < modes[i].cutoff) break;
      digits[i] = 0;
    }
  }
  return offsets;
}

}  // namespace detail

// Pure state on a tensor product of truncated modes, stored densely.
class FockKet {
 public:
  explicit FockKet(std::vector<ModeSpec> modes) : modes_(std::move(modes)) {
    detail::validate_modes(modes_);
    strides_ = detail::make_strides(modes_);
    amp_ = Vector::Zero(detail::total_dim(modes_));
  }

  FockKet(std::vector<ModeSpec> modes, Vector amplitudes) : modes_(std::move(modes)) {
    detail::validate_modes(modes_);
    strides_ = detail::make_strides(modes_);
    if (amplitudes.size() != detail::total_dim(modes_))
      throw CompositionError("amplitude vector length " + std::to_string(amplitudes.size()) +
                             " does not match mode-space dimension " +
                             std::to_string(detail::total_dim(modes_)));
    amp_ = std::move(amplitudes);
  }

  const std::vector<ModeSpec>& modes() const { return modes_; }
  Eigen::Index dim() const { return amp_.size(); }
  const Vector& amplitudes() const { return amp_; }
  Vector& amplitudes() { return amp_; }

  int mode_index(std::string_view label) const { return detail::find_mode(modes_, label); }
  bool has_mode(std::string_view label) const {
    for (const auto& m : modes_)
      if (m.label == label) return true;
    return false;
  }
  Eigen::Index stride(int mode) const { return strides_[static_cast<std::size_t>(mode)]; }

  bool same_layout(const FockKet& other) const { return modes_ == other.modes_; }

  Eigen::Index flat_index(const std::vector<int>& occ) const {
    if (occ.size() != modes_.size())
      throw CompositionError("occupation tuple has " + std::to_string(occ.size()) +
                             " entries for " + std::to_string(modes_.size()) + " modes");
    Eigen::Index idx = 0;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i] < 0 || occ[i] >= modes_[i].cutoff)
        throw IndexError("occupation " + std::to_string(occ[i]) + " out of range for mode \"" +
                         modes_[i].label + "\" (cutoff " + std::to_string(modes_[i].cutoff) + ")");
      idx += occ[i] * strides_[i];
    }
    return idx;
  }

  std::vector<int> occupations(Eigen::Index flat) const {
    std::vector<int> occ(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i)
      occ[i] = static_cast<int>((flat / strides_[i]) % modes_[i].cutoff);
    return occ;
  }

  Complex amplitude(const std::vector<int>& occ) const { return amp_[flat_index(occ)]; }
  Complex amplitude(std::initializer_list<int> occ) const {
    return amplitude(std::vector<int>(occ));
  }

  double squared_norm() const { return amp_.squaredNorm(); }
  double norm() const { return amp_.norm(); }

  bool is_normalized(const Tolerances& tol = default_tolerances()) const {
    return std::abs(squared_norm() - 1.0) <= tol.elementwise;
  }

  // Scales to unit norm; returns the factor applied.
  double normalize() {
    const double n = norm();
    if (n == 0.0) throw DomainError("cannot normalize the zero ket");
    amp_ /= n;
    return 1.0 / n;
  }

  // <this|other>.
  Complex inner(const FockKet& other) const {
    require_same_layout(other, "inner product");
    return amp_.dot(other.amp_);
  }

  FockKet& operator+=(const FockKet& other) {
    require_same_layout(other, "addition");
    amp_ += other.amp_;
    return *this;
  }
  FockKet& operator-=(const FockKet& other) {
    require_same_layout(other, "subtraction");
    amp_ -= other.amp_;
    return *this;
  }
  FockKet& operator*=(Complex c) {
    amp_ *= c;
    return *this;
  }

  friend FockKet operator+(FockKet a, const FockKet& b) { return a += b; }
  friend FockKet operator-(FockKet a, const FockKet& b) { return a -= b; }
  friend FockKet operator*(Complex c, FockKet k) { return k *= c; }
  friend FockKet operator*(FockKet k, Complex c) { return k *= c; }

 private:
  void require_same_layout(const FockKet& other, const char* what) const {
    if (!same_layout(other))
      throw CompositionError(std::string(what) + " requires identical mode layouts");
  }

  std::vector<ModeSpec> modes_;
  std::vector<Eigen::Index> strides_;
  Vector amp_;
};

// Mixed state on a tensor product of truncated modes.
class DensityOp {
 public:
  explicit DensityOp(std::vector<ModeSpec> modes) : modes_(std::move(modes)) {
    detail::validate_modes(modes_);
    strides_ = detail::make_strides(modes_);
    m_ = Matrix::Zero(detail::total_dim(modes_), detail::total_dim(modes_));
  }

  DensityOp(std::vector<ModeSpec> modes, Matrix m) : modes_(std::move(modes)) {
    detail::validate_modes(modes_);
    strides_ = detail::make_strides(modes_);
    const Eigen::Index d = detail::total_dim(modes_);
    if (m.rows() != d || m.cols() != d)
      throw CompositionError("matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " but the mode space has dimension " +
                             std::to_string(d));
    m_ = std::move(m);
  }

  const std::vector<ModeSpec>& modes() const { return modes_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  int mode_index(std::string_view label) const { return detail::find_mode(modes_, label); }
  Eigen::Index stride(int mode) const { return strides_[static_cast<std::size_t>(mode)]; }
  bool same_layout(const DensityOp& other) const { return modes_ == other.modes_; }

  Complex trace() const { return m_.trace(); }
  double trace_real() const { return m_.trace().real(); }

  // max_ij |M - M^dagger|; zero for exactly Hermitian storage.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      for (Eigen::Index i = 0; i <= j; ++i)
        worst = std::max(worst, std::abs(m_(i, j) - std::conj(m_(j, i))));
    return worst;
  }

  bool is_hermitian(const Tolerances& tol = default_tolerances()) const {
    return hermiticity_defect() <= tol.elementwise;
  }

  DensityOp& operator+=(const DensityOp& other) {
    if (!same_layout(other)) throw CompositionError("addition requires identical mode layouts");
    m_ += other.m_;
    return *this;
  }
  DensityOp& operator*=(double c) {
    m_ *= c;
    return *this;
  }
  friend DensityOp operator+(DensityOp a, const DensityOp& b) { return a += b; }
  friend DensityOp operator*(double c, DensityOp r) { return r *= c; }

 private:
  std::vector<ModeSpec> modes_;
  std::vector<Eigen::Index> strides_;
  Matrix m_;
};

// Ket with the given amplitudes, all others zero. Entries assign (last wins).
inline FockKet make_ket(std::vector<ModeSpec> modes,
                        const std::vector<std::pair<std::vector<int>, Complex>>& entries) {
  FockKet k(std::move(modes));
  for (const auto& [occ, value] : entries) k.amplitudes()[k.flat_index(occ)] = value;
  return k;
}

inline FockKet basis_ket(std::vector<ModeSpec> modes, const std::vector<int>& occ) {
  return make_ket(std::move(modes), {{occ, Complex(1.0, 0.0)}});
}

// <a|b>, conjugate-linear in a.
inline Complex inner(const FockKet& a, const FockKet& b) { return a.inner(b); }

// a ⊗ b; a's modes come first and vary slowest.
inline FockKet tensor(const FockKet& a, const FockKet& b) {
  std::vector<ModeSpec> modes = a.modes();
  modes.insert(modes.end(), b.modes().begin(), b.modes().end());
  detail::validate_modes(modes);  // rejects duplicated labels across factors
  Vector amp(a.dim() * b.dim());
  for (Eigen::Index ia = 0; ia < a.dim(); ++ia) {
    const Complex ca = a.amplitudes()[ia];
    amp.segment(ia * b.dim(), b.dim()) = ca * b.amplitudes();
  }
  return FockKet(std::move(modes), std::move(amp));
}

// |k><k| for a normalized ket.
inline DensityOp outer(const FockKet& k, const Tolerances& tol = default_tolerances()) {
  if (!k.is_normalized(tol))
    throw ContractViolation("outer product requires a normalized ket (squared norm " +
                            std::to_string(k.squared_norm()) + ")");
  Matrix m = k.amplitudes() * k.amplitudes().adjoint();
  return DensityOp(k.modes(), std::move(m));
}

namespace detail {

struct TraceSplit {
  std::vector<ModeSpec> kept, traced;
  std::vector<Eigen::Index> kept_offsets, traced_offsets;
};

inline TraceSplit split_for_trace(const std::vector<ModeSpec>& modes,
                                  const std::vector<Eigen::Index>& strides,
                                  const std::vector<std::string>& keep) {
  if (keep.empty()) throw CompositionError("keep set must be non-empty");
  std::vector<char> mask(modes.size(), 0);
  for (const auto& label : keep) {
    const int i = find_mode(modes, label);
    if (mask[static_cast<std::size_t>(i)])
      throw CompositionError("duplicate label \"" + label + "\" in keep set");
    mask[static_cast<std::size_t>(i)] = 1;
  }
  TraceSplit split;
  std::vector<Eigen::Index> kept_strides, traced_strides;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (mask[i]) {
      split.kept.push_back(modes[i]);
      kept_strides.push_back(strides[i]);
    } else {
      split.traced.push_back(modes[i]);
      traced_strides.push_back(strides[i]);
    }
  }
  split.kept_offsets = enumerate_offsets(split.kept, kept_strides);
  split.traced_offsets = split.traced.empty()
                             ? std::vector<Eigen::Index>{0}
                             : enumerate_offsets(split.traced, traced_strides);
  return split;
}

}  // namespace detail

// Trace out every mode not named in `keep`; kept modes keep their original
// relative order. Preserves trace and positive semidefiniteness.
inline DensityOp partial_trace(const DensityOp& rho, const std::vector<std::string>& keep) {
  std::vector<Eigen::Index> strides(rho.modes().size());
  for (std::size_t i = 0; i < strides.size(); ++i) strides[i] = rho.stride(static_cast<int>(i));
  const auto split = detail::split_for_trace(rho.modes(), strides, keep);

  const auto A = static_cast<Eigen::Index>(split.kept_offsets.size());
  Matrix out = Matrix::Zero(A, A);
  const Matrix& m = rho.matrix();
  for (Eigen::Index a = 0; a < A; ++a)
    for (Eigen::Index b = 0; b < A; ++b) {
      Complex acc(0.0, 0.0);
      for (const Eigen::Index t : split.traced_offsets)
        acc += m(split.kept_offsets[static_cast<std::size_t>(a)] + t,
                 split.kept_offsets[static_cast<std::size_t>(b)] + t);
      out(a, b) = acc;
    }
  return DensityOp(split.kept, std::move(out));
}

// Tr_rest |k><k| computed by contraction, without materializing the full
// outer product. No normalization requirement on k.
inline DensityOp reduced_density(const FockKet& k, const std::vector<std::string>& keep) {
  std::vector<Eigen::Index> strides(k.modes().size());
  for (std::size_t i = 0; i < strides.size(); ++i) strides[i] = k.stride(static_cast<int>(i));
  const auto split = detail::split_for_trace(k.modes(), strides, keep);

  const auto A = static_cast<Eigen::Index>(split.kept_offsets.size());
  const auto T = static_cast<Eigen::Index>(split.traced_offsets.size());
  Matrix gathered(A, T);
  for (Eigen::Index a = 0; a < A; ++a)
    for (Eigen::Index t = 0; t < T; ++t)
      gathered(a, t) = k.amplitudes()[split.kept_offsets[static_cast<std::size_t>(a)] +
                                      split.traced_offsets[static_cast<std::size_t>(t)]];
  Matrix out = gathered * gathered.adjoint();
  return DensityOp(split.kept, std::move(out));
}

enum class Ladder { create, annihilate };

struct LadderResult {
  FockKet ket;
  // l2 norm of the input amplitudes whose raised image fell outside the
  // cutoff; zero for annihilation.
  double truncation_loss = 0.0;
};

// Bosonic ladder operator on one mode: create maps |n> to sqrt(n+1)|n+1>,
// annihilate maps |n> to sqrt(n)|n-1>. Creation at the top level truncates.
inline LadderResult apply_ladder(const FockKet& k, std::string_view label, Ladder op) {
  const int mi = k.mode_index(label);
  const int cutoff = k.modes()[static_cast<std::size_t>(mi)].cutoff;
  const Eigen::Index s = k.stride(mi);

  FockKet out(k.modes());
  double lost2 = 0.0;
  const Vector& in = k.amplitudes();
  Vector& dst = out.amplitudes();
  for (Eigen::Index idx = 0; idx < in.size(); ++idx) {
    const Complex a = in[idx];
    if (a == Complex(0.0, 0.0)) continue;
    const int n = static_cast<int>((idx / s) % cutoff);
    if (op == Ladder::create) {
      if (n == cutoff - 1)
        lost2 += std::norm(a);
      else
        dst[idx + s] += std::sqrt(double(n) + 1.0) * a;
    } else {
      if (n > 0) dst[idx - s] += std::sqrt(double(n)) * a;
    }
  }
  return LadderResult{std::move(out), std::sqrt(lost2)};
}

// Same state embedded in a mode space where `label` has a larger cutoff.
inline FockKet pad_mode(const FockKet& k, std::string_view label, int new_cutoff) {
  const int mi = k.mode_index(label);
  const int old_cutoff = k.modes()[static_cast<std::size_t>(mi)].cutoff;
  if (new_cutoff < old_cutoff)
    throw DomainError("pad_mode cannot shrink mode \"" + std::string(label) + "\" from cutoff " +
                      std::to_string(old_cutoff) + " to " + std::to_string(new_cutoff));
  std::vector<ModeSpec> modes = k.modes();
  modes[static_cast<std::size_t>(mi)].cutoff = new_cutoff;
  FockKet out(std::move(modes));
  for (Eigen::Index idx = 0; idx < k.dim(); ++idx) {
    const Complex a = k.amplitudes()[idx];
    if (a == Complex(0.0, 0.0)) continue;
    out.amplitudes()[out.flat_index(k.occupations(idx))] = a;
  }
  return out;
}

// Real eigenvalues of a Hermitian operator, descending. Numerically diagonal
// input short-circuits to its diagonal; tridiagonal input (the shape every
// conditional state here has) goes through an O(n^2) tridiagonal solve after
// a phase similarity that makes the subdiagonal real without changing the
// spectrum. Everything else takes the dense solver.
inline std::vector<double> eigenvalues_hermitian(const DensityOp& rho,
                                                 const Tolerances& tol = default_tolerances()) {
  const Matrix& m = rho.matrix();
  if (rho.hermiticity_defect() > tol.elementwise)
    throw ContractViolation("eigenvalues_hermitian requires a Hermitian operator (defect " +
                            std::to_string(rho.hermiticity_defect()) + ")");

  double max_offdiag = 0.0;  // anything off the main diagonal
  double max_far = 0.0;      // anything beyond the first off-diagonal
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) {
      const double mag = std::max(std::abs(m(i, j)), std::abs(m(j, i)));
      max_offdiag = std::max(max_offdiag, mag);
      if (j - i > 1) max_far = std::max(max_far, mag);
    }

  const Eigen::Index n = m.rows();
  std::vector<double> ev(static_cast<std::size_t>(n));
  if (max_offdiag <= tol.elementwise) {
    for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = m(i, i).real();
  } else if (max_far <= tol.elementwise && n >= 2) {
    Eigen::VectorXd diag(n), sub(n - 1);
    for (Eigen::Index i = 0; i < n; ++i) diag[i] = m(i, i).real();
    for (Eigen::Index i = 0; i + 1 < n; ++i) sub[i] = std::abs(m(i + 1, i));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw ContractViolation("tridiagonal eigendecomposition failed to converge");
    for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    solver.compute(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw ContractViolation("Hermitian eigendecomposition failed to converge");
    for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
  }
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

// <target| rho |target> for a normalized pure target on the same mode space.
inline double fidelity_pure(const FockKet& target, const DensityOp& rho,
                            const Tolerances& tol = default_tolerances()) {
  if (target.modes() != rho.modes())
    throw CompositionError("fidelity_pure requires matching mode layouts");
  if (!target.is_normalized(tol))
    throw ContractViolation("fidelity_pure requires a normalized target (squared norm " +
                            std::to_string(target.squared_norm()) + ")");
  const Complex f = target.amplitudes().dot(rho.matrix() * target.amplitudes());
  if (std::abs(f.imag()) > tol.elementwise)
    throw ContractViolation("fidelity has imaginary part " + std::to_string(f.imag()) +
                            "; operator is not numerically Hermitian");
  return f.real();
}

}  // namespace rqi
