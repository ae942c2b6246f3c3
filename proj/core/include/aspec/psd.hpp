#pragma once

#include "aspec/linalg.hpp"

namespace aspec {

/// Spectral data of a positive semidefinite weight A, computed once from a
/// single Hermitian eigendecomposition so that every derived object (powers,
/// pseudoinverses, range projection) is mutually consistent.
///
/// Eigenvalues at or below rank_rtol * lambda_max are treated as exactly zero
/// everywhere; eigenvalues in [-atol, 0) are clamped to zero.
class PsdDecomposition {
 public:
  const ComplexMatrix& a() const noexcept { return a_; }
  const ComplexMatrix& sqrt() const noexcept { return sqrt_; }
  const ComplexMatrix& quarter() const noexcept { return quarter_; }
  const ComplexMatrix& pinv() const noexcept { return pinv_; }
  const ComplexMatrix& sqrt_pinv() const noexcept { return sqrt_pinv_; }
  const ComplexMatrix& proj() const noexcept { return proj_; }
  Index rank() const noexcept { return rank_; }
  double gap() const noexcept { return gap_; }
  Index dim() const noexcept { return a_.rows(); }
  const ToleranceConfig& tolerance() const noexcept { return tol_; }

  /// Ascending eigenvalues after clamping and rank truncation.
  const RealVec& eigenvalues() const noexcept { return eigenvalues_; }
  const Mat& eigenvectors() const noexcept { return eigenvectors_; }

  /// Orthonormal basis of range(A) (n x rank) and the matching eigenvalues.
  Mat range_basis() const { return eigenvectors_.rightCols(rank_); }
  RealVec range_eigenvalues() const { return eigenvalues_.tail(rank_); }

  /// V diag(g(lambda_i)) V^* over the retained eigenvalues only; the
  /// kernel of A is mapped to zero.
  template <typename Fn>
  Mat spectral_map(Fn&& g) const {
    const auto basis = eigenvectors_.rightCols(rank_);
    const RealVec values = eigenvalues_.tail(rank_).unaryExpr(g);
    return basis * values.cast<Complex>().asDiagonal() * basis.adjoint();
  }

  /// V_r^* M V_r: M seen on range(A) in the eigenbasis.
  Mat compress(const Mat& m) const;

  /// Lambda^{1/2} V_r^* M V_r Lambda^{-1/2}. For a member X this is the
  /// matrix of A^{1/2} X (A^{1/2})^+ restricted to range(A).
  Mat weighted_compress(const Mat& m) const;

  /// Inverse of compress for an r x r block: V_r B V_r^*.
  Mat expand(const Mat& block) const;

  /// Inverse of weighted_compress: V_r Lambda^{-1/2} B Lambda^{1/2} V_r^*.
  Mat weighted_expand(const Mat& block) const;

  friend PsdDecomposition psd_decompose(const ComplexMatrix& a, const ToleranceConfig& tol);

 private:
  PsdDecomposition(ComplexMatrix a, ToleranceConfig tol);

  ComplexMatrix a_;
  ToleranceConfig tol_;
  RealVec eigenvalues_;
  Mat eigenvectors_;
  Index rank_ = 0;
  double gap_ = 0.0;
  ComplexMatrix sqrt_;
  ComplexMatrix quarter_;
  ComplexMatrix pinv_;
  ComplexMatrix sqrt_pinv_;
  ComplexMatrix proj_;
};

/// Validates A (square, Hermitian within tolerance, eigenvalues >= -atol)
/// and builds its decomposition. Throws NotSquare, NotHermitian or
/// NotPositive.
PsdDecomposition psd_decompose(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// A^s for s > 0 via the cached eigendecomposition.
ComplexMatrix fractional_power(const PsdDecomposition& d, double s);

/// (A^s)^+ for s > 0.
ComplexMatrix fractional_power_pinv(const PsdDecomposition& d, double s);

}  // namespace aspec
