#include "aspec/seminorm.hpp"

#include <algorithm>
#include <cmath>

namespace aspec {

namespace {

void check_operand(const PsdDecomposition& d, const ComplexMatrix& x) {
  require_square(x, "X");
  if (x.rows() != d.dim()) throw Error(ErrorCode::ShapeMismatch, "X and A differ in size");
}

bool leaves_kernel_invariant(const PsdDecomposition& d, const Mat& x, const ToleranceConfig& tol) {
  const Mat& p = d.proj().eigen();
  const Index n = x.rows();
  const Mat leak = p * x * (Mat::Identity(n, n) - p);
  return max_abs(leak) <= tol.bound(max_abs(x));
}

}  // namespace

MembershipResult a_membership(const PsdDecomposition& d, const ComplexMatrix& x,
                              const ToleranceConfig& tol) {
  check_operand(d, x);
  MembershipResult out;
  out.member = leaves_kernel_invariant(d, x.eigen(), tol);
  if (!out.member) return out;

  const Mat u = d.sqrt().eigen() * x.eigen() * fractional_power_pinv(d, 0.25).eigen();
  out.certificate = ComplexMatrix(u);
  const double w = spectral_norm(d.weighted_compress(x.eigen()));
  out.bound = w * w;
  return out;
}

bool is_a_member(const PsdDecomposition& d, const ComplexMatrix& x, const ToleranceConfig& tol) {
  check_operand(d, x);
  return leaves_kernel_invariant(d, x.eigen(), tol);
}

void require_member(const PsdDecomposition& d, const ComplexMatrix& x, const ToleranceConfig& tol) {
  check_operand(d, x);
  if (!leaves_kernel_invariant(d, x.eigen(), tol)) {
    throw Error(ErrorCode::NotMember, "X does not leave the null space of A invariant");
  }
}

ASeminormValue a_seminorm(const PsdDecomposition& d, const ComplexMatrix& x,
                          const ToleranceConfig& tol) {
  check_operand(d, x);
  if (!leaves_kernel_invariant(d, x.eigen(), tol)) return {false, 0.0};
  // A^{1/2} X (A^{1/2})^+ is unitarily equivalent to the weighted compression
  // padded with zeros.
  return {true, spectral_norm(d.weighted_compress(x.eigen()))};
}

double a_seminorm_oracle(const PsdDecomposition& d, const ComplexMatrix& x,
                         const ToleranceConfig& tol) {
  require_member(d, x, tol);
  if (d.rank() == 0) return 0.0;
  const Mat& a = d.a().eigen();
  const Mat& xm = x.eigen();
  const Mat numerator = hermitian_part(d.compress(xm.adjoint() * a * xm));
  const Mat denominator = hermitian_part(d.compress(a));
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> ges(numerator, denominator,
                                                    Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged, "generalized eigensolver failed");
  }
  const double mu_max = ges.eigenvalues().maxCoeff();
  return std::sqrt(std::max(mu_max, 0.0));
}

ComplexMatrix a_adjoint(const PsdDecomposition& d, const ComplexMatrix& x,
                        const ToleranceConfig& tol) {
  require_member(d, x, tol);
  return ComplexMatrix(Mat(d.pinv().eigen() * x.eigen().adjoint() * d.a().eigen()));
}

ComplexMatrix half_adjoint(const PsdDecomposition& d, const ComplexMatrix& x,
                           const ToleranceConfig& tol) {
  require_member(d, x, tol);
  return ComplexMatrix(Mat(d.sqrt_pinv().eigen() * x.eigen().adjoint() * d.sqrt().eigen()));
}

bool is_a_selfadjoint(const ComplexMatrix& a, const ComplexMatrix& x, const ToleranceConfig& tol) {
  require_same_shape(a, x, "is_a_selfadjoint");
  require_square(x, "X");
  const Mat ax = a.eigen() * x.eigen();
  return max_abs(ax - ax.adjoint()) <= tol.bound(max_abs(ax));
}

}  // namespace aspec
