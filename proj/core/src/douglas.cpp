#include "aspec/douglas.hpp"

namespace aspec {

ComplexMatrix douglas_solve(const ComplexMatrix& x, const ComplexMatrix& y,
                            const ToleranceConfig& tol) {
  tol.validate();
  require_square(x, "X");
  require_square(y, "Y");
  require_same_shape(x, y, "douglas_solve");

  const Mat& xm = x.eigen();
  const Mat y_pinv = pseudo_inverse(y.eigen(), tol.rank_rtol);
  const Index n = xm.rows();
  // X restricted to N(Y): X (I - Y^+ Y).
  const Mat leak = xm * (Mat::Identity(n, n) - y_pinv * y.eigen());
  if (max_abs(leak) > tol.bound(max_abs(xm))) {
    throw Error(ErrorCode::NotMajorized, "N(Y) is not contained in N(X)");
  }
  return ComplexMatrix(Mat((xm * y_pinv).adjoint()));
}

ComplexMatrix power_factorize(const ComplexMatrix& x, const PsdDecomposition& b, double alpha,
                              const ToleranceConfig& tol) {
  tol.validate();
  require_square(x, "X");
  if (x.rows() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "X and B differ in size");
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1/2)");
  }
  const Mat& xm = x.eigen();
  const Mat gram = xm.adjoint() * xm;
  const RealVec slack = hermitian_eigenvalues(b.a().eigen() - gram);
  if (slack(0) < -tol.atol) {
    throw Error(ErrorCode::PreconditionFailed, "X^*X is not dominated by B");
  }
  return ComplexMatrix(Mat(xm * fractional_power_pinv(b, alpha).eigen()));
}

}  // namespace aspec
