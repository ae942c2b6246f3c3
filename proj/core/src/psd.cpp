#include "aspec/psd.hpp"

#include <cmath>

namespace aspec {

namespace {

ComplexMatrix placeholder(Index n) { return ComplexMatrix::zero(n, n); }

}  // namespace

PsdDecomposition::PsdDecomposition(ComplexMatrix a, ToleranceConfig tol)
    : a_(std::move(a)),
      tol_(tol),
      sqrt_(placeholder(a_.rows())),
      quarter_(placeholder(a_.rows())),
      pinv_(placeholder(a_.rows())),
      sqrt_pinv_(placeholder(a_.rows())),
      proj_(placeholder(a_.rows())) {
  const Mat& m = a_.eigen();
  const double scale = max_abs(m);
  if (max_abs(m - m.adjoint()) > tol_.bound(scale)) {
    throw Error(ErrorCode::NotHermitian, "weight is not Hermitian within tolerance");
  }

  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(m));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged, "Hermitian eigensolver failed");
  }
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();

  const Index n = eigenvalues_.size();
  if (eigenvalues_(0) < -tol_.atol) {
    throw Error(ErrorCode::NotPositive,
                "weight has eigenvalue " + std::to_string(eigenvalues_(0)) + " < -atol");
  }
  const double lambda_max = std::max(eigenvalues_(n - 1), 0.0);
  const double cutoff = tol_.rank_rtol * lambda_max;
  rank_ = 0;
  for (Index k = 0; k < n; ++k) {
    if (lambda_max > 0.0 && eigenvalues_(k) > cutoff) {
      ++rank_;
    } else {
      eigenvalues_(k) = 0.0;
    }
  }
  // Ascending order means the retained eigenvalues are exactly the last rank_.
  for (Index k = 0; k < n - rank_; ++k) eigenvalues_(k) = 0.0;
  gap_ = rank_ > 0 ? eigenvalues_(n - rank_) : 0.0;

  sqrt_ = ComplexMatrix(spectral_map([](double l) { return std::sqrt(l); }));
  quarter_ = ComplexMatrix(spectral_map([](double l) { return std::sqrt(std::sqrt(l)); }));
  pinv_ = ComplexMatrix(spectral_map([](double l) { return 1.0 / l; }));
  sqrt_pinv_ = ComplexMatrix(spectral_map([](double l) { return 1.0 / std::sqrt(l); }));
  proj_ = ComplexMatrix(spectral_map([](double) { return 1.0; }));
}

Mat PsdDecomposition::compress(const Mat& m) const {
  const Mat basis = range_basis();
  return basis.adjoint() * m * basis;
}

Mat PsdDecomposition::weighted_compress(const Mat& m) const {
  const RealVec root = range_eigenvalues().cwiseSqrt();
  Mat block = compress(m);
  for (Index i = 0; i < block.rows(); ++i) {
    for (Index j = 0; j < block.cols(); ++j) block(i, j) *= root(i) / root(j);
  }
  return block;
}

Mat PsdDecomposition::expand(const Mat& block) const {
  const Mat basis = range_basis();
  return basis * block * basis.adjoint();
}

Mat PsdDecomposition::weighted_expand(const Mat& block) const {
  const RealVec root = range_eigenvalues().cwiseSqrt();
  Mat scaled = block;
  for (Index i = 0; i < scaled.rows(); ++i) {
    for (Index j = 0; j < scaled.cols(); ++j) scaled(i, j) *= root(j) / root(i);
  }
  return expand(scaled);
}

PsdDecomposition psd_decompose(const ComplexMatrix& a, const ToleranceConfig& tol) {
  tol.validate();
  require_square(a, "weight");
  return PsdDecomposition(a, tol);
}

ComplexMatrix fractional_power(const PsdDecomposition& d, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::InvalidArgument, "fractional power exponent must be positive");
  }
  return ComplexMatrix(d.spectral_map([s](double l) { return std::pow(l, s); }));
}

ComplexMatrix fractional_power_pinv(const PsdDecomposition& d, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::InvalidArgument, "fractional power exponent must be positive");
  }
  return ComplexMatrix(d.spectral_map([s](double l) { return std::pow(l, -s); }));
}

}  // namespace aspec
