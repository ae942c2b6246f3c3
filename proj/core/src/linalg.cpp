#include "aspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace aspec {

namespace {

// Jacobi is the accurate choice for the small matrices the property suite
// uses; divide-and-conquer keeps the truncated-sequence demos (n ~ 1000) fast.
constexpr Index kJacobiLimit = 24;

void check_finite(const Mat& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::NonFinite,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not finite");
      }
    }
  }
}

template <typename Fn>
auto with_svd(const Mat& m, unsigned options, Fn&& fn) {
  if (std::min(m.rows(), m.cols()) <= kJacobiLimit) {
    Eigen::JacobiSVD<Mat> svd(m, options);
    return fn(svd.singularValues(), svd);
  }
  Eigen::BDCSVD<Mat> svd(m, options);
  return fn(svd.singularValues(), svd);
}

}  // namespace

void ToleranceConfig::validate() const {
  for (double v : {atol, rtol, rank_rtol}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "tolerances must be finite and non-negative");
    }
  }
}

ComplexMatrix::ComplexMatrix(Mat entries) : m_(std::move(entries)) {
  if (m_.rows() < 1 || m_.cols() < 1) {
    throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  }
  check_finite(m_);
}

ComplexMatrix::ComplexMatrix(Index rows, Index cols, std::span<const Complex> row_major) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  }
  if (static_cast<Index>(row_major.size()) != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(row_major.size()));
  }
  m_.resize(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m_(i, j) = row_major[static_cast<std::size_t>(i * cols + j)];
  }
  check_finite(m_);
}

ComplexMatrix ComplexMatrix::identity(Index n) { return ComplexMatrix(Mat::Identity(n, n)); }

ComplexMatrix ComplexMatrix::zero(Index rows, Index cols) {
  return ComplexMatrix(Mat::Zero(rows, cols));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  const auto n = static_cast<Index>(diag.size());
  Mat m = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return ComplexMatrix(std::move(m));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  return ComplexMatrix(Mat(a.m_ + b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  return ComplexMatrix(Mat(a.m_ - b.m_));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  return ComplexMatrix(Mat(a.m_ * b.m_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(Mat(s * a.m_)); }

bool approx_equal(const ComplexMatrix& m, const ComplexMatrix& n, const ToleranceConfig& tol) {
  require_same_shape(m, n, "approx_equal");
  return approx_equal(m.eigen(), n.eigen(), tol);
}

bool approx_equal(const Mat& m, const Mat& n, const ToleranceConfig& tol) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "approx_equal");
  }
  return max_abs(m - n) <= tol.bound(std::max(max_abs(m), max_abs(n)));
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double spectral_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  const RealVec s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

RealVec singular_values(const Mat& m) {
  if (m.size() == 0) return RealVec();
  return with_svd(m, 0, [](const RealVec& s, const auto&) { return RealVec(s); });
}

Mat pseudo_inverse(const Mat& m, double rank_rtol) {
  if (m.size() == 0) return Mat::Zero(m.cols(), m.rows());
  return with_svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV,
                  [&](const RealVec& s, const auto& svd) {
                    Mat out = Mat::Zero(m.cols(), m.rows());
                    if (s.size() == 0 || s(0) == 0.0) return out;
                    const double cutoff = rank_rtol * s(0);
                    for (Index k = 0; k < s.size(); ++k) {
                      if (s(k) <= cutoff) break;
                      out += (svd.matrixV().col(k) / s(k)) * svd.matrixU().col(k).adjoint();
                    }
                    return out;
                  });
}

Mat range_projection(const Mat& m, double rank_rtol) {
  Mat out = Mat::Zero(m.rows(), m.rows());
  if (m.size() == 0) return out;
  return with_svd(m, Eigen::ComputeThinU, [&](const RealVec& s, const auto& svd) {
    if (s.size() == 0 || s(0) == 0.0) return out;
    const double cutoff = rank_rtol * s(0);
    for (Index k = 0; k < s.size(); ++k) {
      if (s(k) <= cutoff) break;
      out += svd.matrixU().col(k) * svd.matrixU().col(k).adjoint();
    }
    return out;
  });
}

Mat hermitian_part(const Mat& m) { return (m + m.adjoint()) * 0.5; }

RealVec hermitian_eigenvalues(const Mat& m) {
  if (m.size() == 0) return RealVec();
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool loewner_leq(const Mat& lo, const Mat& hi, const ToleranceConfig& tol) {
  const RealVec ev = hermitian_eigenvalues(hi - lo);
  if (ev.size() == 0) return true;
  const double scale = std::max(spectral_norm(lo), spectral_norm(hi));
  return ev(0) >= -tol.bound(scale);
}

double spectral_radius(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, std::string(what) + " must be square");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace aspec
