#pragma once

// Dense complex matrices, the tolerance policy, and the small set of
// spectral helpers every other module builds on.

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "aspec/error.hpp"

namespace aspec {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Absolute/relative tolerances shared by every operation. There are no
/// hidden per-operation tolerances; everything derives from these three.
struct ToleranceConfig {
  double atol = 1e-10;
  double rtol = 1e-8;
  double rank_rtol = 1e-10;

  /// Throws InvalidArgument if any field is negative or non-finite.
  void validate() const;

  /// atol + rtol * scale: the bound used for "zero within tolerance"
  /// against a quantity of magnitude `scale`.
  double bound(double scale) const { return atol + rtol * scale; }
};

/// Dense rows x cols complex matrix. Immutable after construction; entries are
/// checked finite and both dimensions must be positive.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(Mat entries);

  /// Row-major entries; throws ShapeMismatch if the size is not rows * cols.
  ComplexMatrix(Index rows, Index cols, std::span<const Complex> row_major);

  static ComplexMatrix identity(Index n);
  static ComplexMatrix zero(Index rows, Index cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  Index rows() const noexcept { return m_.rows(); }
  Index cols() const noexcept { return m_.cols(); }
  bool is_square() const noexcept { return m_.rows() == m_.cols(); }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  const Mat& eigen() const noexcept { return m_; }

  ComplexMatrix adjoint() const { return ComplexMatrix(Mat(m_.adjoint())); }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  Mat m_;
};

/// max_ij |M_ij - N_ij| <= atol + rtol * max(|M|_max, |N|_max).
/// Throws ShapeMismatch when the shapes differ.
bool approx_equal(const ComplexMatrix& m, const ComplexMatrix& n, const ToleranceConfig& tol = {});
bool approx_equal(const Mat& m, const Mat& n, const ToleranceConfig& tol = {});

double max_abs(const Mat& m);
double spectral_norm(const Mat& m);
RealVec singular_values(const Mat& m);

/// Moore-Penrose inverse with singular values <= rank_rtol * sigma_max dropped.
Mat pseudo_inverse(const Mat& m, double rank_rtol);

/// Orthogonal projection onto the column space of m, same cutoff policy.
Mat range_projection(const Mat& m, double rank_rtol);

Mat hermitian_part(const Mat& m);

/// Ascending eigenvalues of the Hermitian part of m.
RealVec hermitian_eigenvalues(const Mat& m);

/// Loewner order check lo <= hi, i.e. lambda_min(hi - lo) >= -tol.bound(scale)
/// with scale the larger spectral norm of the two.
bool loewner_leq(const Mat& lo, const Mat& hi, const ToleranceConfig& tol = {});

/// Spectral radius of a square matrix via its eigenvalues.
double spectral_radius(const Mat& m);

void require_square(const ComplexMatrix& m, const char* what);
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

}  // namespace aspec
