#include "aspec/invert.hpp"

#include <algorithm>

#include "aspec/seminorm.hpp"

namespace aspec {

namespace {

Mat kernel_projection(const PsdDecomposition& d) {
  const Index n = d.dim();
  return Mat::Identity(n, n) - d.proj().eigen();
}

double min_generalized_eigenvalue(const Mat& lhs, const Mat& rhs) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> ges(hermitian_part(lhs), hermitian_part(rhs),
                                                    Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged, "generalized eigensolver failed");
  }
  return ges.eigenvalues().minCoeff();
}

double max_generalized_eigenvalue(const Mat& lhs, const Mat& rhs) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> ges(hermitian_part(lhs), hermitian_part(rhs),
                                                    Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged, "generalized eigensolver failed");
  }
  return ges.eigenvalues().maxCoeff();
}

}  // namespace

AInverseResult a_invertible(const PsdDecomposition& d, const ComplexMatrix& x,
                            const ToleranceConfig& tol) {
  AInverseResult out;
  if (!is_a_member(d, x, tol)) return out;

  const Index n = d.dim();
  if (d.rank() == 0) {
    out.invertible = true;
    out.canonical = ComplexMatrix::zero(n, n);
    out.invertible_form = ComplexMatrix::identity(n);
    return out;
  }

  const Mat block = d.compress(x.eigen());
  const RealVec sv = singular_values(block);
  // Rounding in V_r^* X V_r is of order eps ||X||, so the cutoff never drops
  // below that floor even when the block itself is tiny.
  const double scale = std::max(sv(0), spectral_norm(x.eigen()));
  const double sigma_min = sv(sv.size() - 1);
  if (!(scale > 0.0) || sigma_min <= tol.rank_rtol * scale) return out;

  const Mat canonical = d.expand(block.partialPivLu().inverse());
  out.invertible = true;
  out.canonical = ComplexMatrix(canonical);
  out.invertible_form = ComplexMatrix(Mat(canonical + kernel_projection(d)));
  return out;
}

ComplexMatrix neumann_a_inverse(const PsdDecomposition& d, const ComplexMatrix& x,
                                const ToleranceConfig& tol, int max_terms) {
  require_member(d, x, tol);
  if (max_terms < 1) throw Error(ErrorCode::InvalidArgument, "max_terms must be positive");

  const Index n = d.dim();
  if (d.rank() == 0) return ComplexMatrix::identity(n);

  const Mat w = d.weighted_compress(x.eigen());
  if (spectral_norm(w) >= 1.0) {
    throw Error(ErrorCode::PreconditionFailed, "Neumann series needs ||X||_A < 1");
  }
  const Index r = d.rank();
  Mat sum = Mat::Identity(r, r);
  Mat term = Mat::Identity(r, r);
  bool converged = false;
  for (int k = 1; k <= max_terms; ++k) {
    term = term * w;
    sum += term;
    if (spectral_norm(term) < tol.atol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NotConverged,
                "Neumann series did not reach atol within " + std::to_string(max_terms) + " terms");
  }
  return ComplexMatrix(Mat(d.weighted_expand(sum) + kernel_projection(d)));
}

std::optional<ThvnCertificate> thvn_certificate(const PsdDecomposition& d, const ComplexMatrix& x,
                                                const ToleranceConfig& tol) {
  require_member(d, x, tol);
  if (!a_invertible(d, x, tol).invertible) return std::nullopt;
  if (d.rank() == 0) return ThvnCertificate{1.0, 1.0};

  const Mat& a = d.a().eigen();
  const Mat& xm = x.eigen();
  const Mat a_range = d.compress(a);

  const Mat xax = d.compress(xm.adjoint() * a * xm);
  const double mu_min = min_generalized_eigenvalue(xax, a_range);
  const double mu_max = max_generalized_eigenvalue(xax, a_range);

  const Mat axxa = d.compress(a * xm * xm.adjoint() * a);
  const double nu_min = min_generalized_eigenvalue(axxa, d.compress(a * a));
  if (!(mu_min > 0.0) || !(nu_min > 0.0)) return std::nullopt;

  const double inflate = 1.0 + tol.rtol;
  return ThvnCertificate{std::max(mu_max, 1.0 / mu_min) * inflate, inflate / nu_min};
}

bool is_a_inverse(const PsdDecomposition& d, const ComplexMatrix& x, const ComplexMatrix& y,
                  const ToleranceConfig& tol) {
  const Mat& a = d.a().eigen();
  const double bound = tol.bound(max_abs(a));
  return max_abs(a * x.eigen() * y.eigen() - a) <= bound &&
         max_abs(a * y.eigen() * x.eigen() - a) <= bound;
}

}  // namespace aspec
