#pragma once

#include <optional>

#include "aspec/linalg.hpp"
#include "aspec/psd.hpp"

namespace aspec {

/// ||X||_A, possibly infinite. An infinite value is carried by the flag and
/// never as a floating-point infinity.
struct ASeminormValue {
  bool finite = false;
  double value = 0.0;  // meaningful only when finite
};

/// The normalized vector state f(Z) = <Z h, h> / <A h, h>.
struct VectorState {
  Vec h;          // unit vector
  double weight;  // <A h, h>, strictly positive

  Complex apply(const Mat& z) const { return h.dot(z * h) / weight; }
};

/// Outcome of the membership test. When `member` is true the certificate
/// U = A^{1/2} X (A^{1/4})^+ satisfies A^{1/2} X = U A^{1/4} and
/// U^*U <= bound * A^{1/2}, with bound = ||X||_A^2.
struct MembershipResult {
  bool member = false;
  std::optional<ComplexMatrix> certificate;
  double bound = 0.0;
};

/// Finite A-seminorm test: X must leave N(A) invariant, i.e. P X (I - P) = 0.
MembershipResult a_membership(const PsdDecomposition& d, const ComplexMatrix& x,
                              const ToleranceConfig& tol = {});

/// The test behind a_membership, without building the certificate.
bool is_a_member(const PsdDecomposition& d, const ComplexMatrix& x, const ToleranceConfig& tol = {});

/// Largest singular value of A^{1/2} X (A^{1/2})^+ for members, infinite
/// otherwise.
ASeminormValue a_seminorm(const PsdDecomposition& d, const ComplexMatrix& x,
                          const ToleranceConfig& tol = {});

/// Independent route to the same number: sqrt of the largest eigenvalue of
/// the Hermitian pencil (X^*AX, A) restricted to range(A), solved with a
/// Cholesky-based generalized eigensolver. Throws NotMember for non-members.
double a_seminorm_oracle(const PsdDecomposition& d, const ComplexMatrix& x,
                         const ToleranceConfig& tol = {});

/// Canonical A-adjoint A^+ X^* A, satisfying A X = (X#)^* A. Throws
/// NotMember when X has no A-adjoint.
ComplexMatrix a_adjoint(const PsdDecomposition& d, const ComplexMatrix& x,
                        const ToleranceConfig& tol = {});

/// W = (A^{1/2})^+ X^* A^{1/2}, the A^{1/2}-adjoint of a member X:
/// A^{1/2} X = W^* A^{1/2}. Throws NotMember.
ComplexMatrix half_adjoint(const PsdDecomposition& d, const ComplexMatrix& x,
                           const ToleranceConfig& tol = {});

/// A X is Hermitian within tolerance.
bool is_a_selfadjoint(const ComplexMatrix& a, const ComplexMatrix& x,
                      const ToleranceConfig& tol = {});

/// Throws NotMember unless a_membership holds; shared precondition check.
void require_member(const PsdDecomposition& d, const ComplexMatrix& x, const ToleranceConfig& tol);

}  // namespace aspec
