#pragma once

#include <optional>

#include "aspec/linalg.hpp"
#include "aspec/psd.hpp"

namespace aspec {

/// Result of the A-invertibility decision. When invertible, both inverses
/// satisfy A X Y = A Y X = A; `invertible_form` is additionally invertible
/// as an ordinary matrix.
struct AInverseResult {
  bool invertible = false;
  std::optional<ComplexMatrix> canonical;
  std::optional<ComplexMatrix> invertible_form;
};

/// Constants c, alpha with (1/c) A <= X^*AX <= c A and A^2 <= alpha A X X^* A.
struct ThvnCertificate {
  double c = 0.0;
  double alpha = 0.0;
};

/// Decides A-invertibility of X via its compression P X P on range(A): X is
/// A-invertible iff that r x r block is invertible: its smallest singular
/// value must exceed rank_rtol * max(sigma_max(block), ||X||_2).
///
/// canonical = (P X P)^+, which vanishes on N(A); invertible_form extends it
/// by the identity on N(A). Non-members are reported as not invertible. For
/// A = 0 every X is A-invertible (A X Y = A holds trivially).
AInverseResult a_invertible(const PsdDecomposition& d, const ComplexMatrix& x,
                            const ToleranceConfig& tol = {});

/// A-inverse of (1 - X) from the Neumann series, for ||X||_A < 1. The series
/// is summed in the weighted coordinates of range(A), where each term's
/// spectral norm equals its A-seminorm; summation stops once a term drops
/// below atol. Throws NotMember, PreconditionFailed (||X||_A >= 1) or
/// NotConverged (max_terms exhausted).
ComplexMatrix neumann_a_inverse(const PsdDecomposition& d, const ComplexMatrix& x,
                                const ToleranceConfig& tol = {}, int max_terms = 10000);

/// Two-sided state bounds certifying A-invertibility, or nullopt exactly
/// when a_invertible says X is not A-invertible. Both constants come from
/// extreme generalized eigenvalues on range(A) and are inflated by (1 + rtol).
/// Throws NotMember.
std::optional<ThvnCertificate> thvn_certificate(const PsdDecomposition& d, const ComplexMatrix& x,
                                                const ToleranceConfig& tol = {});

/// A X Y ~ A and A Y X ~ A, each within tol scaled by |A|_max.
bool is_a_inverse(const PsdDecomposition& d, const ComplexMatrix& x, const ComplexMatrix& y,
                  const ToleranceConfig& tol = {});

}  // namespace aspec
