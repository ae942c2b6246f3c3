#pragma once

#include "aspec/linalg.hpp"
#include "aspec/psd.hpp"

namespace aspec {

/// Solves X = Z^* Y. A solution exists iff X^*X <= alpha Y^*Y for some
/// alpha, which in finite dimensions is exactly N(Y) inside N(X). Returns the
/// minimal-norm solution Z = (X Y^+)^*; throws NotMajorized otherwise.
ComplexMatrix douglas_solve(const ComplexMatrix& x, const ComplexMatrix& y,
                            const ToleranceConfig& tol = {});

/// Given X^*X <= B and 0 < alpha < 1/2, returns V = X (B^alpha)^+ with
/// X = V B^alpha, V^*V <= B^{1-2 alpha} and V V^* <= (X X^*)^{1-2 alpha}.
/// Throws PreconditionFailed if X^*X is not dominated by B and
/// InvalidArgument for alpha outside (0, 1/2).
ComplexMatrix power_factorize(const ComplexMatrix& x, const PsdDecomposition& b, double alpha,
                              const ToleranceConfig& tol = {});

}  // namespace aspec
