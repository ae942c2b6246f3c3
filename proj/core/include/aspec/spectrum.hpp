#pragma once

#include <optional>
#include <vector>

#include "aspec/linalg.hpp"
#include "aspec/psd.hpp"
#include "aspec/seminorm.hpp"

namespace aspec {

/// Finite A-spectrum. Points are cluster centroids sorted by (Re, Im).
/// Left and right A-spectra coincide in finite dimensions, so one set is
/// reported for both.
struct ASpectrumResult {
  std::vector<Complex> points;
  double radius = 0.0;
  bool contains_zero = false;
};

/// sigma_A(X): the nonzero eigenvalues of P X (clustered), plus 0 exactly
/// when X is not A-invertible. 0 is never read off eig(P X), which always
/// contains 0 when P != I. Empty when A = 0. Throws NotMember.
ASpectrumResult a_spectrum(const PsdDecomposition& d, const ComplexMatrix& x,
                           const ToleranceConfig& tol = {});

/// Cluster radius used to merge eigenvalues of P X and to match points:
/// 10 atol + rtol ||P X||_2.
double spectrum_cluster_radius(const PsdDecomposition& d, const ComplexMatrix& x,
                               const ToleranceConfig& tol = {});

/// max |lambda| over sigma_A(X).
double a_spectral_radius(const PsdDecomposition& d, const ComplexMatrix& x,
                         const ToleranceConfig& tol = {});

/// ||X^n||_A^{1/n} for n = 1..n_max, from powers of the weighted
/// compression with per-step renormalization (log-norm bookkeeping), so
/// large radii never overflow. Throws NotMember.
std::vector<double> gelfand_sequence(const PsdDecomposition& d, const ComplexMatrix& x, int n_max,
                                     const ToleranceConfig& tol = {});

enum class Side { Left, Right };

/// Searches for a vector state f with f(AX) = lambda that is multiplicative
/// on the requested side:
///   right: f(AXX^*A) = f(AX) f(AX^*A) = |f(AX)|^2 f(A^2)
///   left:  f(X^*AX)  = |f(AX)|^2
/// The candidate comes from the null vector of the compressed (X - lambda)
/// (left) or its adjoint (right). The state is returned only after both the
/// side condition and a 20-sample check of f(A(X - lambda)Y) = 0 (right) or
/// f(AY(X - lambda)) = 0 (left) over random members Y pass; otherwise nullopt.
/// Throws InvalidArgument if lambda is not an A-spectrum point.
std::optional<VectorState> spectrum_witness(const PsdDecomposition& d, const ComplexMatrix& x,
                                            Complex lambda, Side side,
                                            const ToleranceConfig& tol = {});

/// Side condition of a witness, exposed for independent re-checking.
bool witness_condition_holds(const PsdDecomposition& d, const ComplexMatrix& x,
                             const VectorState& f, Complex lambda, Side side,
                             const ToleranceConfig& tol = {});

/// Support-function approximation of V_A(X) = {f(AX) : f in S_A}.
///
/// For a direction theta the support value h is the largest eigenvalue of
/// the pencil (Re(e^{-i theta} A X), A) on range(A), and its eigenvector
/// gives a touching point f(AX). The K uniform directions 2 pi k / K are
/// refined adaptively: where the chord between adjacent touching points
/// leaves room under the outer corner, the chord normal is probed too (at
/// most K extra probes, largest gap first). `vertices` is the convex hull of
/// all touching points, so it lies inside V_A(X); `outer_vertices` bounds
/// the intersection of the half-planes Re(e^{-i angles[k]} z) <= support[k],
/// which contains V_A(X). Both are counterclockwise.
struct NumericalRangePolygon {
  int directions = 0;
  std::vector<Complex> vertices;
  std::vector<Complex> outer_vertices;
  std::vector<double> angles;   // ascending, in [0, 2 pi)
  std::vector<double> support;  // support value at each angle

  /// z satisfies every half-plane constraint up to `slack`.
  bool outer_contains(Complex z, double slack) const;
};

NumericalRangePolygon a_numerical_range(const PsdDecomposition& d, const ComplexMatrix& x,
                                        int directions, const ToleranceConfig& tol = {});

struct MollifierStep {
  ComplexMatrix normalized;  // X_n = Y_n / ||Y_n||_A
  double left_residual;      // ||X_n (lambda - X)||_A
  double right_residual;     // ||(lambda - X) X_n||_A
};

/// Approximate A-inverses near a spectrum point: for each lambda_n in
/// `approach`, Y_n is the canonical A-inverse of lambda_n - X. Every point
/// of a finite spectrum is a boundary point. Throws SpectrumPoint if some
/// lambda_n lies in sigma_A(X), InvalidArgument if lambda does not.
std::vector<MollifierStep> boundary_mollifier(const PsdDecomposition& d, const ComplexMatrix& x,
                                              Complex lambda, const std::vector<Complex>& approach,
                                              const ToleranceConfig& tol = {});

}  // namespace aspec
