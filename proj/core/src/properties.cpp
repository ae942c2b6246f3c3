#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aspec/douglas.hpp"
#include "aspec/invert.hpp"
#include "aspec/json_io.hpp"
#include "aspec/omega.hpp"
#include "aspec/seminorm.hpp"
#include "aspec/spectrum.hpp"

namespace aspec::harness::detail {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string num(Complex z) { return "(" + num(z.real()) + "," + num(z.imag()) + ")"; }

Mismatch mismatch(std::string observed, std::string expected) {
  return {std::move(observed), std::move(expected)};
}

Check close_matrices(const Mat& got, const Mat& want, const ToleranceConfig& tol, const char* what) {
  if (approx_equal(got, want, tol)) return std::nullopt;
  return mismatch(std::string(what) + " differs by " + num(max_abs(got - want)),
                  "within " + num(tol.bound(std::max(max_abs(got), max_abs(want)))));
}

Mat kernel_projection(const PsdDecomposition& d) {
  return Mat::Identity(d.dim(), d.dim()) - d.proj().eigen();
}

// A fresh member of the same algebra: P M P + (I - P) M' (I - P).
Mat random_member(const Trial& t) {
  const Index n = t.d.dim();
  const Mat& p = t.d.proj().eigen();
  const Mat q = kernel_projection(t.d);
  return p * random_gaussian(n, n, t.rng) * p + q * random_gaussian(n, n, t.rng) * q;
}

// Matrix supported on N(A) in both rows and columns, so A Z = Z A = 0.
Mat random_kernel_block(const Trial& t) {
  const Mat q = kernel_projection(t.d);
  return q * random_gaussian(t.d.dim(), t.d.dim(), t.rng) * q;
}

std::vector<Complex> eigenvalues(const Mat& m) {
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::NotConverged, "eigensolver failed");
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

double distance_to(const std::vector<Complex>& set, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex s : set) best = std::min(best, std::abs(s - z));
  return best;
}

// Every element of lhs with modulus above `floor` lies within `radius` of rhs,
// and vice versa.
Check same_nonzero_points(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs,
                          double floor, double radius, const char* what) {
  for (Complex z : lhs) {
    if (std::abs(z) > floor && distance_to(rhs, z) > radius) {
      return mismatch(std::string(what) + ": " + num(z) + " unmatched", "match within " + num(radius));
    }
  }
  for (Complex z : rhs) {
    if (std::abs(z) > floor && distance_to(lhs, z) > radius) {
      return mismatch(std::string(what) + ": reference point " + num(z) + " missing",
                      "match within " + num(radius));
    }
  }
  return std::nullopt;
}

std::vector<Complex> nonzero(const std::vector<Complex>& pts) {
  std::vector<Complex> out;
  for (Complex z : pts) {
    if (z != Complex(0.0, 0.0)) out.push_back(z);
  }
  return out;
}

// ---------------------------------------------------------------- linalg

Check json_roundtrip(Trial& t) {
  std::stringstream buffer;
  write_matrix(buffer, t.inst.x);
  const ComplexMatrix back = read_matrix(buffer);
  if (back.eigen() != t.inst.x.eigen()) return mismatch("round trip changed entries", "bit-identical");
  const Mat nudged = t.inst.x.eigen() + 1e-9 * random_gaussian(t.d.dim(), t.d.dim(), t.rng);
  if (!approx_equal(t.inst.x.eigen(), t.inst.x.eigen(), t.tol)) return mismatch("not reflexive", "reflexive");
  if (approx_equal(t.inst.x.eigen(), nudged, t.tol) != approx_equal(nudged, t.inst.x.eigen(), t.tol)) {
    return mismatch("not symmetric", "symmetric");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- psd

Check psd_identities(Trial& t) {
  const auto& d = t.d;
  const Mat& a = d.a().eigen();
  const Mat& s = d.sqrt().eigen();
  const Mat& pinv = d.pinv().eigen();
  const Mat& p = d.proj().eigen();
  if (d.rank() != t.spec.rank) {
    return mismatch("rank " + std::to_string(d.rank()), "rank " + std::to_string(t.spec.rank));
  }
  if (auto bad = close_matrices(s * s, a, t.tol, "sqrt^2 vs A")) return bad;
  if (auto bad = close_matrices(d.quarter().eigen() * d.quarter().eigen(), s, t.tol, "quarter^2 vs sqrt")) return bad;
  if (auto bad = close_matrices(a * pinv * a, a, t.tol, "A A+ A vs A")) return bad;
  if (auto bad = close_matrices(pinv * a * pinv, pinv, t.tol, "A+ A A+ vs A+")) return bad;
  if (auto bad = close_matrices(a * pinv, (a * pinv).adjoint(), t.tol, "A A+ Hermitian")) return bad;
  if (auto bad = close_matrices(pinv * a, (pinv * a).adjoint(), t.tol, "A+ A Hermitian")) return bad;
  if (auto bad = close_matrices(p, a * pinv, t.tol, "P vs A A+")) return bad;
  if (auto bad = close_matrices(p * p, p, t.tol, "P^2 vs P")) return bad;
  if (auto bad = close_matrices(p, p.adjoint(), t.tol, "P Hermitian")) return bad;
  const double expected_gap = d.rank() == 0 ? 0.0 : d.range_eigenvalues().minCoeff();
  if (d.gap() != expected_gap) return mismatch("gap " + num(d.gap()), num(expected_gap));
  return std::nullopt;
}

Check psd_null_space_stability(Trial& t) {
  const auto& d = t.d;
  const Mat& a = d.a().eigen();
  const Mat& p = d.proj().eigen();
  for (double s : {0.25, 0.5, 2.0}) {
    const Mat ps = range_projection(fractional_power(d, s).eigen(), t.tol.rank_rtol);
    if (auto bad = close_matrices(ps, p, t.tol, "range projection of A^s")) return bad;
  }
  if (auto bad = close_matrices(p * a, a, t.tol, "P A vs A")) return bad;
  if (auto bad = close_matrices(a * p, a, t.tol, "A P vs A")) return bad;
  const Mat& pinv = d.pinv().eigen();
  if (auto bad = close_matrices(pinv, pinv.adjoint(), t.tol, "A+ Hermitian")) return bad;
  const double low = hermitian_eigenvalues(pinv)(0);
  if (low < -t.tol.atol) return mismatch("lambda_min(A+) = " + num(low), ">= -atol");
  const Mat prod = fractional_power(d, 0.5).eigen() * fractional_power(d, 1.5).eigen();
  if (auto bad = close_matrices(prod, fractional_power(d, 2.0).eigen(), t.tol, "A^s A^t vs A^(s+t)")) return bad;
  return std::nullopt;
}

// ---------------------------------------------------------------- douglas

Check douglas_solution(Trial& t) {
  const Index n = t.d.dim();
  // N(Y) = N(A) by construction, and X = K Y so N(Y) lies in N(X).
  const Mat y = random_gaussian(n, n, t.rng) * t.d.proj().eigen();
  const Mat x = random_gaussian(n, n, t.rng) * y;
  if (t.d.rank() > 0) {
    const Mat z = douglas_solve(ComplexMatrix(x), ComplexMatrix(y), t.tol).eigen();
    if (auto bad = close_matrices(z.adjoint() * y, x, t.tol, "Z^* Y vs X")) return bad;
    const double alpha = std::pow(spectral_norm(x * pseudo_inverse(y, t.tol.rank_rtol)), 2);
    if (!loewner_leq(x.adjoint() * x, alpha * y.adjoint() * y, t.tol)) {
      return mismatch("X^*X exceeds alpha Y^*Y", "X^*X <= alpha Y^*Y");
    }
  }
  if (t.d.rank() < n) {
    try {
      douglas_solve(ComplexMatrix(random_gaussian(n, n, t.rng)), ComplexMatrix(y), t.tol);
      return mismatch("solved a non-majorized pair", "NotMajorized");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotMajorized) throw;
    }
  }
  return std::nullopt;
}

Check douglas_power_factorization(Trial& t) {
  const Index n = t.d.dim();
  const Mat x = 0.5 * random_gaussian(n, n, t.rng) * t.d.proj().eigen();
  const Mat b = hermitian_part(x.adjoint() * x + t.d.a().eigen());
  const PsdDecomposition bd = psd_decompose(ComplexMatrix(b), t.tol);
  std::uniform_real_distribution<double> pick(0.05, 0.45);
  const double alpha = pick(t.rng);
  const Mat v = power_factorize(ComplexMatrix(x), bd, alpha, t.tol).eigen();
  if (auto bad = close_matrices(v * fractional_power(bd, alpha).eigen(), x, t.tol, "V B^alpha vs X")) {
    return bad;
  }
  if (!loewner_leq(v.adjoint() * v, fractional_power(bd, 1.0 - 2.0 * alpha).eigen(), t.tol)) {
    return mismatch("V^*V exceeds B^(1-2alpha)", "V^*V <= B^(1-2alpha)");
  }
  const PsdDecomposition xx = psd_decompose(ComplexMatrix(Mat(hermitian_part(x * x.adjoint()))), t.tol);
  if (!loewner_leq(v * v.adjoint(), fractional_power(xx, 1.0 - 2.0 * alpha).eigen(), t.tol)) {
    return mismatch("V V^* exceeds (X X^*)^(1-2alpha)", "V V^* <= (X X^*)^(1-2alpha)");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- seminorm

Check seminorm_oracle_agreement(Trial& t) {
  const ASeminormValue v = a_seminorm(t.d, t.inst.x, t.tol);
  if (!v.finite) return mismatch("infinite seminorm", "finite for a member");
  const double oracle = a_seminorm_oracle(t.d, t.inst.x, t.tol);
  const double bound = t.tol.bound(std::max(1.0, v.value));
  if (std::abs(v.value - oracle) > bound) {
    return mismatch(num(v.value) + " vs oracle " + num(oracle), "difference <= " + num(bound));
  }
  return std::nullopt;
}

Check seminorm_membership(Trial& t) {
  const MembershipResult m = a_membership(t.d, t.inst.x, t.tol);
  if (!m.member) return mismatch("generated X rejected", "member");
  const Mat& s = t.d.sqrt().eigen();
  const Mat& u = m.certificate->eigen();
  if (auto bad = close_matrices(u * t.d.quarter().eigen(), s * t.inst.x.eigen(), t.tol, "U A^(1/4) vs A^(1/2) X")) {
    return bad;
  }
  if (!loewner_leq(u.adjoint() * u, m.bound * s, t.tol)) {
    return mismatch("U^*U exceeds c A^(1/2)", "U^*U <= c A^(1/2)");
  }
  const Index n = t.d.dim();
  if (t.d.rank() > 0 && t.d.rank() < n) {
    const ComplexMatrix generic(random_gaussian(n, n, t.rng));
    if (a_membership(t.d, generic, t.tol).member || a_seminorm(t.d, generic, t.tol).finite) {
      return mismatch("generic X accepted", "non-member");
    }
  }
  return std::nullopt;
}

Check seminorm_submultiplicative(Trial& t) {
  const ComplexMatrix y(random_member(t));
  const double nx = a_seminorm(t.d, t.inst.x, t.tol).value;
  const double ny = a_seminorm(t.d, y, t.tol).value;
  const double nxy = a_seminorm(t.d, t.inst.x * y, t.tol).value;
  const double bound = nx * ny + t.tol.bound(nx * ny);
  if (nxy > bound) return mismatch(num(nxy), "<= " + num(bound));
  return std::nullopt;
}

Check seminorm_zero_law(Trial& t) {
  const Mat& a = t.d.a().eigen();
  const double scale = std::max(1.0, spectral_norm(a));
  for (const Mat& x : {t.inst.x.eigen(), random_kernel_block(t)}) {
    const double bound = t.tol.bound(scale * std::max(1.0, max_abs(x)));
    const bool zero_norm = a_seminorm(t.d, ComplexMatrix(x), t.tol).value <= bound;
    const bool zero_product = max_abs(a * x) <= bound;
    if (zero_norm != zero_product) {
      return mismatch(std::string("seminorm zero: ") + (zero_norm ? "yes" : "no"),
                      std::string("A X zero: ") + (zero_product ? "yes" : "no"));
    }
  }
  return std::nullopt;
}

Check seminorm_adjoint(Trial& t) {
  const Mat& a = t.d.a().eigen();
  const Mat& x = t.inst.x.eigen();
  const ComplexMatrix sharp = a_adjoint(t.d, t.inst.x, t.tol);
  if (auto bad = close_matrices(a * x, sharp.eigen().adjoint() * a, t.tol, "A X vs (X#)^* A")) return bad;
  if (!a_membership(t.d, sharp, t.tol).member) return mismatch("X# not a member", "member");
  if (!is_a_selfadjoint(t.d.a(), t.inst.x + sharp, t.tol)) {
    return mismatch("A (X + X#) not Hermitian", "A-selfadjoint");
  }
  return std::nullopt;
}

Check seminorm_state_supremum(Trial& t) {
  if (t.d.rank() == 0) return std::nullopt;
  const Mat& a = t.d.a().eigen();
  const Mat& x = t.inst.x.eigen();
  const Mat xax = x.adjoint() * a * x;
  const double norm = a_seminorm(t.d, t.inst.x, t.tol).value;
  const double sup = norm * norm;
  std::uniform_int_distribution<Index> width(1, t.d.dim());
  for (int sample = 0; sample < 5; ++sample) {
    const Mat b = random_gaussian(t.d.dim(), width(t.rng), t.rng);
    const Mat rho = b * b.adjoint() / (b * b.adjoint()).trace();
    const double fa = (rho * a).trace().real();
    if (fa <= t.tol.atol) continue;
    const double ratio = (rho * xax).trace().real() / fa;
    if (ratio > sup + t.tol.bound(sup)) {
      return mismatch("density state ratio " + num(ratio), "<= ||X||_A^2 = " + num(sup));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- invert

Check invert_left_right(Trial& t) {
  const AInverseResult r = a_invertible(t.d, t.inst.x, t.tol);
  if (!r.invertible) return std::nullopt;
  if (!is_a_inverse(t.d, t.inst.x, *r.canonical, t.tol)) return mismatch("canonical fails", "A X Y = A Y X = A");
  if (!is_a_inverse(t.d, t.inst.x, *r.invertible_form, t.tol)) {
    return mismatch("invertible form fails", "A X Y = A Y X = A");
  }
  const RealVec sv = singular_values(r.invertible_form->eigen());
  if (sv(sv.size() - 1) <= t.tol.atol) {
    return mismatch("sigma_min " + num(sv(sv.size() - 1)), "> atol");
  }
  return std::nullopt;
}

Check invert_certificate(Trial& t) {
  const bool invertible = a_invertible(t.d, t.inst.x, t.tol).invertible;
  const auto cert = thvn_certificate(t.d, t.inst.x, t.tol);
  if (cert.has_value() != invertible) {
    return mismatch(std::string("certificate ") + (cert ? "present" : "absent"),
                    std::string("A-invertible: ") + (invertible ? "yes" : "no"));
  }
  if (!cert) return std::nullopt;
  const Index n = t.d.dim();
  const Mat& a = t.d.a().eigen();
  const Mat& x = t.inst.x.eigen();
  const Mat slack = t.tol.atol * Mat::Identity(n, n);
  const Mat xax = x.adjoint() * a * x;
  if (!loewner_leq(a / cert->c, xax + slack, t.tol)) return mismatch("(1/c) A exceeds X^*AX", "(1/c) A <= X^*AX");
  if (!loewner_leq(xax, cert->c * a + slack, t.tol)) return mismatch("X^*AX exceeds c A", "X^*AX <= c A");
  if (!loewner_leq(a * a, cert->alpha * a * x * x.adjoint() * a + slack, t.tol)) {
    return mismatch("A^2 exceeds alpha A X X^* A", "A^2 <= alpha A X X^* A");
  }
  return std::nullopt;
}

Check invert_product_rule(Trial& t) {
  const ComplexMatrix y(random_member(t));
  const AInverseResult rx = a_invertible(t.d, t.inst.x, t.tol);
  const AInverseResult ry = a_invertible(t.d, y, t.tol);
  if (!rx.invertible || !ry.invertible) return std::nullopt;
  const ComplexMatrix product = t.inst.x * y;
  const ComplexMatrix inverse = *ry.canonical * *rx.canonical;
  if (!is_a_inverse(t.d, product, inverse, t.tol)) return mismatch("W Z fails for X Y", "A-inverse");
  return std::nullopt;
}

Check invert_non_uniqueness(Trial& t) {
  const AInverseResult r = a_invertible(t.d, t.inst.x, t.tol);
  if (!r.invertible) return std::nullopt;
  const ComplexMatrix other(Mat(r.canonical->eigen() + random_kernel_block(t)));
  if (!is_a_inverse(t.d, t.inst.x, other, t.tol)) return mismatch("Y + Z fails", "A-inverse");
  return std::nullopt;
}

Check invert_compression_equivalence(Trial& t) {
  const ComplexMatrix& p = t.d.proj();
  const bool v = a_invertible(t.d, t.inst.x, t.tol).invertible;
  const bool vr = a_invertible(t.d, t.inst.x * p, t.tol).invertible;
  const bool vl = a_invertible(t.d, p * t.inst.x, t.tol).invertible;
  if (v != vr || v != vl) {
    return mismatch("X/XP/PX: " + std::to_string(v) + std::to_string(vr) + std::to_string(vl), "all equal");
  }
  return std::nullopt;
}

Check invert_inverse_equivalence(Trial& t) {
  const AInverseResult r = a_invertible(t.d, t.inst.x, t.tol);
  if (!r.invertible) return std::nullopt;
  const Mat& a = t.d.a().eigen();
  const Mat& p = t.d.proj().eigen();
  // Independent second inverse: Moore-Penrose inverse of P X P.
  const Mat alt = pseudo_inverse(p * t.inst.x.eigen() * p, t.tol.rank_rtol);
  if (!is_a_inverse(t.d, t.inst.x, ComplexMatrix(alt), t.tol)) return mismatch("(PXP)^+ fails", "A-inverse");
  if (auto bad = close_matrices(a * r.canonical->eigen(), a * alt, t.tol, "A Y1 vs A Y2")) return bad;
  return close_matrices(a * r.canonical->eigen(), a * r.invertible_form->eigen(), t.tol,
                        "A canonical vs A invertible_form");
}

Check invert_duality(Trial& t) {
  const AInverseResult r = a_invertible(t.d, t.inst.x, t.tol);
  if (!r.invertible) return std::nullopt;
  const ComplexMatrix w = half_adjoint(t.d, t.inst.x, t.tol);
  const ComplexMatrix rr = half_adjoint(t.d, *r.canonical, t.tol);
  const Mat& s = t.d.sqrt().eigen();
  if (auto bad = close_matrices(s * t.inst.x.eigen(), w.eigen().adjoint() * s, t.tol, "A^(1/2) X vs W^* A^(1/2)")) {
    return bad;
  }
  if (!is_a_inverse(t.d, w, rr, t.tol)) return mismatch("(W, R) fails", "A W R = A R W = A");
  return std::nullopt;
}

Check invert_neumann(Trial& t) {
  const double norm = a_seminorm(t.d, t.inst.x, t.tol).value;
  if (!(norm > 0.0)) return std::nullopt;
  const Index n = t.d.dim();
  const Mat& a = t.d.a().eigen();
  const ComplexMatrix x(Mat(t.inst.x.eigen() * (0.9 / norm)));
  const ComplexMatrix one_minus(Mat(Mat::Identity(n, n) - x.eigen()));
  const Mat y = neumann_a_inverse(t.d, x, t.tol).eigen();
  if (auto bad = close_matrices(a * one_minus.eigen() * y, a, t.tol, "A (1 - X) Y vs A")) return bad;
  const AInverseResult r = a_invertible(t.d, one_minus, t.tol);
  if (!r.invertible) return mismatch("1 - X not A-invertible", "A-invertible");
  if (auto bad = close_matrices(a * y, a * r.canonical->eigen(), t.tol, "A neumann vs A canonical")) return bad;
  try {
    neumann_a_inverse(t.d, ComplexMatrix(Mat(t.inst.x.eigen() * (1.1 / norm))), t.tol);
    return mismatch("series accepted ||X||_A = 1.1", "PreconditionFailed");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionFailed) throw;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- spectrum

Check spectrum_compression(Trial& t) {
  const ASpectrumResult s = a_spectrum(t.d, t.inst.x, t.tol);
  if (t.d.rank() == 0) {
    if (!s.points.empty()) return mismatch("nonempty spectrum for A = 0", "empty");
    return std::nullopt;
  }
  const double radius = spectrum_cluster_radius(t.d, t.inst.x, t.tol);
  const std::vector<Complex> reference = eigenvalues(t.d.compress(t.inst.x.eigen()));
  return same_nonzero_points(nonzero(s.points), reference, 2.0 * radius, radius,
                             "sigma_A minus 0 vs eig of the compression");
}

Check spectrum_zero_point(Trial& t) {
  const ASpectrumResult s = a_spectrum(t.d, t.inst.x, t.tol);
  const bool invertible = a_invertible(t.d, t.inst.x, t.tol).invertible;
  const bool has_zero = std::find(s.points.begin(), s.points.end(), Complex(0.0, 0.0)) != s.points.end();
  if (s.contains_zero != !invertible || has_zero != s.contains_zero) {
    return mismatch("contains_zero " + std::to_string(s.contains_zero), "iff not A-invertible");
  }
  double radius = 0.0;
  for (Complex z : s.points) radius = std::max(radius, std::abs(z));
  if (radius != s.radius) return mismatch("radius " + num(s.radius), num(radius));
  if (!std::is_sorted(s.points.begin(), s.points.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
      })) {
    return mismatch("unsorted points", "sorted by (Re, Im)");
  }
  return std::nullopt;
}

Check spectrum_radius_domination(Trial& t) {
  const double ra = a_spectral_radius(t.d, t.inst.x, t.tol);
  const double r = spectral_radius(t.inst.x.eigen());
  if (ra > r + t.tol.bound(r)) return mismatch("r_A " + num(ra), "<= r(X) = " + num(r));
  return std::nullopt;
}

Check spectrum_gelfand(Trial& t) {
  const double norm = a_seminorm(t.d, t.inst.x, t.tol).value;
  const double factor = norm > 2.0 ? 2.0 / norm : 1.0;
  const ComplexMatrix x(Mat(t.inst.x.eigen() * factor));
  const double ra = a_spectral_radius(t.d, x, t.tol);
  if (ra != a_spectrum(t.d, x, t.tol).radius) return mismatch("radius routes disagree", "equal");
  const std::vector<double> seq = gelfand_sequence(t.d, x, 256, t.tol);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] < ra - t.tol.bound(ra)) {
      return mismatch("term " + std::to_string(k + 1) + " = " + num(seq[k]), ">= r_A = " + num(ra));
    }
  }
  const double gap = std::abs(seq.back() - ra);
  if (gap > 0.1 * std::max(1.0, ra)) return mismatch("term 256 off by " + num(gap), "<= 0.1 max(1, r_A)");
  return std::nullopt;
}

Check spectrum_numerical_range(Trial& t) {
  const ASpectrumResult s = a_spectrum(t.d, t.inst.x, t.tol);
  const NumericalRangePolygon poly = a_numerical_range(t.d, t.inst.x, 64, t.tol);
  double scale = 0.0;
  for (double h : poly.support) scale = std::max(scale, std::abs(h));
  const double slack = t.tol.bound(scale);
  for (Complex z : s.points) {
    if (!poly.outer_contains(z, slack)) return mismatch(num(z) + " outside V_A", "sigma_A inside V_A");
  }
  for (Complex z : poly.vertices) {
    if (!poly.outer_contains(z, slack)) return mismatch("inner vertex " + num(z) + " outside", "inner inside outer");
  }
  return std::nullopt;
}

Check spectrum_witness_validity(Trial& t) {
  const ASpectrumResult s = a_spectrum(t.d, t.inst.x, t.tol);
  for (Complex lambda : s.points) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto f = spectrum_witness(t.d, t.inst.x, lambda, side, t.tol);
      if (!f) continue;
      if (!witness_condition_holds(t.d, t.inst.x, *f, lambda, side, t.tol)) {
        return mismatch("witness for " + num(lambda) + " fails its side condition", "condition holds");
      }
      const Complex value = f->apply(t.d.a().eigen() * t.inst.x.eigen());
      if (std::abs(value - lambda) > t.tol.bound(std::abs(lambda))) {
        return mismatch("f(AX) = " + num(value), num(lambda));
      }
    }
  }
  return std::nullopt;
}

Check spectrum_block_permanence(Trial& t) {
  std::uniform_int_distribution<Index> dims(2, 4);
  RandomInstanceSpec first;
  RandomInstanceSpec second;
  first.dim = dims(t.rng);
  second.dim = dims(t.rng);
  first.rank = std::uniform_int_distribution<Index>(0, first.dim)(t.rng);
  second.rank = std::uniform_int_distribution<Index>(0, second.dim)(t.rng);
  first.seed = t.rng();
  second.seed = t.rng();
  const Instance inst = generate_block_instance(first, second);
  const PsdDecomposition d = psd_decompose(inst.a, t.tol);
  const AInverseResult r = a_invertible(d, inst.x, t.tol);
  if (!r.invertible) return std::nullopt;
  const Mat& y = r.canonical->eigen();
  const Index n1 = first.dim;
  const Index n2 = second.dim;
  const double leak = std::max(max_abs(y.topRightCorner(n1, n2)), max_abs(y.bottomLeftCorner(n2, n1)));
  if (leak > t.tol.bound(max_abs(y))) return mismatch("off-diagonal block " + num(leak), "zero");
  return std::nullopt;
}

Check spectrum_full_rank_classical(Trial& t) {
  if (t.d.rank() != t.d.dim()) return std::nullopt;
  const ASpectrumResult s = a_spectrum(t.d, t.inst.x, t.tol);
  const double radius = spectrum_cluster_radius(t.d, t.inst.x, t.tol);
  if (s.contains_zero) return mismatch("0 in sigma_A", "sigma(X) of an invertible matrix");
  return same_nonzero_points(s.points, eigenvalues(t.inst.x.eigen()), 0.0, radius, "sigma_A vs sigma(X)");
}

Check spectrum_mollifier(Trial& t) {
  const ASpectrumResult s = a_spectrum(t.d, t.inst.x, t.tol);
  if (s.points.empty()) return std::nullopt;
  const Complex lambda = s.points.back();
  double nearest_other = std::numeric_limits<double>::infinity();
  for (Complex z : s.points) {
    if (z != lambda) nearest_other = std::min(nearest_other, std::abs(z - lambda));
  }
  std::vector<Complex> approach;
  for (int k = 1; k <= 4; ++k) {
    const double step = std::pow(10.0, -k) * std::min(1.0, nearest_other / 2.0);
    approach.push_back(lambda + std::polar(step, 0.3 * k));
  }
  const auto steps = boundary_mollifier(t.d, t.inst.x, lambda, approach, t.tol);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    // ||X_n (lambda - X)||_A <= |lambda - lambda_n| + 1/||Y_n||_A <= 2 |lambda - lambda_n|.
    const double cap = 2.0 * std::abs(approach[k] - lambda);
    const double bound = cap + t.tol.bound(cap) + t.tol.bound(1.0);
    if (steps[k].left_residual > bound || steps[k].right_residual > bound) {
      return mismatch("residuals " + num(steps[k].left_residual) + ", " + num(steps[k].right_residual),
                      "<= " + num(bound));
    }
  }
  return std::nullopt;
}

Check collapse_identity_weight(Trial& t) {
  const Index n = t.d.dim();
  const PsdDecomposition id = psd_decompose(ComplexMatrix::identity(n), t.tol);
  const Mat x = random_gaussian(n, n, t.rng);
  const ComplexMatrix xm(x);
  if (!a_membership(id, xm, t.tol).member) return mismatch("X rejected for A = I", "member");
  const double norm = a_seminorm(id, xm, t.tol).value;
  const double op = spectral_norm(x);
  if (std::abs(norm - op) > t.tol.bound(op)) return mismatch(num(norm), "||X|| = " + num(op));
  if (auto bad = close_matrices(a_adjoint(id, xm, t.tol).eigen(), x.adjoint(), t.tol, "X# vs X^*")) return bad;
  const ASpectrumResult s = a_spectrum(id, xm, t.tol);
  return same_nonzero_points(s.points, eigenvalues(x), 0.0, spectrum_cluster_radius(id, xm, t.tol),
                             "sigma_I(X) vs sigma(X)");
}

// ---------------------------------------------------------------- omega

omega::RationalExpr random_branch(std::mt19937_64& rng) {
  using omega::Polynomial;
  using omega::Rational;
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> positive(1, 4);
  std::uniform_int_distribution<int> degree(0, 2);
  std::vector<Rational> num;
  for (int k = 0, deg = degree(rng); k <= deg; ++k) num.emplace_back(coef(rng));
  // Denominator with positive coefficients never vanishes for n >= 1.
  std::vector<Rational> den;
  for (int k = 0, deg = degree(rng); k <= deg; ++k) den.emplace_back(positive(rng));
  return {Polynomial::from_coefficients(std::move(num)), Polynomial::from_coefficients(std::move(den))};
}

Check omega_exact_algebra(Trial& t) {
  using namespace omega;
  const OmegaElement e(random_branch(t.rng), random_branch(t.rng));
  const OmegaElement reparsed = parse_element(e.to_string());
  if (!(reparsed == e)) return mismatch(reparsed.to_string(), e.to_string());
  const OmegaElement sum = e + e.scaled(Rational(-1));
  if (!sum.odd().is_zero() || !sum.even().is_zero()) return mismatch(sum.to_string(), "zero element");
  const OmegaElement sq = e * e;
  if (e.value_at_zero()) {
    const Rational v = *e.value_at_zero();
    if (!sq.value_at_zero() || *sq.value_at_zero() != v * v) {
      return mismatch("square loses the limit", "limit of square = square of limit");
    }
  }
  for (int k = 1; k <= 6; ++k) {
    const BigInt kk(k);
    if (sq.at_point(kk) != e.at_point(kk) * e.at_point(kk)) return mismatch("pointwise square", "exact");
  }
  return std::nullopt;
}

Check omega_classification(Trial& t) {
  using namespace omega;
  std::bernoulli_distribution coin(0.3);
  const RationalExpr odd = coin(t.rng) ? RationalExpr() : random_branch(t.rng);
  const RationalExpr even = coin(t.rng) ? RationalExpr() : random_branch(t.rng);
  const OmegaElement a(odd, even);
  const OmegaElement x(random_branch(t.rng), random_branch(t.rng));
  const InverseClassification c = a_inverse_classify(a, x);
  if (c.verdict == Verdict::ContinuousInverse || c.verdict == Verdict::BoundedDiscontinuous) {
    if (!c.witness) return mismatch("missing witness", "witness present");
    const OmegaElement axy = a * x * *c.witness;
    if (!(axy.odd() == a.odd()) || !(axy.even() == a.even())) return mismatch(axy.to_string(), a.to_string());
    if ((c.verdict == Verdict::ContinuousInverse) != c.witness->continuous()) {
      return mismatch("verdict/continuity mismatch", "ContinuousInverse iff witness continuous");
    }
  }
  if (c.verdict == Verdict::Unbounded) {
    if (!c.obstruction || limit_at_infinity(c.obstruction->expr).finite()) {
      return mismatch("obstruction without divergence", "divergent forced branch");
    }
  }
  return std::nullopt;
}

}  // namespace

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"linalg.json_roundtrip", json_roundtrip},
      {"psd.identities", psd_identities},
      {"psd.null_space_stability", psd_null_space_stability},
      {"douglas.solution", douglas_solution},
      {"douglas.power_factorization", douglas_power_factorization},
      {"seminorm.oracle_agreement", seminorm_oracle_agreement},
      {"seminorm.membership", seminorm_membership},
      {"seminorm.submultiplicative", seminorm_submultiplicative},
      {"seminorm.zero_law", seminorm_zero_law},
      {"seminorm.adjoint_identity", seminorm_adjoint},
      {"seminorm.state_supremum", seminorm_state_supremum},
      {"invert.left_right", invert_left_right},
      {"invert.certificate_equivalence", invert_certificate},
      {"invert.product_rule", invert_product_rule},
      {"invert.non_uniqueness", invert_non_uniqueness},
      {"invert.compression_equivalence", invert_compression_equivalence},
      {"invert.inverse_equivalence", invert_inverse_equivalence},
      {"invert.duality", invert_duality},
      {"invert.neumann", invert_neumann},
      {"spectrum.compression", spectrum_compression},
      {"spectrum.zero_point", spectrum_zero_point},
      {"spectrum.radius_domination", spectrum_radius_domination},
      {"spectrum.gelfand", spectrum_gelfand},
      {"spectrum.numerical_range", spectrum_numerical_range},
      {"spectrum.witness_validity", spectrum_witness_validity},
      {"spectrum.block_permanence", spectrum_block_permanence},
      {"spectrum.full_rank_classical", spectrum_full_rank_classical},
      {"spectrum.mollifier", spectrum_mollifier},
      {"collapse.identity_weight", collapse_identity_weight},
      {"omega.exact_algebra", omega_exact_algebra},
      {"omega.classification", omega_classification},
  };
  return props;
}

}  // namespace aspec::harness::detail
