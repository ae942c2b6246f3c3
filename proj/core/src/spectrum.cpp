#include "aspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>

#include "aspec/invert.hpp"

namespace aspec {

namespace {

// Single-linkage clustering of nearby eigenvalues; returns centroids.
std::vector<Complex> cluster(const std::vector<Complex>& values, double radius) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(values[i] - values[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<Complex> sums(n, Complex(0.0, 0.0));
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sums[find(i)] += values[i];
    ++counts[find(i)];
  }
  std::vector<Complex> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] > 0) out.push_back(sums[i] / static_cast<double>(counts[i]));
  }
  return out;
}

bool lex_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

double distance_to_spectrum(const ASpectrumResult& spec, Complex lambda) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex p : spec.points) best = std::min(best, std::abs(p - lambda));
  return best;
}

void require_spectrum_point(const PsdDecomposition& d, const ComplexMatrix& x, Complex lambda,
                            const ToleranceConfig& tol) {
  const ASpectrumResult spec = a_spectrum(d, x, tol);
  const double radius = 10.0 * spectrum_cluster_radius(d, x, tol);
  if (!(distance_to_spectrum(spec, lambda) <= radius)) {
    throw Error(ErrorCode::InvalidArgument, "lambda is not a point of the A-spectrum");
  }
}

Vec smallest_right_singular_vector(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(m.cols() - 1);
}

Mat random_member(const PsdDecomposition& d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const Index n = d.dim();
  auto gaussian = [&] {
    Mat m(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
    }
    return m;
  };
  const Mat& p = d.proj().eigen();
  const Mat q = Mat::Identity(n, n) - p;
  return p * gaussian() * p + q * gaussian() * q;
}

bool close(Complex lhs, Complex rhs, const ToleranceConfig& tol) {
  return std::abs(lhs - rhs) <= tol.bound(std::max(std::abs(lhs), std::abs(rhs)));
}

}  // namespace

double spectrum_cluster_radius(const PsdDecomposition& d, const ComplexMatrix& x,
                               const ToleranceConfig& tol) {
  return 10.0 * tol.atol + tol.rtol * spectral_norm(d.proj().eigen() * x.eigen());
}

ASpectrumResult a_spectrum(const PsdDecomposition& d, const ComplexMatrix& x,
                           const ToleranceConfig& tol) {
  require_member(d, x, tol);
  const Mat px = d.proj().eigen() * x.eigen();
  const double radius = spectrum_cluster_radius(d, x, tol);

  Eigen::ComplexEigenSolver<Mat> es(px, false);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::NotConverged, "eigensolver failed");
  std::vector<Complex> nonzero;
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const Complex mu = es.eigenvalues()(k);
    if (std::abs(mu) > radius) nonzero.push_back(mu);
  }

  ASpectrumResult out;
  out.points = cluster(nonzero, radius);
  if (!a_invertible(d, x, tol).invertible) {
    out.points.emplace_back(0.0, 0.0);
    out.contains_zero = true;
  }
  std::sort(out.points.begin(), out.points.end(), lex_less);
  for (Complex p : out.points) out.radius = std::max(out.radius, std::abs(p));
  return out;
}

double a_spectral_radius(const PsdDecomposition& d, const ComplexMatrix& x,
                         const ToleranceConfig& tol) {
  return a_spectrum(d, x, tol).radius;
}

std::vector<double> gelfand_sequence(const PsdDecomposition& d, const ComplexMatrix& x, int n_max,
                                     const ToleranceConfig& tol) {
  require_member(d, x, tol);
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  if (d.rank() == 0) {
    out.assign(static_cast<std::size_t>(n_max), 0.0);
    return out;
  }

  const Mat w = d.weighted_compress(x.eigen());
  Mat power = w;
  double log_norm = 0.0;
  bool vanished = false;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1 && !vanished) power = power * w;
    const double nu = vanished ? 0.0 : spectral_norm(power);
    if (nu == 0.0) {
      vanished = true;
      out.push_back(0.0);
      continue;
    }
    log_norm += std::log(nu);
    // Componentwise real division: complex division by nu would form nu^2.
    power = power.unaryExpr([nu](Complex z) { return Complex(z.real() / nu, z.imag() / nu); });
    out.push_back(std::exp(log_norm / n));
  }
  return out;
}

bool witness_condition_holds(const PsdDecomposition& d, const ComplexMatrix& x,
                             const VectorState& f, Complex lambda, Side side,
                             const ToleranceConfig& tol) {
  const Mat& a = d.a().eigen();
  const Mat& xm = x.eigen();
  const Complex fax = f.apply(a * xm);
  if (!close(fax, lambda, tol)) return false;
  if (side == Side::Left) {
    return close(f.apply(xm.adjoint() * a * xm), std::norm(fax), tol);
  }
  const Complex axxa = f.apply(a * xm * xm.adjoint() * a);
  const Complex product = fax * f.apply(a * xm.adjoint() * a);
  return close(axxa, product, tol) && close(axxa, std::norm(fax) * f.apply(a * a), tol);
}

std::optional<VectorState> spectrum_witness(const PsdDecomposition& d, const ComplexMatrix& x,
                                            Complex lambda, Side side,
                                            const ToleranceConfig& tol) {
  require_spectrum_point(d, x, lambda, tol);
  if (d.rank() == 0) return std::nullopt;

  const Index r = d.rank();
  const Mat block = d.compress(x.eigen());
  const Mat basis = d.range_basis();
  Vec h;
  if (side == Side::Left) {
    // C y = lambda y  =>  P X h = lambda h for h = V_r y, so A(X - lambda)h = 0.
    h = basis * smallest_right_singular_vector(block - lambda * Mat::Identity(r, r));
  } else {
    // C^* z = conj(lambda) z  =>  X^* A w = conj(lambda) A w for w = A^+ V_r z.
    const Vec z = smallest_right_singular_vector(block.adjoint() -
                                                 std::conj(lambda) * Mat::Identity(r, r));
    h = basis * z.cwiseQuotient(d.range_eigenvalues().cast<Complex>());
  }
  h.normalize();
  const double weight = h.dot(d.a().eigen() * h).real();
  if (!(weight > tol.atol)) return std::nullopt;

  VectorState f{h, weight};
  if (!witness_condition_holds(d, x, f, lambda, side, tol)) return std::nullopt;

  const Mat& a = d.a().eigen();
  const Mat shifted = x.eigen() - lambda * Mat::Identity(d.dim(), d.dim());
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(d.dim()));
  for (int trial = 0; trial < 20; ++trial) {
    const Mat y = random_member(d, rng);
    const Complex residual = side == Side::Right ? f.apply(a * shifted * y) : f.apply(a * y * shifted);
    const double scale = std::abs(f.apply(a * x.eigen() * y)) + std::abs(lambda * f.apply(a * y));
    if (std::abs(residual) > tol.bound(scale)) return std::nullopt;
  }
  return f;
}

std::vector<MollifierStep> boundary_mollifier(const PsdDecomposition& d, const ComplexMatrix& x,
                                              Complex lambda, const std::vector<Complex>& approach,
                                              const ToleranceConfig& tol) {
  require_spectrum_point(d, x, lambda, tol);
  const Index n = d.dim();
  const ComplexMatrix gap(Mat(lambda * Mat::Identity(n, n) - x.eigen()));

  std::vector<MollifierStep> out;
  out.reserve(approach.size());
  for (Complex lambda_n : approach) {
    const ComplexMatrix resolvent_arg(Mat(lambda_n * Mat::Identity(n, n) - x.eigen()));
    const AInverseResult inv = a_invertible(d, resolvent_arg, tol);
    if (!inv.invertible) {
      throw Error(ErrorCode::SpectrumPoint, "approach point lies in the A-spectrum");
    }
    const ASeminormValue size = a_seminorm(d, *inv.canonical, tol);
    if (!size.finite || size.value == 0.0) {
      throw Error(ErrorCode::PreconditionFailed, "A-inverse has zero A-seminorm");
    }
    ComplexMatrix normalized(Mat(inv.canonical->eigen() / size.value));
    const double left = a_seminorm(d, normalized * gap, tol).value;
    const double right = a_seminorm(d, gap * normalized, tol).value;
    out.push_back({std::move(normalized), left, right});
  }
  return out;
}

}  // namespace aspec
