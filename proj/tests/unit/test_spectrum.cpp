#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "aspec/harness.hpp"
#include "aspec/invert.hpp"
#include "aspec/seminorm.hpp"
#include "aspec/spectrum.hpp"
#include "oracles.hpp"

using namespace aspec;

namespace {

Mat diag(std::initializer_list<Complex> v) {
  Mat m = Mat::Zero(static_cast<Index>(v.size()), static_cast<Index>(v.size()));
  Index k = 0;
  for (Complex x : v) m(k, k) = x, ++k;
  return m;
}

PsdDecomposition weight(const Mat& a) { return psd_decompose(ComplexMatrix(a)); }

const Mat kNilpotentBlock = oracle::from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 5}});
const Mat kJordan = oracle::from_rows({{0, 1}, {0, 0}});

harness::Instance instance(std::uint64_t seed) {
  harness::RandomInstanceSpec spec;
  spec.dim = 2 + static_cast<Index>(seed % 7);
  spec.rank = static_cast<Index>((seed / 7) % static_cast<std::uint64_t>(spec.dim + 1));
  spec.seed = seed + 5000;
  return harness::generate_instance(spec);
}

bool has_point(const std::vector<Complex>& pts, Complex z, double eps = 1e-9) {
  return oracle::distance_to_set(pts, z) <= eps;
}

}  // namespace

TEST_CASE("a_spectrum examples") {
  const Mat ones = oracle::from_rows({{1, 1}, {1, 1}});
  const PsdDecomposition d = weight(ones);
  const ASpectrumResult p = a_spectrum(d, d.proj());
  REQUIRE(p.points.size() == 1);
  CHECK(std::abs(p.points[0] - 1.0) < 1e-12);
  CHECK_FALSE(p.contains_zero);

  const ASpectrumResult nil = a_spectrum(weight(diag({1, 1, 0})), ComplexMatrix(kNilpotentBlock));
  REQUIRE(nil.points.size() == 1);
  CHECK(nil.points[0] == Complex(0.0));
  CHECK(nil.contains_zero);
  CHECK(nil.radius == 0.0);
  CHECK(has_point(oracle::eigenvalues(kNilpotentBlock), 5.0));

  CHECK_THROWS_AS(a_spectrum(weight(diag({1, 0})), ComplexMatrix(kJordan)), Error);
}

TEST_CASE("full-rank weight gives the classical spectrum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + trial % 5;
    const Mat g = harness::random_gaussian(n, n, rng);
    const Mat a = g * g.adjoint() + Mat::Identity(n, n);
    const Mat x = harness::random_gaussian(n, n, rng);
    const ASpectrumResult s = a_spectrum(weight(Mat((a + a.adjoint()) / 2.0)), ComplexMatrix(x));
    CHECK(oracle::same_points(s.points, oracle::eigenvalues(x), 1e-8 * oracle::operator_norm(x)));
  }
}

TEST_CASE("points are sorted, deduplicated, and consistent with radius") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const harness::Instance inst = instance(seed);
    const PsdDecomposition d = psd_decompose(inst.a);
    const ASpectrumResult s = a_spectrum(d, inst.x);
    double r = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      r = std::max(r, std::abs(s.points[i]));
      if (i > 0) {
        const Complex a = s.points[i - 1];
        const Complex b = s.points[i];
        CHECK((a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag())));
        CHECK(std::abs(a - b) > spectrum_cluster_radius(d, inst.x));
      }
    }
    CHECK(s.radius == doctest::Approx(r));
    CHECK(s.contains_zero == has_point(s.points, 0.0, 0.0));
    CHECK(s.contains_zero == !a_invertible(d, inst.x).invertible);
    if (d.rank() == 0) CHECK(s.points.empty());
  }
}

TEST_CASE("a_spectral_radius examples") {
  const PsdDecomposition d = weight(diag({1, 0}));
  CHECK(a_spectral_radius(d, ComplexMatrix(diag({2, 3}))) == doctest::Approx(2.0));
  CHECK(oracle::spectral_radius(diag({2, 3})) == doctest::Approx(3.0));
  CHECK(a_spectral_radius(weight(Mat::Identity(2, 2)), ComplexMatrix(kJordan)) == 0.0);
  const Mat h = oracle::from_rows({{1, 2}, {2, -3}});
  CHECK(a_spectral_radius(weight(Mat::Identity(2, 2)), ComplexMatrix(h)) ==
        doctest::Approx(oracle::operator_norm(h)));
}

TEST_CASE("gelfand_sequence examples") {
  const PsdDecomposition ones = weight(oracle::from_rows({{1, 1}, {1, 1}}));
  for (double t : gelfand_sequence(ones, ones.proj(), 20)) CHECK(t == doctest::Approx(1.0));

  const std::vector<double> nil = gelfand_sequence(weight(Mat::Identity(2, 2)), ComplexMatrix(kJordan), 8);
  REQUIRE(nil.size() == 8);
  CHECK(nil[0] == doctest::Approx(1.0));
  for (std::size_t k = 1; k < nil.size(); ++k) CHECK(nil[k] == 0.0);

  for (double t : gelfand_sequence(weight(diag({1, 0})), ComplexMatrix(diag({2, 3})), 50)) {
    CHECK(t == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(gelfand_sequence(weight(diag({1, 0})), ComplexMatrix(diag({2, 3})), 0), Error);
}

TEST_CASE("gelfand terms survive huge radii") {
  const std::vector<double> seq = gelfand_sequence(weight(Mat::Identity(2, 2)), ComplexMatrix(diag({1e200, 1})), 64);
  for (double t : seq) CHECK(t == doctest::Approx(1e200));
}

TEST_CASE("gelfand terms agree with direct powers on small members") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const harness::Instance inst = instance(seed);
    const PsdDecomposition d = psd_decompose(inst.a);
    const std::vector<double> seq = gelfand_sequence(d, inst.x, 6);
    Mat power = Mat::Identity(d.dim(), d.dim());
    for (int k = 1; k <= 6; ++k) {
      power = power * inst.x.eigen();
      const double direct = std::pow(oracle::seminorm(inst.a.eigen(), power), 1.0 / k);
      CHECK(std::abs(seq[static_cast<std::size_t>(k - 1)] - direct) <= 1e-7 * std::max(1.0, direct));
    }
    const double r = a_spectral_radius(d, inst.x);
    for (double t : seq) CHECK(t >= r - 1e-8);
  }
}

TEST_CASE("spectrum_witness examples") {
  const PsdDecomposition ones = weight(oracle::from_rows({{1, 1}, {1, 1}}));
  for (Side side : {Side::Left, Side::Right}) {
    const auto f = spectrum_witness(ones, ones.proj(), 1.0, side);
    REQUIRE(f);
    CHECK(std::abs(f->apply(ones.a().eigen() * ones.proj().eigen()) - 1.0) < 1e-10);
    CHECK(witness_condition_holds(ones, ones.proj(), *f, 1.0, side));
  }

  const PsdDecomposition d = weight(diag({1, 0}));
  const auto f = spectrum_witness(d, ComplexMatrix(diag({2, 3})), 2.0, Side::Right);
  REQUIRE(f);
  CHECK(std::abs(std::abs(f->h(0)) - 1.0) < 1e-12);
  CHECK(std::abs(f->h(1)) < 1e-12);
  CHECK(std::abs(f->apply(diag({2, 0})) - 2.0) < 1e-12);

  CHECK_THROWS_AS(spectrum_witness(d, ComplexMatrix(diag({2, 3})), 3.0, Side::Left), Error);
}

TEST_CASE("classical witnesses for normal matrices") {
  std::mt19937_64 rng(33);
  const PsdDecomposition id = weight(Mat::Identity(4, 4));
  for (int trial = 0; trial < 30; ++trial) {
    const Mat x = harness::random_normal_matrix(4, rng);
    const ComplexMatrix cx(x);
    for (Complex lambda : a_spectrum(id, cx).points) {
      for (Side side : {Side::Left, Side::Right}) {
        const auto f = spectrum_witness(id, cx, lambda, side);
        REQUIRE(f);
        CHECK(std::abs(f->apply(x) - lambda) < 1e-8);
        CHECK(std::abs(f->apply(Mat(x.adjoint() * x)) - std::norm(lambda)) < 1e-8);
      }
    }
  }
}

TEST_CASE("a_numerical_range examples") {
  const NumericalRangePolygon seg = a_numerical_range(weight(Mat::Identity(2, 2)), ComplexMatrix(diag({0, 1})), 360);
  CHECK(seg.directions == 360);
  CHECK(seg.support.size() >= 360);
  CHECK(seg.angles.size() == seg.support.size());
  CHECK(oracle::hausdorff(seg.vertices, {0.0, 1.0}) < 1e-9);
  CHECK(oracle::hausdorff(seg.outer_vertices, {0.0, 1.0}) < 1e-3);

  const PsdDecomposition ones = weight(oracle::from_rows({{1, 1}, {1, 1}}));
  const NumericalRangePolygon pt = a_numerical_range(ones, ones.proj(), 64);
  CHECK(oracle::hausdorff(pt.vertices, {1.0}) < 1e-9);
  CHECK(oracle::hausdorff(pt.outer_vertices, {1.0}) < 1e-9);

  const NumericalRangePolygon two = a_numerical_range(weight(diag({1, 0})), ComplexMatrix(diag({2, 3})), 64);
  CHECK(oracle::hausdorff(two.vertices, {2.0}) < 1e-9);
  CHECK(two.outer_contains(2.0, 1e-9));
  CHECK_FALSE(two.outer_contains(3.0, 1e-9));

  CHECK_THROWS_AS(a_numerical_range(ones, ones.proj(), 2), Error);
}

TEST_CASE("numerical range contains the spectrum and states") {
  std::mt19937_64 rng(34);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const harness::Instance inst = instance(seed);
    const PsdDecomposition d = psd_decompose(inst.a);
    if (d.rank() == 0) continue;
    const NumericalRangePolygon poly = a_numerical_range(d, inst.x, 180);
    const double scale = std::max(1.0, oracle::operator_norm(inst.x.eigen()));
    for (Complex z : a_spectrum(d, inst.x).points) CHECK(poly.outer_contains(z, 1e-7 * scale));
    const Mat ax = inst.a.eigen() * inst.x.eigen();
    for (int k = 0; k < 50; ++k) {
      const Vec h = d.proj().eigen() * harness::random_gaussian(d.dim(), 1, rng);
      const Complex z = h.dot(ax * h) / h.dot(inst.a.eigen() * h);
      CHECK(poly.outer_contains(z, 1e-8 * scale));
    }
    // Touching points are attained by states, so the inner hull sits inside
    // the outer polygon.
    for (Complex v : poly.vertices) CHECK(poly.outer_contains(v, 1e-8 * scale));
  }
}

TEST_CASE("boundary_mollifier examples") {
  const PsdDecomposition d = weight(diag({1, 0}));
  const std::vector<Complex> approach{3.0, 2.5, 2.1, 2.01};
  const auto steps = boundary_mollifier(d, ComplexMatrix(diag({2, 3})), 2.0, approach);
  REQUIRE(steps.size() == approach.size());
  for (const MollifierStep& s : steps) {
    CHECK(s.left_residual < 1e-12);
    CHECK(s.right_residual < 1e-12);
    CHECK(a_seminorm(d, s.normalized).value == doctest::Approx(1.0));
  }
  try {
    boundary_mollifier(d, ComplexMatrix(diag({2, 3})), 2.0, {2.5, 2.0});
    FAIL("expected SpectrumPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpectrumPoint);
  }
  CHECK_THROWS_AS(boundary_mollifier(d, ComplexMatrix(diag({2, 3})), 3.0, {2.5}), Error);
}

TEST_CASE("boundary_mollifier on a Jordan block matches the resolvent oracle") {
  std::vector<Complex> approach;
  for (int n = 1; n <= 64; n *= 2) approach.emplace_back(1.0 / n);
  const auto steps = boundary_mollifier(weight(Mat::Identity(2, 2)), ComplexMatrix(kJordan), 0.0, approach);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const double lambda = approach[k].real();
    const double a = 1.0 / lambda;
    const double b = 1.0 / (lambda * lambda);
    const double top = (b + std::sqrt(b * b + 4 * a * a)) / 2.0;
    CHECK(steps[k].left_residual == doctest::Approx(a / top).epsilon(1e-9));
    CHECK(steps[k].right_residual == doctest::Approx(a / top).epsilon(1e-9));
    if (k > 0) CHECK(steps[k].left_residual < steps[k - 1].left_residual);
  }
}

TEST_CASE("block-diagonal instances keep block-diagonal inverses") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    harness::RandomInstanceSpec s1;
    harness::RandomInstanceSpec s2;
    s1.dim = 2 + static_cast<Index>(seed % 3);
    s2.dim = 2 + static_cast<Index>((seed / 3) % 3);
    s1.rank = static_cast<Index>(seed % static_cast<std::uint64_t>(s1.dim + 1));
    s2.rank = s2.dim;
    s1.seed = 2 * seed;
    s2.seed = 2 * seed + 1;
    const harness::Instance inst = harness::generate_block_instance(s1, s2);
    const AInverseResult r = a_invertible(psd_decompose(inst.a), inst.x);
    if (!r.invertible) continue;
    const Mat& y = r.canonical->eigen();
    CHECK(oracle::max_abs(y.topRightCorner(s1.dim, s2.dim)) <= 1e-9);
    CHECK(oracle::max_abs(y.bottomLeftCorner(s2.dim, s1.dim)) <= 1e-9);
  }
}
