#pragma once

// Reference computations for the tests. Each one is deliberately built from
// a different route than the library: plain Eigen decompositions of the raw
// inputs, no PsdDecomposition, no clustering from the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Mat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Complex v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double operator_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

inline std::vector<Complex> eigenvalues(const Mat& m) {
  Eigen::ComplexEigenSolver<Mat> es(m, false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

inline double spectral_radius(const Mat& m) {
  double r = 0.0;
  for (Complex z : eigenvalues(m)) r = std::max(r, std::abs(z));
  return r;
}

/// Orthogonal projection onto range(A) from a fresh Hermitian eigensolve.
inline Mat range_projection(const Mat& a, double rel_cutoff = 1e-10) {
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((a + a.adjoint()) / 2.0));
  const double top = std::max(es.eigenvalues().maxCoeff(), 0.0);
  Mat p = Mat::Zero(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    if (top > 0.0 && es.eigenvalues()(k) > rel_cutoff * top) {
      p += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
    }
  }
  return p;
}

/// (A^{1/2})^+ from a fresh Hermitian eigensolve.
inline Mat sqrt_pinv(const Mat& a, double rel_cutoff = 1e-10) {
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((a + a.adjoint()) / 2.0));
  const double top = std::max(es.eigenvalues().maxCoeff(), 0.0);
  Mat out = Mat::Zero(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const double l = es.eigenvalues()(k);
    if (top > 0.0 && l > rel_cutoff * top) {
      out += (1.0 / std::sqrt(l)) * es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
    }
  }
  return out;
}

/// sup over vector states of f(X^*AX)/f(A), as the largest eigenvalue of
/// (A^{1/2})^+ X^*AX (A^{1/2})^+.
inline double seminorm(const Mat& a, const Mat& x) {
  const Mat s = sqrt_pinv(a);
  const Mat m = s * x.adjoint() * a * x * s;
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((m + m.adjoint()) / 2.0), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

/// Greedy single-linkage clustering; centroids.
inline std::vector<Complex> cluster(std::vector<Complex> values, double radius) {
  std::vector<Complex> out;
  std::vector<bool> used(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i]) continue;
    std::vector<Complex> group{values[i]};
    used[i] = true;
    for (std::size_t g = 0; g < group.size(); ++g) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (!used[j] && std::abs(values[j] - group[g]) <= radius) {
          used[j] = true;
          group.push_back(values[j]);
        }
      }
    }
    Complex sum = 0.0;
    for (Complex z : group) sum += z;
    out.push_back(sum / static_cast<double>(group.size()));
  }
  return out;
}

inline double distance_to_set(const std::vector<Complex>& set, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex s : set) best = std::min(best, std::abs(s - z));
  return best;
}

/// Symmetric-difference test of two finite sets under a matching radius.
inline bool same_points(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs, double radius) {
  for (Complex z : lhs) {
    if (distance_to_set(rhs, z) > radius) return false;
  }
  for (Complex z : rhs) {
    if (distance_to_set(lhs, z) > radius) return false;
  }
  return true;
}

inline double segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

/// Convex hull, counterclockwise (monotone chain).
inline std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (Complex p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

/// Distance from p to the convex polygon (region) with the given
/// counterclockwise vertices; 0 inside. Degenerate polygons (point, segment)
/// are handled as such.
inline double distance_to_polygon(Complex p, const std::vector<Complex>& poly) {
  if (poly.empty()) return std::numeric_limits<double>::infinity();
  if (poly.size() == 1) return std::abs(p - poly[0]);
  double edge = std::numeric_limits<double>::infinity();
  bool inside = poly.size() >= 3;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Complex a = poly[i];
    const Complex b = poly[(i + 1) % poly.size()];
    edge = std::min(edge, segment_distance(p, a, b));
    const double side = (b.real() - a.real()) * (p.imag() - a.imag()) - (b.imag() - a.imag()) * (p.real() - a.real());
    if (side < 0) inside = false;
  }
  return inside ? 0.0 : edge;
}

/// Hausdorff distance between two convex polygons given by their vertices.
inline double hausdorff(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  double d = 0.0;
  for (Complex v : p) d = std::max(d, distance_to_polygon(v, q));
  for (Complex v : q) d = std::max(d, distance_to_polygon(v, p));
  return d;
}

}  // namespace oracle
