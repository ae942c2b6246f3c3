#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <queue>

#include "aspec/spectrum.hpp"

namespace aspec {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

std::vector<Complex> dedupe_cyclic(const std::vector<Complex>& pts, double eps) {
  std::vector<Complex> out;
  for (Complex p : pts) {
    if (out.empty() || std::abs(out.back() - p) > eps) out.push_back(p);
  }
  while (out.size() > 1 && std::abs(out.front() - out.back()) <= eps) out.pop_back();
  return out;
}

// Andrew's monotone chain; drops points within eps of an already kept one and
// near-collinear hull points.
std::vector<Complex> convex_hull(std::vector<Complex> pts, double eps, double area_eps) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  std::vector<Complex> unique;
  for (Complex p : pts) {
    const bool dup = std::any_of(unique.begin(), unique.end(),
                                 [&](Complex q) { return std::abs(p - q) <= eps; });
    if (!dup) unique.push_back(p);
  }
  if (unique.size() < 3) return unique;

  std::vector<Complex> hull(2 * unique.size());
  std::size_t k = 0;
  for (Complex p : unique) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= area_eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = unique.size() - 1, lower = k + 1; i-- > 0;) {
    const Complex p = unique[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= area_eps) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

bool NumericalRangePolygon::outer_contains(Complex z, double slack) const {
  if (support.empty()) return false;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const double projected = z.real() * std::cos(angles[k]) + z.imag() * std::sin(angles[k]);
    if (projected > support[k] + slack) return false;
  }
  return true;
}

namespace {

struct Probe {
  double h;
  Complex point;
};

// Corner of the half-planes Re(e^{-i t0} z) <= h0 and Re(e^{-i t1} z) <= h1.
Complex corner(double t0, double h0, double t1, double h1) {
  const double det = std::sin(t1 - t0);
  return {(h0 * std::sin(t1) - h1 * std::sin(t0)) / det, (std::cos(t0) * h1 - std::cos(t1) * h0) / det};
}

}  // namespace

NumericalRangePolygon a_numerical_range(const PsdDecomposition& d, const ComplexMatrix& x,
                                        int directions, const ToleranceConfig& tol) {
  require_member(d, x, tol);
  if (directions < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 directions");

  NumericalRangePolygon out;
  out.directions = directions;
  // S_A is empty for A = 0, and so is V_A(X).
  if (d.rank() == 0) return out;

  const Mat& a = d.a().eigen();
  const Mat a_range = hermitian_part(d.compress(a));
  const Mat ax_range = d.compress(a * x.eigen());
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  auto probe = [&](double theta) {
    const Complex rot = std::polar(1.0, -theta);
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> ges(hermitian_part(rot * ax_range), a_range,
                                                      Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (ges.info() != Eigen::Success) {
      throw Error(ErrorCode::NotConverged, "generalized eigensolver failed");
    }
    const Index top = ges.eigenvalues().size() - 1;
    const Vec v = ges.eigenvectors().col(top);
    return Probe{ges.eigenvalues()(top), v.dot(ax_range * v) / v.dot(a_range * v)};
  };

  std::map<double, Probe> probes;
  for (int k = 0; k < directions; ++k) {
    const double theta = kTwoPi * k / directions;
    probes.emplace(theta, probe(theta));
  }
  double scale = 0.0;
  for (const auto& [theta, p] : probes) scale = std::max(scale, std::abs(p.h));
  const double eps = tol.bound(scale);

  // Refinement: a chord between adjacent touching points that lies strictly
  // inside its outer corner may hide a boundary point (e.g. a polygon vertex
  // with a normal cone narrower than the direction spacing). Probe along the
  // chord normal, largest corner excess first, for at most `directions`
  // extra solves.
  struct Gap {
    double excess;
    double t0;
    double t1;  // may exceed 2 pi for the wrap-around gap
    bool operator<(const Gap& o) const { return excess < o.excess; }
  };
  auto lookup = [&](double t) -> const Probe& { return probes.at(t >= kTwoPi ? t - kTwoPi : t); };
  auto make_gap = [&](double t0, double t1) -> std::optional<Gap> {
    const Probe& p0 = lookup(t0);
    const Probe& p1 = lookup(t1);
    if (std::abs(p1.point - p0.point) <= eps) return std::nullopt;
    const double normal = std::arg(Complex(0.0, -1.0) * (p1.point - p0.point));
    double phi = normal;
    while (phi <= t0) phi += kTwoPi;
    if (phi >= t1) return std::nullopt;
    const Complex unit = std::polar(1.0, -phi);
    const double chord = (unit * p0.point).real();
    const double excess = (unit * corner(t0, p0.h, t1, p1.h)).real() - chord;
    if (!(excess > eps)) return std::nullopt;
    return Gap{excess, t0, t1};
  };

  std::priority_queue<Gap> queue;
  for (auto it = probes.begin(); it != probes.end(); ++it) {
    const auto next = std::next(it);
    const double t1 = next == probes.end() ? probes.begin()->first + kTwoPi : next->first;
    if (auto g = make_gap(it->first, t1)) queue.push(*g);
  }
  for (int budget = directions; budget > 0 && !queue.empty(); --budget) {
    const Gap g = queue.top();
    queue.pop();
    const Probe& p0 = lookup(g.t0);
    double phi = std::arg(Complex(0.0, -1.0) * (lookup(g.t1).point - p0.point));
    while (phi <= g.t0) phi += kTwoPi;
    const Probe fresh = probe(phi);
    const double chord = (std::polar(1.0, -phi) * p0.point).real();
    probes.emplace(phi >= kTwoPi ? phi - kTwoPi : phi, fresh);
    if (fresh.h - chord <= eps) continue;  // the chord is an edge of V_A(X)
    if (auto left = make_gap(g.t0, phi)) queue.push(*left);
    if (auto right = make_gap(phi, g.t1)) queue.push(*right);
  }

  std::vector<Complex> touching;
  std::vector<Complex> outer;
  for (auto it = probes.begin(); it != probes.end(); ++it) {
    out.angles.push_back(it->first);
    out.support.push_back(it->second.h);
    touching.push_back(it->second.point);
    const auto next = std::next(it);
    const double t1 = next == probes.end() ? probes.begin()->first + kTwoPi : next->first;
    outer.push_back(corner(it->first, it->second.h, t1, lookup(t1).h));
  }
  out.outer_vertices = dedupe_cyclic(outer, eps);
  out.vertices = convex_hull(std::move(touching), eps, eps * std::max(scale, 1.0));
  return out;
}

}  // namespace aspec
