#include <array>

#include "aspec/omega.hpp"

namespace aspec::omega {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Brings num/den to the canonical representative: integer coefficients with
// no common factor and a positive leading denominator coefficient.
void normalize(Polynomial& num, Polynomial& den) {
  if (num.is_zero()) {
    den = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = Polynomial::gcd(num, den);
  if (g.degree() > 0) {
    num = Polynomial::divmod(num, g).first;
    den = Polynomial::divmod(den, g).first;
  }
  BigInt lcm_den = 1;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coefficients()) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
  }
  BigInt gcd_num = 0;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coefficients()) {
      gcd_num = boost::multiprecision::gcd(gcd_num, BigInt(numerator(Rational(c * lcm_den))));
    }
  }
  Rational scale(lcm_den, gcd_num);
  if (den.leading() < 0) scale = -scale;
  num = num * Polynomial(scale);
  den = den * Polynomial(scale);
}

bool is_single_factor(const Polynomial& p) {
  // "n" or a bare integer prints without needing parentheses after '/'.
  if (p.degree() == 0) return denominator(p.leading()) == 1 && p.leading() > 0;
  return p.degree() == 1 && p.coefficient(0) == 0 && p.leading() == 1;
}

bool is_single_term(const Polynomial& p) {
  int nonzero = 0;
  for (const auto& c : p.coefficients()) nonzero += c != 0 ? 1 : 0;
  return nonzero <= 1;
}

Rational branch_limit_value(const RationalExpr& e, bool& finite) {
  const Limit l = limit_at_infinity(e);
  finite = l.finite();
  return l.value;
}

std::optional<Rational> joint_limit(const RationalExpr& odd, const RationalExpr& even) {
  bool odd_finite = false;
  bool even_finite = false;
  const Rational lo = branch_limit_value(odd, odd_finite);
  const Rational le = branch_limit_value(even, even_finite);
  if (odd_finite && even_finite && lo == le) return lo;
  return std::nullopt;
}

void require_defined(const RationalExpr& e, Branch b) {
  if (e.denominator().degree() <= 0) return;
  const auto poles = positive_integer_roots(e.denominator());
  if (!poles.empty()) {
    throw Error(ErrorCode::ZeroDenominator, std::string(to_string(b)) + " branch " + e.to_string() +
                                                " has a pole at n = " + poles.front().str());
  }
}

}  // namespace

RationalExpr::RationalExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is the zero polynomial");
  normalize(num_, den_);
}

RationalExpr RationalExpr::constant(Rational c) {
  return RationalExpr(Polynomial(std::move(c)), Polynomial(Rational(1)));
}

RationalExpr RationalExpr::variable() {
  return RationalExpr(Polynomial::variable(), Polynomial(Rational(1)));
}

Rational RationalExpr::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d == 0) throw Error(ErrorCode::ZeroDenominator, "pole at n = " + at.str());
  return num_(at) / d;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a) { return RationalExpr(-a.num_, a.den_); }

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero expression");
  return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalExpr::to_string() const {
  const std::string num = num_.to_string();
  if (den_ == Polynomial(Rational(1))) return num;
  std::string out = is_single_term(num_) ? num : "(" + num + ")";
  out += "/";
  out += is_single_factor(den_) ? den_.to_string() : "(" + den_.to_string() + ")";
  return out;
}

Limit limit_at_infinity(const RationalExpr& e) {
  const Polynomial& num = e.numerator();
  const Polynomial& den = e.denominator();
  if (num.is_zero() || num.degree() < den.degree()) return {Limit::Kind::Finite, Rational(0)};
  const Rational ratio = num.leading() / den.leading();
  if (num.degree() == den.degree()) return {Limit::Kind::Finite, ratio};
  return {ratio > 0 ? Limit::Kind::PlusInfinity : Limit::Kind::MinusInfinity, Rational(0)};
}

std::string_view to_string(Branch b) { return b == Branch::Odd ? "odd" : "even"; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ContinuousInverse: return "ContinuousInverse";
    case Verdict::BoundedDiscontinuous: return "BoundedDiscontinuous";
    case Verdict::Unbounded: return "Unbounded";
    case Verdict::NoSolution: return "NoSolution";
  }
  return "Unknown";
}

OmegaElement::OmegaElement(RationalExpr odd, RationalExpr even)
    : odd_(std::move(odd)), even_(std::move(even)) {
  require_defined(odd_, Branch::Odd);
  require_defined(even_, Branch::Even);
  value_at_zero_ = joint_limit(odd_, even_);
}

OmegaElement OmegaElement::constant(Rational c) {
  const RationalExpr e = RationalExpr::constant(std::move(c));
  return OmegaElement(e, e);
}

Rational OmegaElement::at_point(const BigInt& k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "points are indexed from k = 1");
  if (k % 2 == 1) return odd_(Rational((k + 1) / 2));
  return even_(Rational(k / 2));
}

OmegaElement operator+(const OmegaElement& a, const OmegaElement& b) {
  return OmegaElement(a.odd_ + b.odd_, a.even_ + b.even_);
}

OmegaElement operator*(const OmegaElement& a, const OmegaElement& b) {
  return OmegaElement(a.odd_ * b.odd_, a.even_ * b.even_);
}

OmegaElement OmegaElement::scaled(const Rational& c) const {
  const RationalExpr s = RationalExpr::constant(c);
  return OmegaElement(s * odd_, s * even_);
}

std::string OmegaElement::to_string() const {
  return "odd=" + odd_.to_string() + ";even=" + even_.to_string();
}

OmegaElement example_weight() {
  // A(1/(2n)) = 1/(2n), A(1/(2n-1)) = 0.
  return OmegaElement(RationalExpr(), parse_rational("1/(2*n)"));
}

OmegaElement example_identity_function() {
  return OmegaElement(parse_rational("1/(2*n-1)"), parse_rational("1/(2*n)"));
}

bool is_well_supported(const OmegaElement& a) {
  for (Branch b : {Branch::Odd, Branch::Even}) {
    const RationalExpr& e = a.branch(b);
    if (negative_at_some_positive_integer(e.numerator() * e.denominator())) {
      throw Error(ErrorCode::Negative,
                  std::string(to_string(b)) + " branch takes negative values; not a positive element");
    }
  }
  for (Branch b : {Branch::Odd, Branch::Even}) {
    const RationalExpr& e = a.branch(b);
    if (e.is_zero()) continue;
    const Limit l = limit_at_infinity(e);
    if (l.finite() && l.value == 0) return false;
  }
  return true;
}

InverseClassification a_inverse_classify(const OmegaElement& a, const OmegaElement& x) {
  InverseClassification out;
  constexpr std::array<Branch, 2> branches{Branch::Odd, Branch::Even};
  std::array<std::optional<RationalExpr>, 2> forced;

  for (std::size_t i = 0; i < 2; ++i) {
    const Branch b = branches[i];
    const RationalExpr& ab = a.branch(b);
    const RationalExpr& xb = x.branch(b);
    if (ab.is_zero()) continue;
    if (xb.is_zero()) {
      out.verdict = Verdict::NoSolution;
      out.detail = std::string(to_string(b)) + " branch of X vanishes where A does not";
      return out;
    }
    for (const BigInt& k : positive_integer_roots(xb.numerator())) {
      // X vanishes at this point; the equation forces A = 0 there.
      const Rational at(k);
      if (ab(at) != 0) {
        out.verdict = Verdict::NoSolution;
        out.detail = std::string(to_string(b)) + " branch of X vanishes at n = " + k.str() +
                     " where A does not";
        return out;
      }
      out.verdict = Verdict::NoSolution;
      out.detail = std::string(to_string(b)) + " forced inverse 1/X has a pole at n = " + k.str() +
                   "; not representable as a rational branch";
      return out;
    }
    forced[i] = RationalExpr::constant(Rational(1)) / xb;
  }

  for (std::size_t i = 0; i < 2; ++i) {
    if (!forced[i]) continue;
    const Limit l = limit_at_infinity(*forced[i]);
    if (!l.finite()) {
      out.verdict = Verdict::Unbounded;
      out.obstruction = Obstruction{branches[i], *forced[i]};
      out.detail = "forced " + std::string(to_string(branches[i])) + " branch diverges";
      return out;
    }
  }

  // Off-support completion: 0, or the single constant that restores continuity.
  std::array<RationalExpr, 2> witness{RationalExpr(), RationalExpr()};
  if (forced[0] && forced[1]) {
    witness = {*forced[0], *forced[1]};
  } else if (forced[0] || forced[1]) {
    const std::size_t on = forced[0] ? 0 : 1;
    witness[on] = *forced[on];
    witness[1 - on] = RationalExpr::constant(limit_at_infinity(*forced[on]).value);
  }
  OmegaElement y(witness[0], witness[1]);

  for (std::size_t i = 0; i < 2; ++i) {
    const RationalExpr& ab = a.branch(branches[i]);
    if (ab * x.branch(branches[i]) * y.branch(branches[i]) != ab) {
      throw Error(ErrorCode::PreconditionFailed, "internal: witness fails A = A X Y");
    }
  }
  out.verdict = y.continuous() ? Verdict::ContinuousInverse : Verdict::BoundedDiscontinuous;
  out.detail = y.continuous() ? "forced inverse extends continuously to t = 0"
                              : "forced branches have different limits at t = 0";
  out.witness = std::move(y);
  return out;
}

ComplexMatrix truncate_to_matrix(const OmegaElement& e, int points) {
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "need at least one point");
  Mat m = Mat::Zero(points, points);
  for (int k = 1; k <= points; ++k) {
    m(k - 1, k - 1) = Complex(static_cast<double>(e.at_point(BigInt(k))), 0.0);
  }
  return ComplexMatrix(std::move(m));
}

}  // namespace aspec::omega
