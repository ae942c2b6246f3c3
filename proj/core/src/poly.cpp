#include <algorithm>
#include <functional>

#include "aspec/omega.hpp"

namespace aspec::omega {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

int sign_of(const Rational& q) { return q.sign(); }

std::string rational_text(const Rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) out += "/" + denominator(q).str();
  return out;
}

// Sturm chain of a squarefree polynomial.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Polynomial rem = -Polynomial::divmod(a, b).second;
    if (rem.is_zero()) break;
    chain.push_back(std::move(rem));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& at) {
  int variations = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = sign_of(s(at));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++variations;
    last = sg;
  }
  return variations;
}

Polynomial squarefree_part(const Polynomial& p) {
  const Polynomial g = Polynomial::gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return Polynomial::divmod(p, g).first;
}

// 1 + max |a_i / a_d|: every real root has modulus below this.
BigInt cauchy_bound(const Polynomial& p) {
  Rational best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    best = std::max(best, Rational(abs(p.coefficient(k) / p.leading())));
  }
  best += 1;
  BigInt ceil_value = numerator(best) / denominator(best);
  if (ceil_value * denominator(best) != numerator(best)) ceil_value += 1;
  return ceil_value;
}

// Visits every integer in [lo, hi] exactly once, grouped into blocks on
// which p has constant sign: visit(first, last, sign).
void for_each_sign_block(const Polynomial& p, const std::vector<Polynomial>& chain,
                         const BigInt& lo, const BigInt& hi,
                         const std::function<void(const BigInt&, const BigInt&, int)>& visit) {
  if (lo > hi) return;
  if (hi - lo < 16) {
    for (BigInt k = lo; k <= hi; ++k) visit(k, k, sign_of(p(Rational(k))));
    return;
  }
  // Non-integer endpoints that are not roots: try a few offsets.
  auto off_root = [&](const BigInt& base, int direction) {
    for (int q = 2;; ++q) {
      const Rational candidate = Rational(base) + Rational(direction, q);
      if (chain.front()(candidate) != 0) return candidate;
    }
  };
  const Rational left = off_root(lo, -1);
  const Rational right = off_root(hi, +1);
  if (sign_variations(chain, left) == sign_variations(chain, right)) {
    visit(lo, hi, sign_of(p(Rational(lo))));
    return;
  }
  const BigInt mid = (lo + hi) / 2;
  for_each_sign_block(p, chain, lo, mid, visit);
  for_each_sign_block(p, chain, mid + 1, hi, visit);
}

void scan_positive_integers(const Polynomial& p,
                            const std::function<void(const BigInt&, const BigInt&, int)>& visit) {
  const Polynomial q = squarefree_part(p);
  const auto chain = sturm_chain(q);
  const BigInt bound = p.degree() > 0 ? cauchy_bound(p) : BigInt(1);
  for_each_sign_block(p, chain, BigInt(1), bound, visit);
}

}  // namespace

Polynomial::Polynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }

Polynomial Polynomial::variable() { return from_coefficients({Rational(0), Rational(1)}); }

Polynomial Polynomial::from_coefficients(std::vector<Rational> low_to_high) {
  Polynomial p;
  p.coeffs_ = std::move(low_to_high);
  p.trim();
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<int>(k));
  return from_coefficients(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.coeffs_.size()) out[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) out[k] += b.coeffs_[k];
  }
  return Polynomial::from_coefficients(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial::from_coefficients(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial::from_coefficients(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "polynomial division by zero");
  std::vector<Rational> quotient(static_cast<std::size_t>(std::max(a.degree() - b.degree() + 1, 0)));
  Polynomial rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / b.leading();
    quotient[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    for (const auto& c : b.coeffs_) sub.push_back(c * factor);
    rem = rem - from_coefficients(std::move(sub));
  }
  return {from_coefficients(std::move(quotient)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  for (auto& c : a.coeffs_) c /= lead;
  return a;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string term;
    if (k == 0 || mag != 1) term = rational_text(mag);
    for (int i = 0; i < k; ++i) term += term.empty() ? "n" : "*n";
    out += term;
  }
  return out;
}

std::vector<BigInt> positive_integer_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has every root");
  std::vector<BigInt> roots;
  scan_positive_integers(p, [&](const BigInt& first, const BigInt& last, int sign) {
    if (sign != 0) return;
    for (BigInt k = first; k <= last; ++k) roots.push_back(k);
  });
  return roots;
}

bool negative_at_some_positive_integer(const Polynomial& p) {
  if (p.is_zero()) return false;
  bool negative = p.leading() < 0;  // sign beyond the root bound
  scan_positive_integers(p, [&](const BigInt&, const BigInt&, int sign) {
    if (sign < 0) negative = true;
  });
  return negative;
}

}  // namespace aspec::omega
