#pragma once

// Exact model of the commutative algebra C(Omega), Omega = {1/k : k >= 1} u {0}.
// An element is described by two rational functions of n >= 1: its values
// at the odd points t = 1/(2n-1) and at the even points t = 1/(2n). The
// value at t = 0 is determined by the branch limits. All arithmetic is exact.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aspec/linalg.hpp"

namespace aspec::omega {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in n with rational coefficients, lowest degree first,
/// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  static Polynomial variable();
  static Polynomial from_coefficients(std::vector<Rational> low_to_high);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int k) const;
  /// Requires a nonzero polynomial.
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& at) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero only when both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Grammar-conformant text, highest degree first, e.g. "2*n*n - 3*n + 1/2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Distinct integer roots n >= 1 of p, ascending. Exact (Sturm sequences
/// plus exact evaluation). p must be nonzero.
std::vector<BigInt> positive_integer_roots(const Polynomial& p);

/// True iff p(n) < 0 for some integer n >= 1.
bool negative_at_some_positive_integer(const Polynomial& p);

/// Reduced rational function num/den: gcd removed, coefficients jointly
/// primitive integers, leading denominator coefficient positive.
class RationalExpr {
 public:
  RationalExpr() : den_(Rational(1)) {}
  /// Throws ZeroDenominator if den is the zero polynomial.
  RationalExpr(Polynomial num, Polynomial den);
  static RationalExpr constant(Rational c);
  static RationalExpr variable();

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Value at n; throws ZeroDenominator at a pole.
  Rational operator()(const Rational& at) const;

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  /// Throws ZeroDenominator when b is zero.
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a);
  friend bool operator==(const RationalExpr& a, const RationalExpr& b) = default;

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := integer | 'n' | '(' expr ')' | '-' factor
/// Operators are left-associative, so "a/b" with integer a, b is an exact
/// rational literal. Throws ParseError (with position) or ZeroDenominator.
RationalExpr parse_rational(std::string_view text);

struct Limit {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  Rational value;  // meaningful for Finite

  bool finite() const noexcept { return kind == Kind::Finite; }
  friend bool operator==(const Limit& a, const Limit& b) = default;
};

/// Exact limit as n -> infinity, by degree comparison.
Limit limit_at_infinity(const RationalExpr& e);

enum class Branch { Odd, Even };
std::string_view to_string(Branch b);

/// Element of C(Omega). Construction checks both branches are defined at
/// every n >= 1 (throws ZeroDenominator otherwise) and derives the value at
/// t = 0, which is absent (divergent) unless both branch limits are finite
/// and equal.
class OmegaElement {
 public:
  OmegaElement(RationalExpr odd, RationalExpr even);
  static OmegaElement constant(Rational c);

  const RationalExpr& odd() const noexcept { return odd_; }
  const RationalExpr& even() const noexcept { return even_; }
  const RationalExpr& branch(Branch b) const { return b == Branch::Odd ? odd_ : even_; }
  const std::optional<Rational>& value_at_zero() const noexcept { return value_at_zero_; }
  bool continuous() const noexcept { return value_at_zero_.has_value(); }

  /// Value at t = 1/k, k >= 1.
  Rational at_point(const BigInt& k) const;

  friend OmegaElement operator+(const OmegaElement& a, const OmegaElement& b);
  friend OmegaElement operator*(const OmegaElement& a, const OmegaElement& b);
  OmegaElement scaled(const Rational& c) const;
  friend bool operator==(const OmegaElement& a, const OmegaElement& b) = default;

  /// "odd=<expr>;even=<expr>"
  std::string to_string() const;

 private:
  RationalExpr odd_;
  RationalExpr even_;
  std::optional<Rational> value_at_zero_;
};

/// Parses "odd=<expr>;even=<expr>" (keys in either order).
OmegaElement parse_element(std::string_view text);

/// The weight A of the counterexample: 0 at odd points, t at t = 1/(2n).
OmegaElement example_weight();
/// X(t) = t.
OmegaElement example_identity_function();

/// False iff some branch is not identically zero yet tends to 0, i.e. the
/// nonzero values accumulate at 0. Throws Negative if some branch takes a
/// negative value at an integer n >= 1.
bool is_well_supported(const OmegaElement& a);

enum class Verdict { ContinuousInverse, BoundedDiscontinuous, Unbounded, NoSolution };
std::string_view to_string(Verdict v);

struct Obstruction {
  Branch branch;
  RationalExpr expr;
};

struct InverseClassification {
  Verdict verdict = Verdict::NoSolution;
  std::optional<OmegaElement> witness;       // ContinuousInverse, BoundedDiscontinuous
  std::optional<Obstruction> obstruction;    // Unbounded
  std::string detail;
};

/// Solves A = A X Y pointwise. On each branch where A is not identically zero
/// the branch of Y is forced to 1/X; off the support it is 0, unless a
/// single constant restores continuity at t = 0 (then that constant is used).
/// The verdict comes from the exact limits of the forced branches.
InverseClassification a_inverse_classify(const OmegaElement& a, const OmegaElement& x);

/// diag(e(1), e(1/2), ..., e(1/points)) as a dense complex matrix.
ComplexMatrix truncate_to_matrix(const OmegaElement& e, int points);

}  // namespace aspec::omega
