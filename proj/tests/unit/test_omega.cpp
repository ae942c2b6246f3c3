#include <doctest.h>

#include "aspec/omega.hpp"
#include "aspec/psd.hpp"
#include "aspec/invert.hpp"
#include "aspec/seminorm.hpp"

using namespace aspec;
using namespace aspec::omega;

namespace {

RationalExpr expr(std::string_view s) { return parse_rational(s); }

OmegaElement element(std::string_view odd, std::string_view even) { return {expr(odd), expr(even)}; }

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

// Independent reference: direct evaluation of the pointwise solve at t = 1/k.
Rational reference_inverse_at(const OmegaElement& a, const OmegaElement& x, const BigInt& k) {
  return a.at_point(k) == 0 ? Rational(0) : Rational(1) / x.at_point(k);
}

}  // namespace

TEST_CASE("parse_rational examples") {
  const RationalExpr half = expr("1/(2*n)");
  CHECK(half.numerator() == Polynomial(Rational(1)));
  CHECK(half.denominator() == Polynomial::from_coefficients({0, 2}));
  CHECK(half.to_string() == "1/(2*n)");

  const RationalExpr ratio = expr("(n+1)/(n-1)");
  CHECK(ratio.numerator() == Polynomial::from_coefficients({1, 1}));
  CHECK(ratio.denominator() == Polynomial::from_coefficients({-1, 1}));

  CHECK(code_of([] { expr("1/(n-n)"); }) == ErrorCode::ZeroDenominator);
}

TEST_CASE("parser precedence, associativity and reduction") {
  CHECK(expr("1 - 2 - 3") == RationalExpr::constant(-4));
  CHECK(expr("12/3/2") == RationalExpr::constant(2));
  CHECK(expr("2 + 3*n") == expr("3*n+2"));
  CHECK(expr("-n*-n") == expr("n*n"));
  CHECK(expr("(n*n - 1)/(n - 1)") == expr("n + 1"));
  CHECK(expr("(2*n)/(4*n*n)") == expr("1/(2*n)"));
  CHECK(expr("  n  ") == RationalExpr::variable());
  CHECK(expr("0*n/(n+1)").is_zero());
}

TEST_CASE("parse errors carry positions") {
  for (auto [text, pos] : {std::pair<std::string_view, std::size_t>{"", 0}, {"1 +", 3}, {"(n", 2}, {"n)", 1},
                            {"2x", 1}, {"1 ** 2", 3}}) {
    try {
      expr(text);
      FAIL("expected ParseError for ", text);
    } catch (const ParseError& e) {
      CHECK(e.position() == pos);
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("to_string round-trips through the parser") {
  for (std::string_view s : {"1/(2*n)", "(n+1)/(n-1)", "2*n", "-3/4", "(n*n - 3*n + 1/2)/(7*n + 2)", "0", "n"}) {
    const RationalExpr e = expr(s);
    CHECK(expr(e.to_string()) == e);
  }
}

TEST_CASE("evaluation and poles") {
  CHECK(expr("(n+1)/(n-1)")(Rational(3)) == Rational(2));
  CHECK(code_of([] { expr("(n+1)/(n-1)")(Rational(1)); }) == ErrorCode::ZeroDenominator);
}

TEST_CASE("limit_at_infinity examples") {
  CHECK(limit_at_infinity(expr("1/(2*n)")) == Limit{Limit::Kind::Finite, 0});
  CHECK(limit_at_infinity(expr("2*n")).kind == Limit::Kind::PlusInfinity);
  CHECK(limit_at_infinity(expr("(3*n+1)/(n+2)")) == Limit{Limit::Kind::Finite, 3});
  CHECK(limit_at_infinity(expr("-n*n/(n+5)")).kind == Limit::Kind::MinusInfinity);
  CHECK(limit_at_infinity(expr("0")) == Limit{Limit::Kind::Finite, 0});
}

TEST_CASE("polynomial helpers") {
  const Polynomial p = Polynomial::from_coefficients({6, -5, 1});  // (n-2)(n-3)
  CHECK(positive_integer_roots(p) == std::vector<BigInt>{2, 3});
  CHECK(positive_integer_roots(Polynomial::from_coefficients({1, 2})).empty());  // 2n+1
  CHECK(positive_integer_roots(Polynomial::from_coefficients({-1, 2})).empty()); // n = 1/2
  CHECK(negative_at_some_positive_integer(p) == false);
  CHECK(negative_at_some_positive_integer(Polynomial::from_coefficients({Rational(-5, 2), 1})) == true);
  CHECK(negative_at_some_positive_integer(Polynomial::from_coefficients({-1000, 0, 0, 0, 0, 1})) == true);
  CHECK(negative_at_some_positive_integer(Polynomial::from_coefficients({-1000000, 1})) == true);
  const auto [q, r] = Polynomial::divmod(Polynomial::from_coefficients({-1, 0, 1}), Polynomial::from_coefficients({-1, 1}));
  CHECK(q == Polynomial::from_coefficients({1, 1}));
  CHECK(r.is_zero());
  CHECK(Polynomial::gcd(p, Polynomial::from_coefficients({-4, 2})) == Polynomial::from_coefficients({-2, 1}));
}

TEST_CASE("algebra operations") {
  const OmegaElement x = example_identity_function();
  const OmegaElement zero = x + x.scaled(-1);
  CHECK(zero.odd().is_zero());
  CHECK(zero.even().is_zero());
  CHECK(zero.value_at_zero() == Rational(0));

  const OmegaElement sq = x * x;
  CHECK(sq.odd() == expr("1/((2*n-1)*(2*n-1))"));
  CHECK(sq.even() == expr("1/(2*n*2*n)"));
  CHECK(sq.value_at_zero() == Rational(0));

  const OmegaElement ax = example_weight() * x;
  CHECK(ax.odd().is_zero());
  CHECK(ax.even() == expr("1/(4*n*n)"));
}

TEST_CASE("elements agree with the function X(t) = t at sample points") {
  const OmegaElement x = example_identity_function();
  for (int k = 1; k <= 40; ++k) CHECK(x.at_point(k) == Rational(1, k));
  const OmegaElement a = example_weight();
  for (int k = 1; k <= 40; ++k) CHECK(a.at_point(k) == (k % 2 == 0 ? Rational(1, k) : Rational(0)));
}

TEST_CASE("element construction and literals") {
  CHECK(code_of([] { element("1/(n-2)", "1"); }) == ErrorCode::ZeroDenominator);
  CHECK_FALSE(element("1", "2").continuous());
  CHECK(element("(n+1)/n", "1").value_at_zero() == Rational(1));
  CHECK_FALSE(element("n", "n").continuous());

  const OmegaElement e = parse_element(" even = 1/(2*n) ; odd = 0 ");
  CHECK(e == example_weight());
  CHECK(parse_element(e.to_string()) == e);
  CHECK_THROWS_AS(parse_element("odd=1"), ParseError);
  CHECK_THROWS_AS(parse_element("odd=1;odd=2"), ParseError);
  CHECK_THROWS_AS(parse_element("odd=1;middle=2"), ParseError);
  CHECK_THROWS_AS(parse_element("odd=1;even=(n"), ParseError);
}

TEST_CASE("is_well_supported examples") {
  CHECK_FALSE(is_well_supported(example_weight()));
  CHECK(is_well_supported(OmegaElement::constant(1)));
  CHECK(is_well_supported(OmegaElement::constant(0)));
  CHECK(is_well_supported(element("0", "(n+1)/n")));
  CHECK(code_of([] { is_well_supported(element("n-3", "1")); }) == ErrorCode::Negative);
}

TEST_CASE("a_inverse_classify examples") {
  const InverseClassification demo = a_inverse_classify(example_weight(), example_identity_function());
  CHECK(demo.verdict == Verdict::Unbounded);
  REQUIRE(demo.obstruction);
  CHECK(demo.obstruction->branch == Branch::Even);
  CHECK(demo.obstruction->expr.to_string() == "2*n");
  CHECK_FALSE(demo.witness);

  const InverseClassification scalars = a_inverse_classify(OmegaElement::constant(1), OmegaElement::constant(2));
  CHECK(scalars.verdict == Verdict::ContinuousInverse);
  REQUIRE(scalars.witness);
  CHECK(*scalars.witness == OmegaElement::constant(Rational(1, 2)));

  const InverseClassification completed = a_inverse_classify(example_weight(), OmegaElement::constant(2));
  CHECK(completed.verdict == Verdict::ContinuousInverse);
  REQUIRE(completed.witness);
  CHECK(completed.witness->even() == RationalExpr::constant(Rational(1, 2)));
  CHECK(completed.witness->odd() == RationalExpr::constant(Rational(1, 2)));
  CHECK(completed.witness->value_at_zero() == Rational(1, 2));
}

TEST_CASE("a_inverse_classify other verdicts") {
  const InverseClassification jump = a_inverse_classify(OmegaElement::constant(1), element("1", "2"));
  CHECK(jump.verdict == Verdict::BoundedDiscontinuous);
  REQUIRE(jump.witness);
  CHECK(jump.witness->odd() == RationalExpr::constant(1));
  CHECK(jump.witness->even() == RationalExpr::constant(Rational(1, 2)));

  CHECK(a_inverse_classify(OmegaElement::constant(1), element("0", "1")).verdict == Verdict::NoSolution);
  CHECK(a_inverse_classify(OmegaElement::constant(1), element("n-3", "1")).verdict == Verdict::NoSolution);

  // Off the support nothing is forced: x may vanish there.
  const InverseClassification off = a_inverse_classify(example_weight(), element("0", "1"));
  CHECK(off.verdict == Verdict::ContinuousInverse);

  const InverseClassification odd_blowup = a_inverse_classify(OmegaElement::constant(1), element("1/n", "1"));
  CHECK(odd_blowup.verdict == Verdict::Unbounded);
  REQUIRE(odd_blowup.obstruction);
  CHECK(odd_blowup.obstruction->branch == Branch::Odd);
  CHECK(odd_blowup.obstruction->expr == expr("n"));
}

TEST_CASE("witnesses solve A = A X Y pointwise") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"odd=1;even=1", "odd=(n+1)/n;even=2"},
      {"odd=0;even=1/(2*n)", "odd=5;even=(3*n+1)/(n+2)"},
      {"odd=n;even=0", "odd=1/(n+1)+1;even=n"},
      {"odd=1/n;even=1/n", "odd=-2;even=-2"},
  };
  for (const auto& [as, xs] : pairs) {
    const OmegaElement a = parse_element(as);
    const OmegaElement x = parse_element(xs);
    const InverseClassification c = a_inverse_classify(a, x);
    REQUIRE(c.witness);
    CHECK(a * x * *c.witness == a);
    for (int k = 1; k <= 30; ++k) {
      if (a.at_point(k) != 0) CHECK(c.witness->at_point(k) == reference_inverse_at(a, x, k));
    }
  }
}

TEST_CASE("truncation of the counterexample") {
  const OmegaElement a = example_weight();
  const OmegaElement x = example_identity_function();
  const ComplexMatrix am = truncate_to_matrix(a, 6);
  CHECK(am.rows() == 6);
  CHECK(am(1, 1) == Complex(0.5));
  CHECK(am(0, 0) == Complex(0.0));
  for (int points : {10, 100}) {
    const PsdDecomposition d = psd_decompose(truncate_to_matrix(a, points));
    const AInverseResult r = a_invertible(d, truncate_to_matrix(x, points));
    REQUIRE(r.invertible);
    CHECK(a_seminorm(d, *r.canonical).value >= points * (1 - 1e-12));
  }
  CHECK_THROWS_AS(truncate_to_matrix(a, 0), Error);
}
