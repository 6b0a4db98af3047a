#include <doctest.h>

#include <cmath>
#include <random>

#include "bclass/compose.hpp"
#include "bclass/errors.hpp"
#include "bclass/expression.hpp"
#include "bclass/symseries.hpp"
#include "random_instances.hpp"

using namespace bclass;
using bclass::testing::random_inner;
using bclass::testing::random_polynomial;
using bclass::testing::random_rational;

namespace {

GeneralizedRational R(const char* text) { return parse_rational(text); }
Rational Q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("polynomial construction normalizes step and zero terms") {
  GeneralizedPolynomial p(4, {{0, Q(1)}, {2, Q(3)}, {8, Q(0)}});
  CHECK(p.step_denominator() == 2);
  CHECK(p.term_count() == 2);
  CHECK(p.leading_exponent() == Q(1, 2));
  CHECK(GeneralizedPolynomial(3, {}).step_denominator() == 1);
  CHECK(GeneralizedPolynomial(3, {}).is_zero());
  CHECK_THROWS(GeneralizedPolynomial().leading_exponent());
}

TEST_CASE("add examples") {
  CHECK(R("1/x") + GeneralizedRational() == R("1/x"));
  CHECK(R("x/(x-1)") + R("-1/(x-1)") == GeneralizedRational(Q(1)));

  const auto f1 = R("sqrt(x)*(x+3)/(x-1)^3");
  const auto f2 = R("-(3*x+1)/(x-1)^3");
  const auto target = pow(R("(sqrt(x)-1)/(x-1)"), 3);
  CHECK(f1 + f2 == target);
  CHECK(target == pow(R("1/(sqrt(x)+1)"), 3));
}

TEST_CASE("mul, div, pow examples") {
  CHECK(R("x^2") * R("1/x") == R("x"));
  CHECK(profile(GeneralizedRational(Q(1)) / pow(R("x+1"), 3)).gamma == -3);
  const GeneralizedPolynomial g = parse_polynomial("x^2");
  CHECK(pow(GeneralizedRational(g.derivative()), 3) == R("8*x^3"));
  CHECK_THROWS_AS(R("x") / GeneralizedRational(), DivisionByZero);
  CHECK_THROWS_AS(pow(GeneralizedRational(), -1), DivisionByZero);
  CHECK(pow(R("x+2"), 0) == GeneralizedRational(Q(1)));
  CHECK(pow(R("x+2"), -2) == R("1/(x^2+4*x+4)"));
}

TEST_CASE("derivative examples") {
  CHECK(derivative(R("x^2")) == R("2*x"));
  CHECK(derivative(R("1/(x+1)^3")) == R("-3/(x+1)^4"));
  const auto d = derivative(pow(R("sqrt(x)+1"), -3));
  CHECK(d == R("-(3/2)*x^(-1/2)/(sqrt(x)+1)^4"));
  const auto f = pow(R("sqrt(x)+1"), -3);
  const double h = 1e-5;
  const double fd = (f(4 + h) - f(4 - h)) / (2 * h);
  CHECK(d(4.0) == doctest::Approx(fd).epsilon(1e-8));
  CHECK(d(4.0) == doctest::Approx(-0.75 / 81.0).epsilon(1e-14));
  CHECK(derivative(GeneralizedRational(Q(7))) == GeneralizedRational());
}

TEST_CASE("compose_poly examples and preconditions") {
  const auto g = parse_polynomial("x^2");
  CHECK(compose_poly(R("-x/8"), g) == R("-x^2/8"));
  CHECK(compose_poly(GeneralizedRational(Q(5, 3)), g) == GeneralizedRational(Q(5, 3)));
  CHECK(compose_poly(R("-(2*x^2+3)/(4*x)"), g) == R("-(2*x^4+3)/(4*x^2)"));
  CHECK(compose_poly(R("1/(x+1)"), parse_polynomial("x+2")) == R("1/(x+3)"));
  CHECK_THROWS_AS(compose_poly(R("sqrt(x)"), g), PreconditionError);
  CHECK_THROWS_AS(compose_poly(R("x"), parse_polynomial("x^(1/2)")), PreconditionError);
  CHECK_THROWS_AS(compose_poly(R("x"), parse_polynomial("-x^2")), PreconditionError);
}

TEST_CASE("profile examples") {
  const auto p = profile(R("1/(x+1)"), 3);
  CHECK(p.gamma == -1);
  CHECK(p.strict);
  CHECK(p.integer_step);
  REQUIRE(p.coefficients.size() == 4);
  CHECK(p.coefficients == std::vector<Rational>{Q(1), Q(-1), Q(1), Q(-1)});

  const auto q = profile(R("-(2/3)*(x+sqrt(x))"), 2);
  CHECK(q.gamma == 1);
  CHECK_FALSE(q.integer_step);

  const auto r = profile(R("x^2"), 0);
  CHECK(r.gamma == 2);
  CHECK(r.strict);
  CHECK(r.coefficients.size() == 1);

  const auto z = profile(GeneralizedRational(), 4);
  CHECK(z.identically_zero);

  // A half-integer gamma whose expansion still proceeds in integer steps.
  const auto h = profile(R("x^(1/2)+x^(-1/2)"), 2);
  CHECK(h.gamma == Q(1, 2));
  CHECK(h.integer_step);
  CHECK(h.coefficients == std::vector<Rational>{Q(1), Q(1), Q(0)});
}

TEST_CASE("text rendering") {
  CHECK(to_string(R("-(16*x^4+15)/(64*x^3)")) == "-(16*x^4+15)/(64*x^3)");
  CHECK(to_string(R("-1/(64*x)")) == "-1/(64*x)");
  CHECK(to_string(R("-9/(64*x^2)")) == "-9/(64*x^2)");
  CHECK(to_string(R("-(x+1)/3")) == "-(x+1)/3");
  CHECK(to_string(R("sqrt(x)+1")) == "x^(1/2)+1");
  CHECK(to_string(R("x^(-1)")) == "1/x");
  CHECK(to_string(GeneralizedRational()) == "0");
  CHECK(to_string(R("3/4")) == "3/4");
  CHECK(to_string(R("0.25*x")) == "x/4");
}

TEST_CASE("parse errors and rejections") {
  CHECK_THROWS_AS(parse_rational("sin(x)"), ParseError);
  CHECK_THROWS_AS(parse_rational("pi*x"), ParseError);
  CHECK_THROWS_AS(parse_rational("sqrt(x+1)"), ParseError);
  CHECK_THROWS_AS(parse_rational("(x+"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/(x+1)"), ParseError);
  CHECK(parse_polynomial("x^-2+x") == GeneralizedPolynomial(1, {{-2, Q(1)}, {1, Q(1)}}));
}

TEST_CASE("property: canonical form, field axioms, round trip") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const long step_a = trial % 3 == 0 ? 2 : 1;
    const auto a = random_rational(rng, step_a);
    const auto b = random_rational(rng, 1);
    const auto c = random_rational(rng, 2);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(canonicalize(a) == a);
    CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
    CHECK(parse_rational(to_string(a)) == a);
    CHECK(a + (-a) == GeneralizedRational());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (!a.is_zero()) CHECK(a * pow(a, -1) == GeneralizedRational(Q(1)));
    CHECK(pow(a, 3) == a * a * a);
    CHECK(a(2.5) == doctest::Approx(to_rational(parse_expression(to_string(a)))(2.5)));
  }
}

TEST_CASE("property: exponent homomorphisms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_rational(rng, trial % 2 ? 2 : 1);
    const auto b = random_rational(rng, 1);
    if (a.is_zero() || b.is_zero()) continue;
    const auto pa = profile(a), pb = profile(b);
    CHECK(profile(a * b).gamma == pa.gamma + pb.gamma);
    CHECK(profile(a / b).gamma == pa.gamma - pb.gamma);

    const auto da = derivative(a);
    if (pa.gamma != 0) {
      CHECK(profile(da).gamma == pa.gamma - 1);
    } else if (!a.is_constant() && pa.integer_step) {
      CHECK(profile(da).gamma <= -2);
    }

    if (b.has_integer_exponents()) {
      const long s = 1 + trial % 3;
      const auto g = random_inner(rng, s);
      CHECK(profile(compose_poly(b, g)).gamma == s * pb.gamma);
    }
  }
}

TEST_CASE("property: series of a product is the Cauchy product") {
  std::mt19937_64 rng(99);
  const int K = 6;
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_rational(rng, 1);
    const auto b = random_rational(rng, 1);
    const auto pa = profile(a, K), pb = profile(b, K), pab = profile(a * b, K);
    for (int k = 0; k <= K; ++k) {
      Rational acc = 0;
      for (int i = 0; i <= k; ++i) acc += pa.coefficients[i] * pb.coefficients[k - i];
      CHECK(pab.coefficients[k] == acc);
    }
  }
}

TEST_CASE("property: profile coefficients approximate the function at large x") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_rational(rng, 1);
    const auto p = profile(a, 3);
    const double x = 1e4;
    double series = 0;
    for (int i = 0; i <= 3; ++i) series += p.coefficients[i].get_d() * std::pow(x, p.gamma.get_d() - i);
    const double scale = std::pow(x, p.gamma.get_d());
    CHECK(std::abs(a(x) - series) <= 1e-9 * scale + 1e-300);
  }
}

TEST_CASE("random polynomials evaluate consistently") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_polynomial(rng, 2, 6);
    const auto q = random_polynomial(rng, 1, 3);
    CHECK((p * q)(1.7) == doctest::Approx(p(1.7) * q(1.7)).epsilon(1e-12));
    CHECK((p + q)(1.7) == doctest::Approx(p(1.7) + q(1.7)).epsilon(1e-12));
  }
}
