#include <doctest.h>

#include <chrono>
#include <random>

#include "bclass/compose.hpp"
#include "bclass/errors.hpp"
#include "random_instances.hpp"

using namespace bclass;

namespace {

GeneralizedRational R(const char* text) { return parse_rational(text); }

/// p_k with exact integer order i, built as x^shift * (random ratio).
GeneralizedRational random_coefficient(std::mt19937_64& rng, long order) {
  const auto base = bclass::testing::random_rational(rng, 1, 4);
  const Rational shift = order - profile(base).gamma;
  return base * GeneralizedRational(GeneralizedPolynomial::monomial(Rational(1), shift));
}

struct Instance {
  OdeCoefficients ode;
  GeneralizedPolynomial g;
  long s;
};

Instance random_instance(std::mt19937_64& rng, int m, long s) {
  std::uniform_int_distribution<long> drop(0, 3);
  std::bernoulli_distribution absent(0.3);
  std::vector<GeneralizedRational> p(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    if (k < m && absent(rng)) continue;
    p[static_cast<std::size_t>(k - 1)] = random_coefficient(rng, k - drop(rng));
  }
  return {OdeCoefficients(p), bclass::testing::random_inner(rng, s), s};
}

void check_instance(const Instance& inst) {
  const auto& ode = inst.ode;
  const int m = ode.order();
  const auto res = compose_ode(ode, inst.g);
  const LMatrix L(inst.g, m);
  REQUIRE(res.pi.size() == static_cast<std::size_t>(m));
  CHECK(res.s == inst.s);
  for (int k = 1; k <= m; ++k) {
    GeneralizedRational sum;
    for (int n = k; n <= m; ++n) sum = sum + res.pi[n - 1] * L(n, k);
    const auto target = ode.p(k).is_zero() ? GeneralizedRational() : compose_poly(ode.p(k), inst.g);
    CHECK(sum == target);
  }
  REQUIRE_FALSE(res.pi[m - 1].is_zero());
  CHECK(*res.r[m - 1] == inst.s * (*ode.i(m) - m) + m);

  std::vector<bool> pi_zero;
  for (const auto& p : res.pi) pi_zero.push_back(p.is_zero());
  const auto bounds = order_bounds(ode, inst.s, pi_zero);
  CHECK(bounds.r_m == *res.r[m - 1]);
  for (int k = 1; k <= m; ++k) {
    if (res.pi[k - 1].is_zero()) {
      CHECK_FALSE(res.r[k - 1].has_value());
      continue;
    }
    const long r = *res.r[k - 1];
    CHECK(profile(res.pi[k - 1]).gamma == r);
    REQUIRE(res.r_bound_recursive[k - 1].has_value());
    REQUIRE(res.r_bound_closed[k - 1].has_value());
    CHECK(r <= *res.r_bound_recursive[k - 1]);
    CHECK(*res.r_bound_recursive[k - 1] <= *res.r_bound_closed[k - 1]);
    if (ode.is_class_b()) CHECK(r <= k);
  }
  const auto rho = rho_bounds(ode);
  for (int k = 0; k < m; ++k)
    if (ode.is_class_b()) CHECK(rho[k] <= k + 1);
}

}  // namespace

TEST_CASE("worked example with g = x^2") {
  const auto start = std::chrono::steady_clock::now();
  const OdeCoefficients ode({R("-(2*x^2+3)/(4*x)"), R("-3/4"), R("-x/8")});
  CHECK(ode.is_class_b());
  CHECK(*ode.i(1) == 1);
  CHECK(*ode.i(2) == 0);
  CHECK(*ode.i(3) == 1);
  const auto res = compose_ode(ode, parse_polynomial("x^2"));
  CHECK(res.pi[0] == R("-(16*x^4+15)/(64*x^3)"));
  CHECK(res.pi[1] == R("-9/(64*x^2)"));
  CHECK(res.pi[2] == R("-1/(64*x)"));
  CHECK(*res.r[0] == 1);
  CHECK(*res.r[1] == -2);
  CHECK(*res.r[2] == -1);
  CHECK(res.s == 2);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
}

TEST_CASE("identity inner function") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + trial % 4;
    const auto inst = random_instance(rng, m, 1);
    const auto res = compose_ode(inst.ode, parse_polynomial("x"));
    for (int k = 1; k <= m; ++k) CHECK(res.pi[k - 1] == inst.ode.p(k));
  }
}

TEST_CASE("m = 2 hand solution") {
  const OdeCoefficients ode({GeneralizedRational(), R("1")});
  const auto res = compose_ode(ode, parse_polynomial("x^2"));
  CHECK(res.pi[1] == R("1/(4*x^2)"));
  CHECK(res.pi[0] == R("-1/(4*x^3)"));

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng, 2, 1 + trial % 3);
    const auto r2 = compose_ode(inst.ode, inst.g);
    const GeneralizedRational g1(inst.g.derivative()), g2(inst.g.derivative().derivative());
    const auto pi2 = compose_poly(inst.ode.p(2), inst.g) / (g1 * g1);
    const auto p1g = inst.ode.p(1).is_zero() ? GeneralizedRational() : compose_poly(inst.ode.p(1), inst.g);
    CHECK(r2.pi[1] == pi2);
    CHECK(r2.pi[0] == (p1g - pi2 * g2) / g1);
  }
}

TEST_CASE("m = 1 hand solution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const long s = 1 + trial % 3;
    const auto inst = random_instance(rng, 1, s);
    const auto res = compose_ode(inst.ode, inst.g);
    CHECK(res.pi[0] == compose_poly(inst.ode.p(1), inst.g) / GeneralizedRational(inst.g.derivative()));
    CHECK(*res.r[0] == s * (*inst.ode.i(1) - 1) + 1);
  }
}

TEST_CASE("order bound examples") {
  const OdeCoefficients ode({R("-(2*x^2+3)/(4*x)"), R("-3/4"), R("-x/8")});
  const auto b = order_bounds(ode, 2, {false, false, false});
  CHECK(b.r_m == -1);
  CHECK(*b.recursive[1] == -2);
  CHECK(*b.recursive[0] == 1);
  CHECK(*b.closed[0] == 1);

  const auto b1 = order_bounds(ode, 1, {false, false, false});
  for (int k = 1; k <= 3; ++k) CHECK(*b1.closed[k - 1] == *ode.i(k));

  for (long s = 1; s <= 4; ++s) {
    const OdeCoefficients one({R("x+2")});
    CHECK(order_bounds(one, s, {false}).r_m == 1);
  }
}

TEST_CASE("rho bound examples") {
  const OdeCoefficients ode({R("-(2*x^2+3)/(4*x)"), R("-3/4"), R("-x/8")});
  CHECK(rho_bounds(ode) == std::vector<long>{1, 0, 1});
  const OdeCoefficients maximal({R("x"), R("x^2"), R("x^3")});
  CHECK(rho_bounds(maximal) == std::vector<long>{1, 2, 3});
  CHECK(rho_bounds(OdeCoefficients({R("x+1")})) == std::vector<long>{1});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(OdeCoefficients({R("x"), GeneralizedRational()}), PreconditionError);
  CHECK_THROWS_AS(OdeCoefficients({R("x^(1/2)")}), PreconditionError);
  CHECK_THROWS_AS(OdeCoefficients({R("x^(1/2)+x^(-1/2)")}), PreconditionError);
  const OdeCoefficients ode({R("x")});
  CHECK_THROWS_AS(compose_ode(ode, parse_polynomial("-x^2")), PreconditionError);
  CHECK_THROWS_AS(compose_ode(ode, parse_polynomial("3")), PreconditionError);
  CHECK_FALSE(OdeCoefficients({R("x^3")}).is_class_b());
}

TEST_CASE("class B1 membership") {
  const auto a = verify_b1_membership(R("1/(x+1)^3"));
  CHECK(a.p1 == R("-(x+1)/3"));
  CHECK(a.p1_profile.gamma == 1);
  CHECK(a.member);

  const auto b = verify_b1_membership(R("1/(sqrt(x)+1)^3"));
  CHECK(b.p1 == R("-(2/3)*(x+sqrt(x))"));
  CHECK_FALSE(b.p1_profile.integer_step);
  CHECK_FALSE(b.member);

  const auto c = verify_b1_membership(R("x^(-2)"));
  CHECK(c.p1 == R("-x/2"));
  CHECK(c.member);

  CHECK(verify_b1_membership(R("1/(x^2+1)")).p1 == R("-(x^2+1)/(2*x)"));
  CHECK(verify_b1_membership(R("1/(x^2+1)")).member);
  CHECK(verify_b1_membership(R("x^3")).p1 == R("x/3"));
  CHECK_THROWS_AS(verify_b1_membership(R("5")), PreconditionError);
  CHECK_THROWS_AS(verify_b1_membership(GeneralizedRational()), PreconditionError);
}

TEST_CASE("property: reconstruction, closure and bound chain on random class-B instances") {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20241014);
  int count = 0;
  for (int m = 1; m <= 4; ++m)
    for (long s = 1; s <= 3; ++s)
      for (int trial = 0; trial < 20; ++trial) {
        CAPTURE(m);
        CAPTURE(s);
        const auto inst = random_instance(rng, m, s);
        CHECK(inst.ode.is_class_b());
        check_instance(inst);
        ++count;
      }
  CHECK(count >= 200);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}
