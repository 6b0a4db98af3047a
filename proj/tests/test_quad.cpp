#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>

#include "bclass/errors.hpp"
#include "bclass/expression.hpp"
#include "bclass/quad.hpp"
#include "bclass/taylor.hpp"

using namespace bclass;

namespace {

Integrand from_text(const char* text) {
  const Expression e = parse_expression(text);
  return [e](double x) { return eval(e, x); };
}

/// Si(z) by its Maclaurin series in long double; accurate for z below about 10.
long double sine_integral(long double z) {
  long double term = z, sum = z;
  for (int k = 1; k < 80; ++k) {
    term *= -z * z / ((2.0L * k) * (2.0L * k + 1.0L));
    sum += term / (2.0L * k + 1.0L);
  }
  return sum;
}

/// int_0^a sin^2 t / t^2 dt = Si(2a) - sin^2(a)/a.
double sinc2_integral(double a) {
  const long double s = std::sin(static_cast<long double>(a));
  return static_cast<double>(sine_integral(2.0L * a) - s * s / a);
}

}  // namespace

TEST_CASE("small rules") {
  const auto& r1 = gauss_nodes(1);
  CHECK(r1.nodes == std::vector<double>{0.0});
  CHECK(r1.weights == std::vector<double>{2.0});
  const auto& r2 = gauss_nodes(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-16));
  CHECK(r2.nodes[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-16));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(&gauss_nodes(7) == &gauss_nodes(7));
  CHECK_THROWS(gauss_nodes(0));
  CHECK_THROWS(gauss_nodes(65));
}

TEST_CASE("rules are symmetric, positive and sum to 2") {
  for (int q = 1; q <= max_gauss_points; ++q) {
    const auto& r = gauss_nodes(q);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(q));
    double sum = 0;
    for (int i = 0; i < q; ++i) {
      CHECK(r.weights[i] > 0);
      CHECK(std::abs(r.nodes[i] + r.nodes[q - 1 - i]) <= 1e-15);
      CHECK(std::abs(r.weights[i] - r.weights[q - 1 - i]) <= 1e-15);
      if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
      sum += r.weights[i];
    }
    CHECK(std::abs(sum - 2.0) <= 1e-14);
  }
}

TEST_CASE("degree exactness") {
  const auto& r5 = gauss_nodes(5);
  double s = 0;
  for (int i = 0; i < 5; ++i) s += r5.weights[i] * std::pow(r5.nodes[i], 8);
  CHECK(s == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> end(0.1, 3.0);
  for (int q = 1; q <= 20; ++q)
    for (int deg = 0; deg <= 2 * q - 1; ++deg) {
      const double a = end(rng), b = a + end(rng);
      const double got = panel_integrate([deg](double x) { return std::pow(x, deg); }, a, b, q);
      const double exact = (std::pow(b, deg + 1) - std::pow(a, deg + 1)) / (deg + 1);
      CAPTURE(q);
      CAPTURE(deg);
      CHECK(std::abs(got - exact) <= 1e-13 * std::abs(exact));
    }
}

TEST_CASE("panel examples") {
  CHECK(panel_integrate([](double x) { return x; }, 0, 1, 2) == 0.5);
  CHECK(panel_integrate([](double x) { return std::sin(x); }, 0, M_PI, 16) == doctest::Approx(2.0).epsilon(1e-14));
  const double oracle = sinc2_integral(1.6);
  CHECK(std::abs(panel_integrate(from_text("sinc(x)^2"), 0, 1.6, 16) - oracle) <= 1e-13);
}

TEST_CASE("domain errors name the node") {
  try {
    panel_integrate(from_text("log(x-1)"), 0, 2, 4);
    FAIL("expected an error");
  } catch (const IntegrationError& e) {
    CHECK(e.node() < 1.0);
  }
}

TEST_CASE("grids") {
  const auto g = make_grid("linear:1.6", 4);
  CHECK(g.points == std::vector<double>{1.6, 1.6 * 2, 1.6 * 3, 1.6 * 4});
  CHECK(g.descriptor == "linear:1.6");
  CHECK(make_grid("linear:1.6,0", 2).points == std::vector<double>{1.6, 3.2});
  CHECK(make_grid("linear:1,0.5", 2).points == std::vector<double>{1.5, 2.5});
  const auto s = make_grid("sqrtlinear:1.6", 3);
  CHECK(s.points[2] == std::sqrt(1.6 * 3));
  CHECK_THROWS_AS(make_grid("linear:", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_grid("cubic:1", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_grid("linear:-1", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_grid("linear:1,-1", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_grid("linear:1x", 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_grid(SampleGrid{{1.0, 1.0}, "custom"}), std::invalid_argument);
  CHECK_THROWS_AS(validate_grid(SampleGrid{{}, "custom"}), std::invalid_argument);
  CHECK_THROWS_AS(validate_grid(SampleGrid{{0.0, 1.0}, "custom"}), std::invalid_argument);
}

TEST_CASE("cumulative integrals") {
  const auto zero = cumulative([](double) { return 0.0; }, make_grid("linear:1", 5));
  for (double v : zero.chi) CHECK(v == 0.0);
  for (double v : zero.F) CHECK(v == 0.0);

  const auto f = cumulative(from_text("sinc(x)^2"), make_grid("linear:1.6", 31));
  REQUIRE(f.F.size() == 31);
  CHECK(f.node_count == 16);
  CHECK(std::abs(f.F.back() - M_PI / 2) == doctest::Approx(9.98e-3).epsilon(5e-3));
  CHECK(std::abs(f.F[0] - sinc2_integral(1.6)) <= 1e-13);
  CHECK(std::abs(f.F[2] - sinc2_integral(4.8)) <= 1e-13);
  double sum = 0;
  for (std::size_t i = 0; i < f.chi.size(); ++i) {
    sum += f.chi[i];
    CHECK(f.F[i] == sum);
  }

  const auto phi = cumulative(from_text("sinc(x^2)^2"), make_grid("sqrtlinear:1.6", 31));
  CHECK(std::abs(phi.F.back() - 2 * std::sqrt(M_PI) / 3) == doctest::Approx(4.70e-4).epsilon(5e-3));
}

TEST_CASE("parallel and serial results are bitwise identical") {
  for (const char* text : {"sinc(x)^2", "sinc(x^2)^2", "exp(-x)*cos(3*x)"}) {
    const auto f = from_text(text);
    const auto grid = make_grid("linear:0.7", 200);
    const auto a = cumulative(f, grid, 12);
    const auto b = cumulative_serial(f, grid, 12);
    CHECK(a.chi == b.chi);
    CHECK(a.F == b.F);
    CHECK(a.bisected == b.bisected);
  }
}

TEST_CASE("evaluator failures identify the first failing panel") {
  const auto grid = make_grid("linear:1.6", 6);
  for (auto fn : {&cumulative, &cumulative_serial}) {
    try {
      fn(from_text("sqrt(2-x)"), grid, 8);
      FAIL("expected an error");
    } catch (const IntegrationError& e) {
      CHECK(e.panel() == 1);
    }
  }
  CHECK_THROWS_AS(cumulative(from_text("x"), grid, 0), std::invalid_argument);
  CHECK_THROWS_AS(cumulative(from_text("x"), grid, 33), std::invalid_argument);
}

TEST_CASE("property: panel additivity") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const std::pair<const char*, const char*> cases[] = {
      {"sinc(x)^2", "linear:1.6"}, {"sinc(x^2)^2", "sqrtlinear:1.6"}, {"exp(-x)", "linear:0.5"}, {"1/(1+x^2)", "linear:1"}};
  for (const auto& [text, descriptor] : cases) {
    CAPTURE(text);
    const auto f = from_text(text);
    const auto grid = make_grid(descriptor, 20);
    const auto c = cumulative(f, grid);
    for (std::size_t i = 1; i < grid.points.size(); ++i) {
      const double a = grid.points[i - 1], b = grid.points[i];
      const double mid = a + u(rng) * (b - a);
      const double split = panel_integrate(f, a, mid, 16) + panel_integrate(f, mid, b, 16);
      CHECK(std::abs(split - c.chi[i]) <= 1e-13 * std::abs(c.chi[i]));
    }
  }
}

TEST_CASE("property: doubling q leaves benchmark panels unchanged") {
  const auto f = from_text("sinc(x)^2");
  const auto phi = from_text("sinc(x^2)^2");
  const auto gf = make_grid("linear:1.6", 31);
  const auto gp = make_grid("sqrtlinear:1.6", 31);
  for (std::size_t i = 0; i < 31; ++i) {
    const double a = i ? gf.points[i - 1] : 0.0, b = gf.points[i];
    const double lo = panel_integrate(f, a, b, 16), hi = panel_integrate(f, a, b, 32);
    CHECK(std::abs(lo - hi) <= 1e-12 * std::abs(hi));
    const double pa = i ? gp.points[i - 1] : 0.0, pb = gp.points[i];
    const double plo = panel_integrate(phi, pa, pb, 16), phi_hi = panel_integrate(phi, pa, pb, 32);
    CHECK(std::abs(plo - phi_hi) <= 1e-12 * std::abs(phi_hi));
  }
}

TEST_CASE("refinement safeguard bisects rough panels") {
  const auto rough = cumulative(from_text("sin(40*x)"), make_grid("linear:3", 3), 4);
  bool any = false;
  for (bool b : rough.bisected) any = any || b;
  CHECK(any);
  const auto smooth = cumulative(from_text("x^3"), make_grid("linear:1", 3), 4);
  for (bool b : smooth.bisected) CHECK_FALSE(b);
}
