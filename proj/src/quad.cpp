#include "bclass/quad.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>

namespace bclass {

namespace {

GaussRule build_rule(int q) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  const long double pi = std::numbers::pi_v<long double>;
  for (int i = 0; i < (q + 1) / 2; ++i) {
    // Root i of P_q counted from the right end.
    long double z = std::cos(pi * (i + 0.75L) / (q + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = z;
      for (int n = 2; n <= q; ++n) {
        const long double p2 = ((2 * n - 1) * z * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      if (q == 1) p0 = 1;
      dp = q * (z * p1 - p0) / (z * z - 1);
      const long double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    // Recompute the derivative at the converged root.
    long double p0 = 1, p1 = z;
    for (int n = 2; n <= q; ++n) {
      const long double p2 = ((2 * n - 1) * z * p1 - (n - 1) * p0) / n;
      p0 = p1;
      p1 = p2;
    }
    dp = q == 1 ? 1.0L : q * (z * p1 - p0) / (z * z - 1);
    const long double w = 2 / ((1 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(q - 1 - i);
    rule.nodes[hi] = static_cast<double>(z);
    rule.nodes[lo] = static_cast<double>(-z);
    rule.weights[hi] = rule.weights[lo] = static_cast<double>(w);
  }
  if (q % 2 == 1) rule.nodes[static_cast<std::size_t>(q / 2)] = 0.0;
  return rule;
}

const std::array<GaussRule, max_gauss_points + 1>& rule_table() {
  static const auto table = [] {
    std::array<GaussRule, max_gauss_points + 1> t;
    for (int q = 1; q <= max_gauss_points; ++q) t[static_cast<std::size_t>(q)] = build_rule(q);
    return t;
  }();
  return table;
}

double integrate(const Integrand& f, double a, double b, int q, std::size_t panel) {
  const GaussRule& rule = gauss_nodes(q);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = mid + half * rule.nodes[i];
    try {
      sum += rule.weights[i] * f(t);
    } catch (const IntegrationError&) {
      throw;
    } catch (const std::exception& e) {
      throw IntegrationError(panel, t, e.what());
    }
  }
  return half * sum;
}

struct PanelValue {
  double value;
  bool bisected;
};

PanelValue refined_panel(const Integrand& f, double a, double b, int q, std::size_t panel) {
  const double coarse = integrate(f, a, b, q, panel);
  const double fine = integrate(f, a, b, 2 * q, panel);
  if (std::abs(fine - coarse) <= panel_refine_tolerance * std::abs(fine)) return {fine, false};
  const double mid = 0.5 * (a + b);
  return {integrate(f, a, mid, 2 * q, panel) + integrate(f, mid, b, 2 * q, panel), true};
}

void check_order(int q) {
  if (q < 1 || 2 * q > max_gauss_points) throw std::invalid_argument("cumulative integration requires 1 <= q <= 32");
}

CumulativeIntegrals finish(std::vector<PanelValue> panels, int q) {
  CumulativeIntegrals out;
  out.node_count = q;
  out.chi.reserve(panels.size());
  out.F.reserve(panels.size());
  out.bisected.reserve(panels.size());
  double running = 0.0;
  for (const auto& p : panels) {
    out.chi.push_back(p.value);
    running += p.value;
    out.F.push_back(running);
    out.bisected.push_back(p.bisected);
  }
  return out;
}

double parse_number(std::string_view text, std::string_view descriptor) {
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("malformed grid descriptor '" + std::string(descriptor) + "'");
  return v;
}

}  // namespace

const GaussRule& gauss_nodes(int q) {
  if (q < 1 || q > max_gauss_points) throw std::invalid_argument("Gauss rule size must lie in [1, 64]");
  return rule_table()[static_cast<std::size_t>(q)];
}

double panel_integrate(const Integrand& f, double a, double b, int q) {
  if (!(a < b)) throw std::invalid_argument("panel requires a < b");
  return integrate(f, a, b, q, 0);
}

void validate_grid(const SampleGrid& grid) {
  if (grid.points.empty()) throw std::invalid_argument("grid has no points");
  double prev = 0.0;
  for (double x : grid.points) {
    if (!std::isfinite(x) || !(x > prev)) throw std::invalid_argument("grid points must be finite, positive and increasing");
    prev = x;
  }
}

SampleGrid make_grid(std::string_view descriptor, std::size_t count) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("grid descriptor needs 'kind:params'");
  const std::string_view kind = descriptor.substr(0, colon);
  const std::string_view params = descriptor.substr(colon + 1);
  SampleGrid grid;
  grid.descriptor = std::string(descriptor);
  grid.points.reserve(count);
  if (kind == "linear") {
    const auto comma = params.find(',');
    const double a = parse_number(params.substr(0, comma), descriptor);
    const double b = comma == std::string_view::npos ? 0.0 : parse_number(params.substr(comma + 1), descriptor);
    for (std::size_t l = 0; l < count; ++l) grid.points.push_back(a * static_cast<double>(l + 1) + b);
  } else if (kind == "sqrtlinear") {
    const double a = parse_number(params, descriptor);
    for (std::size_t l = 0; l < count; ++l) grid.points.push_back(std::sqrt(a * static_cast<double>(l + 1)));
  } else {
    throw std::invalid_argument("unknown grid kind '" + std::string(kind) + "'");
  }
  validate_grid(grid);
  return grid;
}

CumulativeIntegrals cumulative_serial(const Integrand& f, const SampleGrid& grid, int q) {
  check_order(q);
  validate_grid(grid);
  std::vector<PanelValue> panels(grid.points.size());
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double a = i == 0 ? 0.0 : grid.points[i - 1];
    panels[i] = refined_panel(f, a, grid.points[i], q, i);
  }
  return finish(std::move(panels), q);
}

CumulativeIntegrals cumulative(const Integrand& f, const SampleGrid& grid, int q) {
  check_order(q);
  validate_grid(grid);
  const auto count = static_cast<long>(grid.points.size());
  std::vector<PanelValue> panels(grid.points.size());
  std::vector<std::exception_ptr> failures(grid.points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      const double a = u == 0 ? 0.0 : grid.points[u - 1];
      panels[u] = refined_panel(f, a, grid.points[u], q, u);
    } catch (...) {
      failures[u] = std::current_exception();
    }
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  return finish(std::move(panels), q);
}

}  // namespace bclass
