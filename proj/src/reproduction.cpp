#include "bclass/reproduction.hpp"

#include <cmath>
#include <functional>

#include "bclass/errors.hpp"
#include "bclass/taylor.hpp"

namespace bclass {

namespace {

bool mentions_x(const Node& n) {
  if (n.kind == NodeKind::Variable) return true;
  return (n.lhs && mentions_x(*n.lhs)) || (n.rhs && mentions_x(*n.rhs));
}

void check_row(const char* name, const TableEntry& e, double pub_F, double pub_D, std::vector<std::string>& out) {
  if (!matches_two_digits(*e.F_error, pub_F))
    out.push_back(std::string(name) + " nu=" + std::to_string(e.nu) + ": F error " + d_notation(*e.F_error) +
                  " does not match " + d_notation(pub_F) + " to two digits");
  if (!d_error_acceptable(e.nu, *e.D_error, pub_D))
    out.push_back(std::string(name) + " nu=" + std::to_string(e.nu) + ": D error " + d_notation(*e.D_error) +
                  " outside tolerance (expected " + d_notation(pub_D) + ")");
}

}  // namespace

const BuiltinIntegrand* find_builtin(std::string_view name) {
  for (const auto& b : builtin_integrands)
    if (b.name == name) return &b;
  return nullptr;
}

double evaluate_constant(std::string_view text) {
  const Expression e = parse_expression(text);
  if (mentions_x(e.root())) throw ParseError(0, "constant expression must not contain x");
  return eval(e, 0.0);
}

bool matches_two_digits(double ours, double expected) {
  if (!(expected > 0) || !std::isfinite(ours)) return false;
  const double unit = std::pow(10.0, std::floor(std::log10(expected)));
  return std::abs(ours - expected) <= 0.05 * unit;
}

bool d_error_acceptable(int nu, double ours, double expected) {
  if (!std::isfinite(ours)) return false;
  if (nu <= d_factor_nu_max) return ours <= expected * d_error_factor && ours >= expected / d_error_factor;
  if (nu == 10) return ours <= d_error_ceiling_nu10;
  return true;
}

ExtrapolationTable run_builtin(const BuiltinIntegrand& builtin, int nu_max, int q) {
  DSequenceOptions options;
  options.m = builtin.m;
  options.nu_max = nu_max;
  options.q = q;
  options.reference = evaluate_constant(builtin.reference);
  return d_sequence(parse_expression(builtin.expression), builtin.grid, options);
}

ReproductionRun reproduce_table(int nu_max, int q) {
  if (nu_max < 0 || nu_max > 10) throw std::invalid_argument("table reproduction covers nu = 0..10");
  ReproductionRun run;
  run.f = run_builtin(builtin_integrands[0], nu_max, q);
  run.phi = run_builtin(builtin_integrands[1], nu_max, q);
  for (int nu = 0; nu <= nu_max; ++nu) {
    const auto& pub = expected_errors[static_cast<std::size_t>(nu)];
    check_row("f", run.f.entries[static_cast<std::size_t>(nu)], pub.f_F_error, pub.f_D_error, run.violations);
    check_row("phi", run.phi.entries[static_cast<std::size_t>(nu)], pub.phi_F_error, pub.phi_D_error, run.violations);
  }
  return run;
}

}  // namespace bclass
