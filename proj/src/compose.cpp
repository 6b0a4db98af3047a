#include "bclass/compose.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bclass/errors.hpp"

namespace bclass {

namespace {

long integer_gamma(const GeneralizedRational& a, const char* what, int k) {
  const AsymptoticProfile prof = profile(a, 0);
  if (prof.gamma.get_den() != 1 || !prof.integer_step)
    throw PreconditionError(std::string(what) + "_" + std::to_string(k) + " = " + to_string(a) +
                            " does not expand in integer powers of x");
  return prof.gamma.get_num().get_si();
}

}  // namespace

OdeCoefficients::OdeCoefficients(std::vector<GeneralizedRational> p) : p_(std::move(p)) {
  if (p_.empty()) throw PreconditionError("differential equation order must be at least 1");
  if (p_.back().is_zero()) throw PreconditionError("leading coefficient p_m must not vanish");
  i_.resize(p_.size());
  for (std::size_t k = 0; k < p_.size(); ++k)
    if (!p_[k].is_zero()) i_[k] = integer_gamma(p_[k], "p", static_cast<int>(k) + 1);
}

bool OdeCoefficients::is_class_b() const {
  for (std::size_t k = 0; k < i_.size(); ++k)
    if (i_[k] && *i_[k] > static_cast<long>(k) + 1) return false;
  return true;
}

CompositionResult compose_ode(const OdeCoefficients& ode, const GeneralizedPolynomial& g) {
  const int m = ode.order();
  const LMatrix L(g, m);  // validates g
  CompositionResult out;
  out.s = g.leading_exponent().get_num().get_si();
  out.pi.resize(static_cast<std::size_t>(m));
  out.r.resize(static_cast<std::size_t>(m));

  for (int k = m; k >= 1; --k) {
    GeneralizedRational rhs = ode.p(k).is_zero() ? GeneralizedRational() : compose_poly(ode.p(k), g);
    for (int n = k + 1; n <= m; ++n) {
      const auto& pn = out.pi[static_cast<std::size_t>(n - 1)];
      if (!pn.is_zero()) rhs = rhs - pn * L(n, k);
    }
    out.pi[static_cast<std::size_t>(k - 1)] = rhs / L(k, k);
  }

  std::vector<bool> zero(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    const auto& pk = out.pi[static_cast<std::size_t>(k - 1)];
    zero[static_cast<std::size_t>(k - 1)] = pk.is_zero();
    if (!pk.is_zero()) out.r[static_cast<std::size_t>(k - 1)] = integer_gamma(pk, "pi", k);
  }
  OrderBounds bounds = order_bounds(ode, out.s, zero);
  out.r_bound_recursive = std::move(bounds.recursive);
  out.r_bound_closed = std::move(bounds.closed);
  return out;
}

OrderBounds order_bounds(const OdeCoefficients& ode, long s, const std::vector<bool>& pi_zero) {
  const int m = ode.order();
  if (pi_zero.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("zero pattern length must equal m");
  OrderBounds out;
  out.r_m = s * (*ode.i(m) - m) + m;
  out.recursive.resize(static_cast<std::size_t>(m));
  out.closed.resize(static_cast<std::size_t>(m));
  out.recursive[static_cast<std::size_t>(m - 1)] = out.r_m;

  for (int k = m - 1; k >= 1; --k) {
    std::optional<long> best;
    auto consider = [&best](long v) { best = best ? std::max(*best, v) : v; };
    if (ode.i(k)) consider(s * (*ode.i(k) - k));
    for (int n = k + 1; n <= m; ++n) {
      const auto& rn = out.recursive[static_cast<std::size_t>(n - 1)];
      if (!pi_zero[static_cast<std::size_t>(n - 1)] && rn) consider(*rn - n);
    }
    if (best) out.recursive[static_cast<std::size_t>(k - 1)] = *best + k;
  }

  for (int k = 1; k <= m; ++k) {
    std::optional<long> best;
    for (int n = k; n <= m; ++n)
      if (ode.i(n)) best = best ? std::max(*best, s * (*ode.i(n) - n)) : s * (*ode.i(n) - n);
    if (best) out.closed[static_cast<std::size_t>(k - 1)] = *best + k;
  }
  return out;
}

std::vector<long> rho_bounds(const OdeCoefficients& ode) {
  const int m = ode.order();
  std::vector<long> out(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    std::optional<long> best;
    for (int n = k + 1; n <= m; ++n)
      if (ode.i(n)) best = best ? std::max(*best, *ode.i(n) - n) : *ode.i(n) - n;
    // p_m != 0, so the maximum is never empty.
    out[static_cast<std::size_t>(k)] = *best + k + 1;
    if (ode.is_class_b() && out[static_cast<std::size_t>(k)] > k + 1)
      throw std::logic_error("rho bound exceeds k+1 for a class-B equation");
  }
  return out;
}

B1Report verify_b1_membership(const GeneralizedRational& f) {
  const GeneralizedRational df = derivative(f);
  if (df.is_zero()) throw PreconditionError("f' vanishes identically");
  B1Report out;
  out.p1 = f / df;
  out.p1_profile = profile(out.p1);
  const auto& prof = out.p1_profile;
  out.member = prof.integer_step && prof.gamma.get_den() == 1 && prof.gamma <= 1;
  return out;
}

}  // namespace bclass
