#ifndef BCLASS_COMPOSE_HPP
#define BCLASS_COMPOSE_HPP

// Transformation of an ODE  f = sum_{k=1}^m p_k f^(k)  into the ODE
// phi = sum_k pi_k phi^(k)  satisfied by phi = f o g, together with the
// asymptotic order bookkeeping of the coefficients.

#include <optional>
#include <vector>

#include "bclass/bell.hpp"
#include "bclass/symseries.hpp"

namespace bclass {

class OdeCoefficients {
 public:
  /// p[k-1] multiplies f^(k). Zero entries mean p_k == 0. Throws
  /// PreconditionError if p_m == 0 or a nonzero p_k has a non-integer
  /// leading exponent or fractional exponent steps.
  explicit OdeCoefficients(std::vector<GeneralizedRational> p);

  int order() const noexcept { return static_cast<int>(p_.size()); }
  const GeneralizedRational& p(int k) const { return p_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<GeneralizedRational>& coefficients() const noexcept { return p_; }
  /// i_k for nonzero p_k.
  std::optional<long> i(int k) const { return i_.at(static_cast<std::size_t>(k - 1)); }
  /// i_k <= k for every nonzero p_k.
  bool is_class_b() const;

 private:
  std::vector<GeneralizedRational> p_;
  std::vector<std::optional<long>> i_;
};

struct OrderBounds {
  long r_m = 0;
  /// Recursive bound for each k (index k-1), propagated from the bounds of
  /// higher k; empty when every term of the maximum is absent.
  std::vector<std::optional<long>> recursive;
  /// max over nonzero p_n, n >= k, of s(i_n - n), plus k.
  std::vector<std::optional<long>> closed;
};

struct CompositionResult {
  std::vector<GeneralizedRational> pi;  ///< pi[k-1] multiplies phi^(k)
  std::vector<std::optional<long>> r;   ///< exact orders of nonzero pi_k
  std::vector<std::optional<long>> r_bound_recursive;
  std::vector<std::optional<long>> r_bound_closed;
  long s = 0;
};

/// Requires g with integer exponents, degree s >= 1 and positive leading
/// coefficient. Solves the triangular system by back-substitution k = m..1.
CompositionResult compose_ode(const OdeCoefficients& ode, const GeneralizedPolynomial& g);

/// `pi_zero[k-1]` tells whether pi_k == 0; terms for zero pi_n are absent.
OrderBounds order_bounds(const OdeCoefficients& ode, long s, const std::vector<bool>& pi_zero);

/// Upper bounds for the tail-expansion exponents rho_0..rho_{m-1}.
std::vector<long> rho_bounds(const OdeCoefficients& ode);

struct B1Report {
  GeneralizedRational p1;  ///< f / f'
  AsymptoticProfile p1_profile;
  bool member = false;     ///< integer steps, integer gamma <= 1
};

/// Throws PreconditionError when f' == 0 (including f == 0).
B1Report verify_b1_membership(const GeneralizedRational& f);

}  // namespace bclass

#endif  // BCLASS_COMPOSE_HPP
