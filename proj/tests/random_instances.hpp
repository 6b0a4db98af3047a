#ifndef BCLASS_TESTS_RANDOM_INSTANCES_HPP
#define BCLASS_TESTS_RANDOM_INSTANCES_HPP

#include <random>

#include "bclass/symseries.hpp"

namespace bclass::testing {

inline Rational small_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return make_rational(num(rng), den(rng));
}

/// Random polynomial with exponents k/step, 0 <= k <= max_numerator.
inline GeneralizedPolynomial random_polynomial(std::mt19937_64& rng, long step, long max_numerator,
                                               bool nonzero = true) {
  std::uniform_int_distribution<long> count(1, 4);
  std::uniform_int_distribution<long> expo(0, max_numerator);
  for (;;) {
    GeneralizedPolynomial::Terms terms;
    for (long c = count(rng); c > 0; --c) terms[expo(rng)] += small_rational(rng);
    GeneralizedPolynomial p(step, terms);
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline GeneralizedRational random_rational(std::mt19937_64& rng, long step = 1, long max_numerator = 4) {
  return GeneralizedRational(random_polynomial(rng, step, max_numerator),
                             random_polynomial(rng, step, max_numerator));
}

/// Integer-exponent polynomial of exact degree s with positive leading coefficient.
inline GeneralizedPolynomial random_inner(std::mt19937_64& rng, long s) {
  GeneralizedPolynomial::Terms terms;
  std::uniform_int_distribution<int> lead(1, 3);
  terms[s] = lead(rng);
  std::bernoulli_distribution keep(0.5);
  for (long e = 0; e < s; ++e)
    if (keep(rng)) terms[e] = small_rational(rng, 3);
  return GeneralizedPolynomial(1, terms);
}

}  // namespace bclass::testing

#endif
