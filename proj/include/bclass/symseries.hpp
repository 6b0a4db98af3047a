#ifndef BCLASS_SYMSERIES_HPP
#define BCLASS_SYMSERIES_HPP

// Exact arithmetic on generalized rational functions, i.e. quotients of
// finite sums  sum_e c_e x^(e/d)  with rational c_e, and extraction of their
// asymptotic data at x -> infinity.
//
// A GeneralizedRational is kept in canonical form at all times: numerator
// and denominator have nonnegative exponents, share no common factor, and
// the denominator's leading (highest-exponent) coefficient is 1. Canonical
// form is unique, so structural equality is mathematical equality.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bclass {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

class Expression;

class GeneralizedPolynomial {
 public:
  /// exponent numerator -> coefficient; exponent = numerator / step_denominator
  using Terms = std::map<long, Rational>;

  GeneralizedPolynomial() = default;
  /// Drops zero coefficients and reduces `step` to its minimal value.
  GeneralizedPolynomial(long step, Terms terms);
  explicit GeneralizedPolynomial(const Rational& constant);

  static GeneralizedPolynomial monomial(const Rational& coefficient, const Rational& exponent);
  static GeneralizedPolynomial x() { return monomial(Rational(1), Rational(1)); }

  long step_denominator() const noexcept { return step_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool has_integer_exponents() const noexcept { return step_ == 1; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // The following require a nonzero polynomial.
  Rational leading_exponent() const;
  Rational lowest_exponent() const;
  const Rational& leading_coefficient() const;

  /// Terms re-expressed with exponent denominator `step`, which must be a
  /// multiple of step_denominator().
  Terms terms_at_step(long step) const;

  GeneralizedPolynomial derivative() const;
  double operator()(double x) const;

  friend GeneralizedPolynomial operator+(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b);
  friend GeneralizedPolynomial operator-(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b);
  friend GeneralizedPolynomial operator*(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b);
  friend GeneralizedPolynomial operator-(const GeneralizedPolynomial& a);
  friend bool operator==(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b) {
    return a.step_ == b.step_ && a.terms_ == b.terms_;
  }

 private:
  long step_ = 1;
  Terms terms_;
};

GeneralizedPolynomial pow(const GeneralizedPolynomial& base, unsigned long exponent);

class GeneralizedRational {
 public:
  /// The identically-zero function.
  GeneralizedRational();
  explicit GeneralizedRational(const Rational& constant);
  explicit GeneralizedRational(GeneralizedPolynomial polynomial);
  /// Throws DivisionByZero when `denominator` is the zero polynomial.
  GeneralizedRational(const GeneralizedPolynomial& numerator, const GeneralizedPolynomial& denominator);

  static GeneralizedRational x() { return GeneralizedRational(GeneralizedPolynomial::x()); }

  const GeneralizedPolynomial& numerator() const noexcept { return num_; }
  const GeneralizedPolynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const;
  /// lcm of the numerator's and denominator's exponent denominators.
  long step_denominator() const;
  bool has_integer_exponents() const { return step_denominator() == 1; }

  double operator()(double x) const;

  friend bool operator==(const GeneralizedRational& a, const GeneralizedRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  GeneralizedPolynomial num_;
  GeneralizedPolynomial den_;
};

GeneralizedRational operator+(const GeneralizedRational& a, const GeneralizedRational& b);
GeneralizedRational operator-(const GeneralizedRational& a, const GeneralizedRational& b);
GeneralizedRational operator*(const GeneralizedRational& a, const GeneralizedRational& b);
/// Throws DivisionByZero when `b` is identically zero.
GeneralizedRational operator/(const GeneralizedRational& a, const GeneralizedRational& b);
GeneralizedRational operator-(const GeneralizedRational& a);

inline GeneralizedRational add(const GeneralizedRational& a, const GeneralizedRational& b) { return a + b; }
inline GeneralizedRational mul(const GeneralizedRational& a, const GeneralizedRational& b) { return a * b; }
inline GeneralizedRational div(const GeneralizedRational& a, const GeneralizedRational& b) { return a / b; }
/// Negative `k` on the zero function throws DivisionByZero. pow(a, 0) == 1.
GeneralizedRational pow(const GeneralizedRational& a, long k);

/// Re-derives the canonical form from scratch; the identity on valid values.
GeneralizedRational canonicalize(const GeneralizedRational& a);

GeneralizedRational derivative(const GeneralizedRational& a);

/// a(g(x)). Both `a` and `g` must have integer exponents and g a positive
/// leading coefficient; otherwise PreconditionError.
GeneralizedRational compose_poly(const GeneralizedRational& a, const GeneralizedPolynomial& g);

/// Expansion data at infinity:  a(x) ~ sum_i coefficients[i] * x^(gamma - i).
struct AsymptoticProfile {
  bool identically_zero = false;
  Rational gamma;
  bool strict = false;        ///< coefficients[0] != 0
  bool integer_step = true;   ///< a(x) / x^gamma expands in integer powers of 1/x
  std::vector<Rational> coefficients;
};

inline constexpr int default_profile_depth = 8;

/// Coefficients alpha_0..alpha_K by exact long division in descending
/// powers of x^(1/d). The zero function yields the identically-zero profile.
AsymptoticProfile profile(const GeneralizedRational& a, int depth = default_profile_depth);

// Text form, e.g. "-(16*x^4+15)/(64*x^3)" or "x^(1/2)+1".
std::string to_string(const GeneralizedPolynomial& p);
std::string to_string(const GeneralizedRational& a);

/// Parses the expression grammar and converts it exactly. Throws ParseError
/// for syntax errors and for constructs outside the generalized rationals
/// (transcendental functions, pi, fractional powers of non-monomials).
GeneralizedRational parse_rational(std::string_view text);
GeneralizedRational to_rational(const Expression& expression);
/// Accepts only expressions that reduce to a polynomial (denominator 1).
GeneralizedPolynomial parse_polynomial(std::string_view text);

}  // namespace bclass

#endif  // BCLASS_SYMSERIES_HPP
