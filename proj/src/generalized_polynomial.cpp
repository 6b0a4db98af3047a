#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "bclass/symseries.hpp"

namespace bclass {

GeneralizedPolynomial::GeneralizedPolynomial(long step, Terms terms) {
  if (step <= 0) throw std::invalid_argument("step denominator must be positive");
  for (auto it = terms.begin(); it != terms.end();) {
    if (sgn(it->second) == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  if (terms.empty()) return;
  long g = step;
  for (const auto& [e, c] : terms) g = std::gcd(g, e);
  if (g == 1) {
    step_ = step;
    terms_ = std::move(terms);
    return;
  }
  step_ = step / g;
  for (auto& [e, c] : terms) terms_.emplace(e / g, std::move(c));
}

GeneralizedPolynomial::GeneralizedPolynomial(const Rational& constant)
    : GeneralizedPolynomial(1, Terms{{0, constant}}) {}

GeneralizedPolynomial GeneralizedPolynomial::monomial(const Rational& coefficient, const Rational& exponent) {
  Rational e = exponent;
  e.canonicalize();
  if (!e.get_num().fits_slong_p() || !e.get_den().fits_slong_p())
    throw std::overflow_error("exponent out of range");
  return GeneralizedPolynomial(e.get_den().get_si(), Terms{{e.get_num().get_si(), coefficient}});
}

Rational GeneralizedPolynomial::leading_exponent() const {
  if (is_zero()) throw std::logic_error("leading exponent of the zero polynomial");
  return make_rational(terms_.rbegin()->first, step_);
}

Rational GeneralizedPolynomial::lowest_exponent() const {
  if (is_zero()) throw std::logic_error("lowest exponent of the zero polynomial");
  return make_rational(terms_.begin()->first, step_);
}

const Rational& GeneralizedPolynomial::leading_coefficient() const {
  if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

GeneralizedPolynomial::Terms GeneralizedPolynomial::terms_at_step(long step) const {
  if (step % step_ != 0) throw std::invalid_argument("target step must be a multiple of the current step");
  const long scale = step / step_;
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e * scale, c);
  return out;
}

GeneralizedPolynomial GeneralizedPolynomial::derivative() const {
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e == 0) continue;
    out.emplace(e - step_, c * make_rational(e, step_));
  }
  return GeneralizedPolynomial(step_, std::move(out));
}

double GeneralizedPolynomial::operator()(double x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c.get_d() * std::pow(x, static_cast<double>(e) / static_cast<double>(step_));
  return sum;
}

namespace {

long lcm_step(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b) {
  return std::lcm(a.step_denominator(), b.step_denominator());
}

GeneralizedPolynomial combine(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b, int sign) {
  const long step = lcm_step(a, b);
  auto terms = a.terms_at_step(step);
  for (const auto& [e, c] : b.terms_at_step(step)) {
    if (sign > 0)
      terms[e] += c;
    else
      terms[e] -= c;
  }
  return GeneralizedPolynomial(step, std::move(terms));
}

}  // namespace

GeneralizedPolynomial operator+(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b) {
  return combine(a, b, +1);
}

GeneralizedPolynomial operator-(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b) {
  return combine(a, b, -1);
}

GeneralizedPolynomial operator*(const GeneralizedPolynomial& a, const GeneralizedPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const long step = lcm_step(a, b);
  const auto ta = a.terms_at_step(step);
  const auto tb = b.terms_at_step(step);
  GeneralizedPolynomial::Terms out;
  for (const auto& [ea, ca] : ta)
    for (const auto& [eb, cb] : tb) out[ea + eb] += ca * cb;
  return GeneralizedPolynomial(step, std::move(out));
}

GeneralizedPolynomial operator-(const GeneralizedPolynomial& a) {
  auto terms = a.terms();
  for (auto& [e, c] : terms) c = -c;
  return GeneralizedPolynomial(a.step_denominator(), std::move(terms));
}

GeneralizedPolynomial pow(const GeneralizedPolynomial& base, unsigned long exponent) {
  GeneralizedPolynomial result(Rational(1));
  GeneralizedPolynomial square = base;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

}  // namespace bclass
