#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "bclass/errors.hpp"
#include "bclass/symseries.hpp"
#include "qpoly.hpp"

namespace bclass {

namespace {

using detail::QPoly;

QPoly to_qpoly(const GeneralizedPolynomial::Terms& terms, long shift) {
  if (terms.empty()) return {};
  std::vector<mpq_class> c(static_cast<std::size_t>(terms.rbegin()->first - shift + 1));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - shift)] = v;
  return QPoly(std::move(c));
}

GeneralizedPolynomial from_qpoly(const QPoly& p, long step) {
  GeneralizedPolynomial::Terms terms;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) terms.emplace(static_cast<long>(i), c[i]);
  return GeneralizedPolynomial(step, std::move(terms));
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  a.divmod(b, q, r);
  return q;
}

}  // namespace

GeneralizedRational::GeneralizedRational() : den_(Rational(1)) {}

GeneralizedRational::GeneralizedRational(const Rational& constant)
    : num_(Rational(constant)), den_(Rational(1)) {}

GeneralizedRational::GeneralizedRational(GeneralizedPolynomial polynomial)
    : GeneralizedRational(polynomial, GeneralizedPolynomial(Rational(1))) {}

GeneralizedRational::GeneralizedRational(const GeneralizedPolynomial& numerator,
                                         const GeneralizedPolynomial& denominator) {
  if (denominator.is_zero()) throw DivisionByZero("denominator is identically zero");
  if (numerator.is_zero()) {
    den_ = GeneralizedPolynomial(Rational(1));
    return;
  }
  const long step = std::lcm(numerator.step_denominator(), denominator.step_denominator());
  const auto tn = numerator.terms_at_step(step);
  const auto td = denominator.terms_at_step(step);
  const long shift = std::min(tn.begin()->first, td.begin()->first);
  QPoly n = to_qpoly(tn, shift);
  QPoly d = to_qpoly(td, shift);
  const QPoly g = gcd(n, d);
  if (g.degree() > 0) {
    n = exact_quotient(n, g);
    d = exact_quotient(d, g);
  }
  const mpq_class inv_lead = 1 / d.leading();
  num_ = from_qpoly(n.scaled(inv_lead), step);
  den_ = from_qpoly(d.scaled(inv_lead), step);
}

bool GeneralizedRational::is_constant() const {
  if (num_.is_zero()) return true;
  return den_.term_count() == 1 && den_.terms().begin()->first == 0 && num_.term_count() == 1 &&
         num_.terms().begin()->first == 0;
}

long GeneralizedRational::step_denominator() const {
  return std::lcm(num_.step_denominator(), den_.step_denominator());
}

double GeneralizedRational::operator()(double x) const { return num_(x) / den_(x); }

GeneralizedRational operator+(const GeneralizedRational& a, const GeneralizedRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return GeneralizedRational(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                             a.denominator() * b.denominator());
}

GeneralizedRational operator-(const GeneralizedRational& a) {
  if (a.is_zero()) return a;
  return GeneralizedRational(-a.numerator(), a.denominator());
}

GeneralizedRational operator-(const GeneralizedRational& a, const GeneralizedRational& b) { return a + (-b); }

GeneralizedRational operator*(const GeneralizedRational& a, const GeneralizedRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return GeneralizedRational(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

GeneralizedRational operator/(const GeneralizedRational& a, const GeneralizedRational& b) {
  if (b.is_zero()) throw DivisionByZero("division by the identically-zero function");
  if (a.is_zero()) return {};
  return GeneralizedRational(a.numerator() * b.denominator(), a.denominator() * b.numerator());
}

GeneralizedRational pow(const GeneralizedRational& a, long k) {
  if (k == 0) return GeneralizedRational(Rational(1));
  if (a.is_zero()) {
    if (k < 0) throw DivisionByZero("negative power of the identically-zero function");
    return a;
  }
  const unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  GeneralizedPolynomial n = pow(a.numerator(), e);
  GeneralizedPolynomial d = pow(a.denominator(), e);
  return k > 0 ? GeneralizedRational(n, d) : GeneralizedRational(d, n);
}

GeneralizedRational canonicalize(const GeneralizedRational& a) {
  return GeneralizedRational(a.numerator(), a.denominator());
}

GeneralizedRational derivative(const GeneralizedRational& a) {
  if (a.is_zero()) return a;
  const auto& n = a.numerator();
  const auto& d = a.denominator();
  GeneralizedPolynomial top = n.derivative() * d - n * d.derivative();
  if (top.is_zero()) return {};
  return GeneralizedRational(top, d * d);
}

GeneralizedRational compose_poly(const GeneralizedRational& a, const GeneralizedPolynomial& g) {
  if (!a.has_integer_exponents())
    throw PreconditionError("composition requires integer exponents in the outer function");
  if (g.is_zero() || !g.has_integer_exponents())
    throw PreconditionError("composition requires a nonzero inner function with integer exponents");
  if (sgn(g.leading_coefficient()) <= 0)
    throw PreconditionError("composition requires a positive leading coefficient in the inner function");
  if (a.is_zero()) return a;

  long top = a.numerator().terms().rbegin()->first;
  top = std::max(top, a.denominator().terms().rbegin()->first);
  std::vector<GeneralizedPolynomial> powers;
  powers.reserve(static_cast<std::size_t>(top + 1));
  powers.emplace_back(Rational(1));
  for (long e = 1; e <= top; ++e) powers.push_back(powers.back() * g);

  auto substitute = [&](const GeneralizedPolynomial& p) {
    GeneralizedPolynomial sum;
    for (const auto& [e, c] : p.terms())
      sum = sum + GeneralizedPolynomial(Rational(c)) * powers[static_cast<std::size_t>(e)];
    return sum;
  };
  return GeneralizedRational(substitute(a.numerator()), substitute(a.denominator()));
}

AsymptoticProfile profile(const GeneralizedRational& a, int depth) {
  if (depth < 0) throw std::invalid_argument("profile depth must be nonnegative");
  AsymptoticProfile out;
  if (a.is_zero()) {
    out.identically_zero = true;
    out.gamma = 0;
    out.integer_step = true;
    out.coefficients.assign(static_cast<std::size_t>(depth) + 1, Rational(0));
    return out;
  }
  const long step = a.step_denominator();
  const auto tn = a.numerator().terms_at_step(step);
  const auto td = a.denominator().terms_at_step(step);
  const long n_top = tn.rbegin()->first;
  const long d_top = td.rbegin()->first;
  out.gamma = make_rational(n_top - d_top, step);

  // Descending coefficient lists of numerator and denominator in t = x^(1/step).
  auto descending = [](const GeneralizedPolynomial::Terms& t, long top) {
    std::vector<mpq_class> c(static_cast<std::size_t>(top - t.begin()->first + 1));
    for (const auto& [e, v] : t) c[static_cast<std::size_t>(top - e)] = v;
    return c;
  };
  const auto nd = descending(tn, n_top);
  const auto dd = descending(td, d_top);

  const std::size_t count = static_cast<std::size_t>(depth) * static_cast<std::size_t>(step) + 1;
  std::vector<mpq_class> c(count);
  for (std::size_t k = 0; k < count; ++k) {
    mpq_class acc = k < nd.size() ? nd[k] : mpq_class(0);
    for (std::size_t j = 1; j <= k && j < dd.size(); ++j) acc -= dd[j] * c[k - j];
    c[k] = acc / dd[0];
  }
  out.coefficients.reserve(static_cast<std::size_t>(depth) + 1);
  for (int i = 0; i <= depth; ++i) out.coefficients.push_back(c[static_cast<std::size_t>(i) * step]);
  out.strict = sgn(out.coefficients.front()) != 0;

  const GeneralizedRational scaled = a / GeneralizedRational(GeneralizedPolynomial::monomial(Rational(1), out.gamma));
  out.integer_step = scaled.has_integer_exponents();
  return out;
}

}  // namespace bclass
