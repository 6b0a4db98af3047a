// Text rendering and parsing of generalized rational functions.

#include <string>
#include <vector>

#include "bclass/errors.hpp"
#include "bclass/expression.hpp"
#include "bclass/symseries.hpp"

namespace bclass {

namespace {

struct IntTerm {
  Rational exponent;
  Integer coefficient;
};

std::string exponent_text(const Rational& e) {
  if (e.get_den() == 1) {
    if (sgn(e) >= 0) return e.get_num().get_str();
    return "(" + e.get_num().get_str() + ")";
  }
  return "(" + e.get_num().get_str() + "/" + e.get_den().get_str() + ")";
}

std::string render_terms(const std::vector<IntTerm>& terms) {
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? "-" : "+";
    first = false;
    const Integer mag = abs(t.coefficient);
    if (sgn(t.exponent) == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (t.exponent != 1) out += "^" + exponent_text(t.exponent);
  }
  return out;
}

/// Descending terms with coefficients multiplied by `scale` (which makes them integral).
std::vector<IntTerm> integral_terms(const GeneralizedPolynomial& p, const Rational& scale) {
  std::vector<IntTerm> out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->second * scale;
    out.push_back({make_rational(it->first, p.step_denominator()), c.get_num()});
  }
  return out;
}

bool is_product(const std::vector<IntTerm>& terms) {
  return terms.size() > 1 || (sgn(terms.front().exponent) != 0 && abs(terms.front().coefficient) != 1);
}

Rational exact_decimal(const std::string& literal, std::size_t position) {
  Integer mantissa = 0;
  long frac_digits = 0;
  long exponent = 0;
  bool in_fraction = false;
  std::size_t i = 0;
  for (; i < literal.size(); ++i) {
    const char c = literal[i];
    if (c == '.') {
      in_fraction = true;
    } else if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (in_fraction) ++frac_digits;
    } else {
      break;
    }
  }
  if (i < literal.size()) {
    try {
      exponent = std::stol(literal.substr(i + 1));
    } catch (const std::exception&) {
      throw ParseError(position, "number exponent out of range");
    }
  }
  const long shift = exponent - frac_digits;
  if (shift > 4096 || shift < -4096) throw ParseError(position, "number exponent out of range");
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift >= 0 ? Rational(mantissa * ten_power) : make_rational(mantissa, ten_power);
  r.canonicalize();
  return r;
}

/// Coefficient-one monomial x^e, if `r` is one.
bool unit_monomial(const GeneralizedRational& r, Rational& exponent) {
  const auto& n = r.numerator();
  const auto& d = r.denominator();
  if (n.term_count() != 1 || d.term_count() != 1) return false;
  if (n.leading_coefficient() != 1 || d.leading_coefficient() != 1) return false;
  exponent = n.leading_exponent() - d.leading_exponent();
  return true;
}

GeneralizedRational convert(const Node& n) {
  switch (n.kind) {
    case NodeKind::Constant: return GeneralizedRational(exact_decimal(n.literal, n.position));
    case NodeKind::Pi: throw ParseError(n.position, "pi is not a generalized rational function");
    case NodeKind::Variable: return GeneralizedRational::x();
    case NodeKind::Negate: return -convert(*n.lhs);
    case NodeKind::Add: return convert(*n.lhs) + convert(*n.rhs);
    case NodeKind::Subtract: return convert(*n.lhs) - convert(*n.rhs);
    case NodeKind::Multiply: return convert(*n.lhs) * convert(*n.rhs);
    case NodeKind::Divide: {
      GeneralizedRational denominator = convert(*n.rhs);
      if (denominator.is_zero()) throw ParseError(n.position, "division by zero");
      return convert(*n.lhs) / denominator;
    }
    case NodeKind::Power: {
      GeneralizedRational base = convert(*n.lhs);
      if (n.exponent_den == 1) {
        if (base.is_zero() && n.exponent_num < 0) throw ParseError(n.position, "negative power of zero");
        return pow(base, n.exponent_num);
      }
      Rational e;
      if (!unit_monomial(base, e))
        throw ParseError(n.position, "fractional powers are only supported on powers of x");
      return GeneralizedRational(GeneralizedPolynomial::monomial(Rational(1), e * make_rational(n.exponent_num, n.exponent_den)));
    }
    case NodeKind::Call: {
      if (n.function != Builtin::Sqrt)
        throw ParseError(n.position, std::string(builtin_name(n.function)) + " is not a generalized rational function");
      Rational e;
      if (!unit_monomial(convert(*n.lhs), e))
        throw ParseError(n.position, "sqrt is only supported on powers of x");
      return GeneralizedRational(GeneralizedPolynomial::monomial(Rational(1), e / 2));
    }
  }
  throw ParseError(n.position, "unsupported node");
}

}  // namespace

std::string to_string(const GeneralizedRational& a) {
  if (a.is_zero()) return "0";
  Integer lcm_den = 1;
  for (const auto* p : {&a.numerator(), &a.denominator()})
    for (const auto& [e, c] : p->terms()) lcm_den = lcm(lcm_den, c.get_den());
  Integer content = 0;
  for (const auto* p : {&a.numerator(), &a.denominator()})
    for (const auto& [e, c] : p->terms()) {
      Integer scaled = c.get_num() * (lcm_den / c.get_den());
      content = gcd(content, scaled);
    }
  Rational scale(lcm_den, content);
  scale.canonicalize();

  auto num = integral_terms(a.numerator(), scale);
  const auto den = integral_terms(a.denominator(), scale);
  const bool negative = sgn(num.front().coefficient) < 0;
  if (negative)
    for (auto& t : num) t.coefficient = -t.coefficient;

  const bool unit_den = den.size() == 1 && sgn(den.front().exponent) == 0 && den.front().coefficient == 1;
  std::string out = negative ? "-" : "";
  const std::string n = render_terms(num);
  if (unit_den) {
    out += (negative && num.size() > 1) ? "(" + n + ")" : n;
    return out;
  }
  out += num.size() > 1 ? "(" + n + ")" : n;
  out += "/";
  const std::string d = render_terms(den);
  out += is_product(den) ? "(" + d + ")" : d;
  return out;
}

std::string to_string(const GeneralizedPolynomial& p) { return to_string(GeneralizedRational(p)); }

GeneralizedRational to_rational(const Expression& expression) { return convert(expression.root()); }

GeneralizedRational parse_rational(std::string_view text) { return to_rational(parse_expression(text)); }

GeneralizedPolynomial parse_polynomial(std::string_view text) {
  GeneralizedRational r = parse_rational(text);
  const auto& d = r.denominator();
  if (d.term_count() != 1) throw ParseError(0, "expected a (Laurent) polynomial, got " + to_string(r));
  return r.numerator() * GeneralizedPolynomial::monomial(1 / d.leading_coefficient(), -d.leading_exponent());
}

}  // namespace bclass
