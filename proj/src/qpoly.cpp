#include "qpoly.hpp"

#include <algorithm>
#include <utility>

namespace bclass::detail {

QPoly::QPoly(std::vector<mpq_class> coefficients) : c_(std::move(coefficients)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const mpq_class& factor) const {
  std::vector<mpq_class> out(c_);
  for (auto& v : out) v *= factor;
  return QPoly(std::move(out));
}

void QPoly::divmod(const QPoly& divisor, QPoly& quotient, QPoly& remainder) const {
  std::vector<mpq_class> rem(c_);
  const int dd = divisor.degree();
  const int qd = degree() - dd;
  std::vector<mpq_class> quo(qd >= 0 ? qd + 1 : 0);
  const mpq_class& lead = divisor.leading();
  for (int i = qd; i >= 0; --i) {
    mpq_class factor = rem[i + dd] / lead;
    if (sgn(factor) == 0) continue;
    quo[i] = factor;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= factor * divisor.c_[j];
  }
  quotient = QPoly(std::move(quo));
  remainder = QPoly(std::move(rem));
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    // Keep the running remainder monic to limit coefficient growth.
    b = r.is_zero() ? std::move(r) : r.scaled(1 / mpq_class(r.leading()));
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / mpq_class(a.leading()));
}

}  // namespace bclass::detail
