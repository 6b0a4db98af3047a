#ifndef BCLASS_SRC_QPOLY_HPP
#define BCLASS_SRC_QPOLY_HPP

// Dense univariate polynomials over Q; coefficient i multiplies t^i.
// Internal helper behind the canonical form of GeneralizedRational.

#include <vector>

#include <gmpxx.h>

namespace bclass::detail {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coefficients);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  const mpq_class& leading() const { return c_.back(); }

  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  QPoly scaled(const mpq_class& factor) const;
  /// Quotient and remainder; `divisor` nonzero.
  void divmod(const QPoly& divisor, QPoly& quotient, QPoly& remainder) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Monic gcd; gcd(0, 0) is 0.
QPoly gcd(QPoly a, QPoly b);

}  // namespace bclass::detail

#endif
