#ifndef BCLASS_TAYLOR_HPP
#define BCLASS_TAYLOR_HPP

// Truncated Taylor series ("jets") and derivative evaluation of parsed
// expressions. A jet of order m holds c_0..c_{m-1} with
// u(x0 + h) = sum_k c_k h^k + O(h^m); the k-th derivative is k! c_k.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bclass/expression.hpp"

namespace bclass {

template <class T>
class Jet {
 public:
  Jet() = default;
  Jet(std::size_t order, T value) : c_(order, T(0)) {
    if (order == 0) throw std::invalid_argument("jet order must be positive");
    c_[0] = value;
  }

  static Jet constant(std::size_t order, T value) { return Jet(order, value); }
  /// The independent variable expanded at x0.
  static Jet variable(std::size_t order, T x0) {
    Jet j(order, x0);
    if (order > 1) j.c_[1] = T(1);
    return j;
  }

  std::size_t order() const noexcept { return c_.size(); }
  const T& operator[](std::size_t k) const { return c_[k]; }
  T& operator[](std::size_t k) { return c_[k]; }
  T value() const { return c_[0]; }

  /// k-th derivative at the expansion point.
  T derivative(std::size_t k) const {
    T f = T(1);
    for (std::size_t i = 2; i <= k; ++i) f *= T(i);
    return f * c_[k];
  }

  friend Jet operator+(Jet a, const Jet& b) {
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
    return a;
  }
  friend Jet operator-(Jet a, const Jet& b) {
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] -= b.c_[k];
    return a;
  }
  friend Jet operator-(Jet a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet out(a.order(), T(0));
    for (std::size_t k = 0; k < a.order(); ++k) {
      T acc = T(0);
      for (std::size_t j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
      out.c_[k] = acc;
    }
    return out;
  }
  /// Requires b[0] != 0.
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet out(a.order(), T(0));
    for (std::size_t k = 0; k < a.order(); ++k) {
      T acc = a.c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * out.c_[k - j];
      out.c_[k] = acc / b.c_[0];
    }
    return out;
  }
  Jet scaled(T factor) const {
    Jet out = *this;
    for (auto& v : out.c_) v *= factor;
    return out;
  }

 private:
  std::vector<T> c_;
};

template <class T>
Jet<T> exp(const Jet<T>& a) {
  Jet<T> e(a.order(), std::exp(a[0]));
  for (std::size_t k = 1; k < a.order(); ++k) {
    T acc = T(0);
    for (std::size_t j = 1; j <= k; ++j) acc += T(j) * a[j] * e[k - j];
    e[k] = acc / T(k);
  }
  return e;
}

/// Requires a[0] > 0.
template <class T>
Jet<T> log(const Jet<T>& a) {
  Jet<T> l(a.order(), std::log(a[0]));
  for (std::size_t k = 1; k < a.order(); ++k) {
    T acc = T(0);
    for (std::size_t j = 1; j < k; ++j) acc += T(j) * l[j] * a[k - j];
    l[k] = (a[k] - acc / T(k)) / a[0];
  }
  return l;
}

template <class T>
void sin_cos(const Jet<T>& a, Jet<T>& s, Jet<T>& c) {
  s = Jet<T>(a.order(), std::sin(a[0]));
  c = Jet<T>(a.order(), std::cos(a[0]));
  for (std::size_t k = 1; k < a.order(); ++k) {
    T as = T(0), ac = T(0);
    for (std::size_t j = 1; j <= k; ++j) {
      as += T(j) * a[j] * c[k - j];
      ac += T(j) * a[j] * s[k - j];
    }
    s[k] = as / T(k);
    c[k] = -ac / T(k);
  }
}

template <class T>
Jet<T> sin(const Jet<T>& a) {
  Jet<T> s, c;
  sin_cos(a, s, c);
  return s;
}

template <class T>
Jet<T> cos(const Jet<T>& a) {
  Jet<T> s, c;
  sin_cos(a, s, c);
  return c;
}

/// Requires a[0] > 0 when order > 1.
template <class T>
Jet<T> sqrt(const Jet<T>& a) {
  Jet<T> r(a.order(), std::sqrt(a[0]));
  for (std::size_t k = 1; k < a.order(); ++k) {
    T acc = a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (T(2) * r[0]);
  }
  return r;
}

/// Composes an outer series (Taylor coefficients at a[0]) with the jet a.
template <class T>
Jet<T> compose_outer(const std::vector<T>& outer, const Jet<T>& a) {
  Jet<T> delta = a;
  delta[0] = T(0);
  Jet<T> r(a.order(), outer.back());
  for (std::size_t k = outer.size() - 1; k-- > 0;) {
    r = r * delta;
    r[0] += outer[k];
  }
  return r;
}

/// sin(u)/u with the removable singularity at 0 filled in.
template <class T>
Jet<T> sinc(const Jet<T>& a) {
  const std::size_t m = a.order();
  const T u0 = a[0];
  std::vector<T> outer(m, T(0));
  if (std::abs(u0) < T(1)) {
    // sinc(u0+h) = sum_n (-1)^n (u0+h)^{2n} / (2n+1)!
    // coefficient of h^k: sum_{2n>=k} (-1)^n C(2n,k) u0^{2n-k} / (2n+1)!
    for (std::size_t k = 0; k < m; ++k) {
      T sum = T(0);
      for (std::size_t n = (k + 1) / 2; n < k / 2 + 40; ++n) {
        const std::size_t p = 2 * n;
        // C(p,k) / (p+1)!  =  1 / (k! (p-k)! (p+1))
        T term = T(1) / T(p + 1);
        for (std::size_t i = 2; i <= k; ++i) term /= T(i);
        for (std::size_t i = 2; i <= p - k; ++i) term /= T(i);
        term *= std::pow(u0, static_cast<T>(p - k));
        sum += (n % 2 == 0) ? term : -term;
      }
      outer[k] = sum;
    }
  } else {
    const Jet<T> h = Jet<T>::variable(m, u0);
    const Jet<T> q = sin(h) / h;
    for (std::size_t k = 0; k < m; ++k) outer[k] = q[k];
  }
  return compose_outer(outer, a);
}

/// a^k by repeated squaring; negative k divides (requires a[0] != 0).
template <class T>
Jet<T> powi(const Jet<T>& a, long k) {
  Jet<T> result(a.order(), T(1));
  Jet<T> square = a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1UL) result = result * square;
    e >>= 1;
    if (e > 0) square = square * square;
  }
  if (k < 0) return Jet<T>(a.order(), T(1)) / result;
  return result;
}

/// f(x0), f'(x0), ..., f^(count-1)(x0). Throws EvaluationError on domain violations.
template <class T>
std::vector<T> derivatives(const Expression& e, T x0, std::size_t count);

template <class T>
Jet<T> evaluate_jet(const Expression& e, T x0, std::size_t order);

/// Plain evaluation; equals derivatives(e, x0, 1)[0].
template <class T>
T eval(const Expression& e, T x0);

inline double eval(const Expression& e, double x0) { return eval<double>(e, x0); }

}  // namespace bclass

#endif  // BCLASS_TAYLOR_HPP
