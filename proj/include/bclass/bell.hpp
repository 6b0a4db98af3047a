#ifndef BCLASS_BELL_HPP
#define BCLASS_BELL_HPP

// Partial (incomplete) exponential Bell polynomials
//
//   B_{n,k}(y_1..y_{n-k+1}) = sum  n! / prod_i j_i!  * prod_i (y_i / i!)^{j_i}
//
// over nonnegative j with sum_i j_i = k and sum_i i*j_i = n.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bclass/symseries.hpp"

namespace bclass {

struct PartitionIndex {
  int n = 0;
  int k = 0;
  std::vector<int> j;  ///< j[i-1] is the multiplicity of part size i, size n-k+1

  /// n! / (prod_i j_i! * prod_i (i!)^{j_i}); throws std::logic_error if not integral.
  Integer coefficient() const;
};

/// All solutions in lexicographic order of j. Requires 1 <= k <= n.
std::vector<PartitionIndex> enumerate_indices(int n, int k);

namespace detail {

inline double lift(const Integer& c, const double*) { return c.get_d(); }
inline long double lift(const Integer& c, const long double*) { return static_cast<long double>(c.get_d()); }
inline GeneralizedRational lift(const Integer& c, const GeneralizedRational*) {
  return GeneralizedRational(Rational(c));
}
inline Rational lift(const Integer& c, const Rational*) { return Rational(c); }

}  // namespace detail

/// Evaluates B_{n,k} for numeric or symbolic arguments. `y` holds y_1..y_{n-k+1}.
template <class T>
T bell_eval(int n, int k, std::span<const T> y) {
  if (k < 1 || k > n) throw std::invalid_argument("bell_eval requires 1 <= k <= n");
  if (y.size() != static_cast<std::size_t>(n - k + 1))
    throw std::invalid_argument("bell_eval requires exactly n-k+1 arguments");
  const T* tag = nullptr;
  T total = detail::lift(Integer(0), tag);
  for (const auto& index : enumerate_indices(n, k)) {
    T term = detail::lift(index.coefficient(), tag);
    for (std::size_t i = 0; i < index.j.size(); ++i)
      for (int r = 0; r < index.j[i]; ++r) term = term * y[i];
    total = total + term;
  }
  return total;
}

/// L_{n,k} = B_{n,k}(g', g'', ..., g^{(n-k+1)}) for 1 <= k <= n <= m.
class LMatrix {
 public:
  LMatrix(const GeneralizedPolynomial& g, int m);

  int order() const noexcept { return m_; }
  /// g^{(i)} for i = 1..m.
  const GeneralizedRational& g_derivative(int i) const { return derivs_.at(static_cast<std::size_t>(i - 1)); }
  const GeneralizedRational& operator()(int n, int k) const;

 private:
  int m_;
  std::vector<GeneralizedRational> derivs_;
  std::vector<GeneralizedRational> table_;  // row-major (n-1)*m + (k-1)
};

inline LMatrix l_matrix(const GeneralizedPolynomial& g, int m) { return LMatrix(g, m); }

}  // namespace bclass

#endif  // BCLASS_BELL_HPP
