#include "bclass/bell.hpp"

#include <algorithm>

#include "bclass/errors.hpp"

namespace bclass {

namespace {

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

void search(int position, int parts_left, int weight_left, PartitionIndex& current,
            std::vector<PartitionIndex>& out) {
  const int length = static_cast<int>(current.j.size());
  if (position > length) {
    if (parts_left == 0 && weight_left == 0) out.push_back(current);
    return;
  }
  const int max_here = std::min(parts_left, weight_left / position);
  for (int count = 0; count <= max_here; ++count) {
    const int parts = parts_left - count;
    const int weight = weight_left - count * position;
    // Remaining parts must each have size in [position+1, length].
    if (parts > 0 && (position == length || weight < parts * (position + 1) || weight > parts * length))
      continue;
    if (parts == 0 && weight != 0) continue;
    current.j[static_cast<std::size_t>(position - 1)] = count;
    search(position + 1, parts, weight, current, out);
    current.j[static_cast<std::size_t>(position - 1)] = 0;
  }
}

}  // namespace

Integer PartitionIndex::coefficient() const {
  Integer den = 1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    den *= factorial(j[i]);
    Integer fi = factorial(static_cast<long>(i) + 1);
    for (int r = 0; r < j[i]; ++r) den *= fi;
  }
  const Integer num = factorial(n);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("Bell coefficient is not an integer");
  return num / den;
}

std::vector<PartitionIndex> enumerate_indices(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("enumerate_indices requires 1 <= k <= n");
  PartitionIndex current;
  current.n = n;
  current.k = k;
  current.j.assign(static_cast<std::size_t>(n - k + 1), 0);
  std::vector<PartitionIndex> out;
  search(1, k, n, current, out);
  return out;
}

LMatrix::LMatrix(const GeneralizedPolynomial& g, int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("L matrix order must be positive");
  if (g.is_zero() || !g.has_integer_exponents())
    throw PreconditionError("inner function must be a nonzero polynomial with integer exponents");
  if (sgn(g.leading_coefficient()) <= 0) throw PreconditionError("inner function needs a positive leading coefficient");
  if (g.leading_exponent() < 1) throw PreconditionError("inner function must have degree at least 1");

  GeneralizedPolynomial d = g;
  derivs_.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    d = d.derivative();
    derivs_.emplace_back(d);
  }
  table_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int n = 1; n <= m; ++n)
    for (int k = 1; k <= n; ++k)
      table_[static_cast<std::size_t>((n - 1) * m + (k - 1))] =
          bell_eval<GeneralizedRational>(n, k, std::span<const GeneralizedRational>(derivs_.data(), static_cast<std::size_t>(n - k + 1)));
}

const GeneralizedRational& LMatrix::operator()(int n, int k) const {
  if (k < 1 || k > n || n > m_) throw std::out_of_range("L matrix index out of range");
  return table_[static_cast<std::size_t>((n - 1) * m_ + (k - 1))];
}

}  // namespace bclass
