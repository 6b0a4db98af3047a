#ifndef BCLASS_DTRANSFORM_HPP
#define BCLASS_DTRANSFORM_HPP

// The D^(m) transformation for  I = int_0^inf f(t) dt.
//
// For a window of samples l = j..j+N, N = n_1 + ... + n_m, the unknowns
// (D, beta_{k,i}) solve
//
//   F(x_l) = D + sum_{k=1}^m x_l^{e_k} f^{(k-1)}(x_l) sum_{i=0}^{n_k-1} beta_{k,i} x_l^{-i}
//
// where e_k = k in the default ("friendly") mode, or a caller-supplied
// exponent (typically rho_{k-1}).

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bclass/expression.hpp"
#include "bclass/quad.hpp"

namespace bclass {

struct DSystemSpec {
  int m = 1;
  std::size_t j = 0;
  std::vector<int> n;          ///< n_1..n_m
  std::vector<int> exponents;  ///< e_1..e_m

  std::size_t N() const;
  std::size_t dimension() const { return N() + 1; }
};

/// e_k = k.
std::vector<int> friendly_exponents(int m);
/// Spec with n = (nu, ..., nu) and the given exponents (friendly when empty).
DSystemSpec diagonal_spec(int m, int nu, std::size_t j = 0, std::vector<int> exponents = {});

struct SampleRow {
  double x = 0.0;
  double F = 0.0;
  std::vector<double> derivs;  ///< f(x), f'(x), ..., f^{(m-1)}(x)
};

struct DenseSystem {
  std::size_t dim = 0;
  std::vector<double> matrix;  ///< row-major dim x dim
  std::vector<double> rhs;
};

/// Requires exactly spec.dimension() rows (the window l = j..j+N), each with m derivatives.
DenseSystem build_system(const DSystemSpec& spec, std::span<const SampleRow> rows);

struct Solution {
  double value = 0.0;           ///< D
  double residual = 0.0;        ///< ||A sol - rhs||_inf of the unscaled system, sol before rounding to double
  std::vector<double> unknowns;  ///< D followed by beta, k-major
};

inline constexpr double singular_pivot_threshold = 1e-300;

/// Column-equilibrated Gaussian elimination with partial pivoting, carried
/// out in long double.
/// Throws SingularSystemError on a vanishing pivot or a zero column.
Solution solve(const DenseSystem& system);

struct TableEntry {
  int nu = 0;
  double F = 0.0;  ///< F(x_{j+m*nu})
  double D = 0.0;
  double residual = 0.0;
  bool reliable = true;  ///< residual <= residual_tolerance * ||rhs||_inf
  std::optional<double> F_error;
  std::optional<double> D_error;
  std::vector<double> beta;
};

inline constexpr double residual_tolerance = 1e-8;

struct ExtrapolationTable {
  std::string integrand;
  std::string grid;
  int m = 1;
  std::vector<int> exponents;
  std::optional<double> reference;
  std::vector<TableEntry> entries;
};

struct DSequenceOptions {
  int m = 3;
  std::vector<int> exponents;  ///< empty: friendly
  int nu_max = 10;
  std::size_t j = 0;
  std::optional<double> reference;
  int q = default_gauss_points;
};

/// Thrown when the system for some nu is singular; `nu()` is the smallest such nu.
class DSequenceError : public std::runtime_error {
 public:
  DSequenceError(int nu, const std::string& what)
      : std::runtime_error("nu = " + std::to_string(nu) + ": " + what), nu_(nu) {}
  int nu() const noexcept { return nu_; }

 private:
  int nu_;
};

/// Samples F and the derivatives on grid points 0..j+m*nu_max for
/// n = (nu,...,nu), nu = 0..nu_max. `grid` must hold at least that many points.
/// Sampling and the per-nu solves run in parallel (OpenMP).
ExtrapolationTable d_sequence(const Expression& integrand, const SampleGrid& grid, const DSequenceOptions& options);
/// Serial reference; bitwise identical output.
ExtrapolationTable d_sequence_serial(const Expression& integrand, const SampleGrid& grid,
                                     const DSequenceOptions& options);

/// Convenience overload: builds the grid from a descriptor with exactly
/// j + m*nu_max + 1 points.
ExtrapolationTable d_sequence(const Expression& integrand, std::string_view grid_descriptor,
                              const DSequenceOptions& options);

/// Sample rows for grid points [0, count) (parallel).
std::vector<SampleRow> sample_rows(const Expression& integrand, const SampleGrid& grid, int m, int q,
                                   std::size_t count);

/// The table computed from prepared samples (the solve stage alone).
ExtrapolationTable solve_sequence(std::span<const SampleRow> rows, const DSequenceOptions& options);
ExtrapolationTable solve_sequence_serial(std::span<const SampleRow> rows, const DSequenceOptions& options);

// Output formats.
void write_csv(const ExtrapolationTable& table, std::ostream& out);
void write_json(const ExtrapolationTable& table, std::ostream& out);
void write_pretty(const ExtrapolationTable& table, std::ostream& out);
/// "3.44D-01"
std::string d_notation(double v);

}  // namespace bclass

#endif  // BCLASS_DTRANSFORM_HPP
