#include "bclass/dtransform.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include "bclass/errors.hpp"
#include "bclass/taylor.hpp"

namespace bclass {

std::size_t DSystemSpec::N() const {
  return std::accumulate(n.begin(), n.end(), std::size_t{0},
                         [](std::size_t acc, int v) { return acc + static_cast<std::size_t>(v); });
}

std::vector<int> friendly_exponents(int m) {
  std::vector<int> e(static_cast<std::size_t>(m));
  std::iota(e.begin(), e.end(), 1);
  return e;
}

DSystemSpec diagonal_spec(int m, int nu, std::size_t j, std::vector<int> exponents) {
  if (m < 1 || nu < 0) throw std::invalid_argument("diagonal spec requires m >= 1 and nu >= 0");
  DSystemSpec spec;
  spec.m = m;
  spec.j = j;
  spec.n.assign(static_cast<std::size_t>(m), nu);
  spec.exponents = exponents.empty() ? friendly_exponents(m) : std::move(exponents);
  return spec;
}

DenseSystem build_system(const DSystemSpec& spec, std::span<const SampleRow> rows) {
  const auto m = static_cast<std::size_t>(spec.m);
  if (spec.n.size() != m || spec.exponents.size() != m)
    throw std::invalid_argument("n and exponents must both have m entries");
  const std::size_t dim = spec.dimension();
  if (rows.size() != dim)
    throw std::invalid_argument("system needs " + std::to_string(dim) + " sample rows, got " + std::to_string(rows.size()));
  DenseSystem sys;
  sys.dim = dim;
  sys.matrix.assign(dim * dim, 0.0);
  sys.rhs.resize(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const SampleRow& row = rows[r];
    if (row.derivs.size() < m) throw std::invalid_argument("sample row has fewer than m derivatives");
    double* a = &sys.matrix[r * dim];
    a[0] = 1.0;
    std::size_t col = 1;
    for (std::size_t k = 0; k < m; ++k) {
      double base = std::pow(row.x, spec.exponents[k]) * row.derivs[k];
      for (int i = 0; i < spec.n[k]; ++i) {
        a[col++] = base;
        base /= row.x;
      }
    }
    sys.rhs[r] = row.F;
  }
  return sys;
}

Solution solve(const DenseSystem& system) {
  const std::size_t n = system.dim;
  if (n == 0 || system.matrix.size() != n * n || system.rhs.size() != n)
    throw std::invalid_argument("malformed linear system");

  using Real = long double;
  std::vector<Real> a(system.matrix.begin(), system.matrix.end());
  std::vector<Real> b(system.rhs.begin(), system.rhs.end());
  std::vector<Real> scale(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) scale[c] = std::max(scale[c], std::abs(a[r * n + c]));
    if (scale[c] == 0) throw SingularSystemError("column " + std::to_string(c) + " is identically zero");
    for (std::size_t r = 0; r < n; ++r) a[r * n + c] /= scale[c];
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a[r * n + k]) > std::abs(a[p * n + k])) p = r;
    if (std::abs(a[p * n + k]) < singular_pivot_threshold)
      throw SingularSystemError("pivot " + std::to_string(k) + " vanishes");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      std::swap(b[k], b[p]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const Real factor = a[r * n + k] / a[k * n + k];
      if (factor == 0) continue;
      for (std::size_t c = k; c < n; ++c) a[r * n + c] -= factor * a[k * n + c];
      b[r] -= factor * b[k];
    }
  }
  std::vector<Real> y(n);
  for (std::size_t k = n; k-- > 0;) {
    Real acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a[k * n + c] * y[c];
    y[k] = acc / a[k * n + k];
  }

  for (std::size_t c = 0; c < n; ++c) y[c] /= scale[c];
  Solution sol;
  sol.unknowns.assign(y.begin(), y.end());
  sol.value = sol.unknowns[0];
  for (std::size_t r = 0; r < n; ++r) {
    Real acc = -static_cast<Real>(system.rhs[r]);
    for (std::size_t c = 0; c < n; ++c) acc += static_cast<Real>(system.matrix[r * n + c]) * y[c];
    sol.residual = std::max(sol.residual, static_cast<double>(std::abs(acc)));
  }
  return sol;
}

namespace {

void check_options(const DSequenceOptions& options) {
  if (options.m < 1) throw std::invalid_argument("m must be at least 1");
  if (options.nu_max < 0) throw std::invalid_argument("nu_max must be nonnegative");
  if (!options.exponents.empty() && options.exponents.size() != static_cast<std::size_t>(options.m))
    throw std::invalid_argument("exponent list must have m entries");
}

std::size_t required_points(const DSequenceOptions& options) {
  return options.j + static_cast<std::size_t>(options.m) * static_cast<std::size_t>(options.nu_max) + 1;
}

TableEntry solve_entry(std::span<const SampleRow> rows, const DSequenceOptions& options, int nu) {
  const DSystemSpec spec = diagonal_spec(options.m, nu, options.j, options.exponents);
  const auto window = rows.subspan(spec.j, spec.dimension());
  const DenseSystem sys = build_system(spec, window);
  Solution sol;
  try {
    sol = solve(sys);
  } catch (const SingularSystemError& e) {
    throw DSequenceError(nu, e.what());
  }
  TableEntry entry;
  entry.nu = nu;
  entry.F = window.back().F;
  entry.D = sol.value;
  entry.residual = sol.residual;
  double rhs_norm = 0.0;
  for (double v : sys.rhs) rhs_norm = std::max(rhs_norm, std::abs(v));
  entry.reliable = sol.residual <= residual_tolerance * rhs_norm;
  entry.beta.assign(sol.unknowns.begin() + 1, sol.unknowns.end());
  if (options.reference) {
    entry.F_error = std::abs(entry.F - *options.reference);
    entry.D_error = std::abs(entry.D - *options.reference);
  }
  return entry;
}

ExtrapolationTable make_table(const DSequenceOptions& options) {
  ExtrapolationTable table;
  table.m = options.m;
  table.exponents = options.exponents.empty() ? friendly_exponents(options.m) : options.exponents;
  table.reference = options.reference;
  return table;
}

SampleGrid prefix(const SampleGrid& grid, std::size_t count) {
  if (grid.points.size() < count)
    throw std::invalid_argument("grid has " + std::to_string(grid.points.size()) + " points, need " +
                                std::to_string(count));
  SampleGrid out;
  out.descriptor = grid.descriptor;
  out.points.assign(grid.points.begin(), grid.points.begin() + static_cast<std::ptrdiff_t>(count));
  return out;
}

void fill_derivatives(const Expression& integrand, const SampleGrid& grid, int m, std::vector<SampleRow>& rows,
                      std::size_t l) {
  rows[l].x = grid.points[l];
  rows[l].derivs = derivatives<double>(integrand, grid.points[l], static_cast<std::size_t>(m));
}

Integrand as_integrand(const Expression& e) {
  return [e](double x) { return eval(e, x); };
}

std::vector<SampleRow> sample_rows_serial(const Expression& integrand, const SampleGrid& grid, int m, int q,
                                          std::size_t count) {
  const SampleGrid g = prefix(grid, count);
  const CumulativeIntegrals ci = cumulative_serial(as_integrand(integrand), g, q);
  std::vector<SampleRow> rows(count);
  for (std::size_t l = 0; l < count; ++l) {
    fill_derivatives(integrand, g, m, rows, l);
    rows[l].F = ci.F[l];
  }
  return rows;
}

}  // namespace

std::vector<SampleRow> sample_rows(const Expression& integrand, const SampleGrid& grid, int m, int q,
                                   std::size_t count) {
  const SampleGrid g = prefix(grid, count);
  const CumulativeIntegrals ci = cumulative(as_integrand(integrand), g, q);
  std::vector<SampleRow> rows(count);
  std::vector<std::exception_ptr> failures(count);
#pragma omp parallel for schedule(static)
  for (long l = 0; l < static_cast<long>(count); ++l) {
    try {
      fill_derivatives(integrand, g, m, rows, static_cast<std::size_t>(l));
    } catch (...) {
      failures[static_cast<std::size_t>(l)] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  for (std::size_t l = 0; l < count; ++l) rows[l].F = ci.F[l];
  return rows;
}

ExtrapolationTable solve_sequence_serial(std::span<const SampleRow> rows, const DSequenceOptions& options) {
  check_options(options);
  if (rows.size() < required_points(options)) throw std::invalid_argument("not enough sample rows for nu_max");
  ExtrapolationTable table = make_table(options);
  for (int nu = 0; nu <= options.nu_max; ++nu) table.entries.push_back(solve_entry(rows, options, nu));
  return table;
}

ExtrapolationTable solve_sequence(std::span<const SampleRow> rows, const DSequenceOptions& options) {
  check_options(options);
  if (rows.size() < required_points(options)) throw std::invalid_argument("not enough sample rows for nu_max");
  ExtrapolationTable table = make_table(options);
  const auto count = static_cast<std::size_t>(options.nu_max) + 1;
  table.entries.resize(count);
  std::vector<std::exception_ptr> failures(count);
#pragma omp parallel for schedule(dynamic)
  for (long nu = 0; nu < static_cast<long>(count); ++nu) {
    try {
      table.entries[static_cast<std::size_t>(nu)] = solve_entry(rows, options, static_cast<int>(nu));
    } catch (...) {
      failures[static_cast<std::size_t>(nu)] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return table;
}

ExtrapolationTable d_sequence(const Expression& integrand, const SampleGrid& grid, const DSequenceOptions& options) {
  check_options(options);
  const auto rows = sample_rows(integrand, grid, options.m, options.q, required_points(options));
  ExtrapolationTable table = solve_sequence(rows, options);
  table.integrand = to_string(integrand);
  table.grid = grid.descriptor;
  return table;
}

ExtrapolationTable d_sequence_serial(const Expression& integrand, const SampleGrid& grid,
                                     const DSequenceOptions& options) {
  check_options(options);
  const auto rows = sample_rows_serial(integrand, grid, options.m, options.q, required_points(options));
  ExtrapolationTable table = solve_sequence_serial(rows, options);
  table.integrand = to_string(integrand);
  table.grid = grid.descriptor;
  return table;
}

ExtrapolationTable d_sequence(const Expression& integrand, std::string_view grid_descriptor,
                              const DSequenceOptions& options) {
  check_options(options);
  return d_sequence(integrand, make_grid(grid_descriptor, required_points(options)), options);
}

}  // namespace bclass
