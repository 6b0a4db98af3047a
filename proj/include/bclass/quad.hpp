#ifndef BCLASS_QUAD_HPP
#define BCLASS_QUAD_HPP

// Gauss-Legendre panel integrals chi_i over [x_{i-1}, x_i] (x_{-1} = 0) and
// their prefix sums F(x_l).

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bclass {

using Integrand = std::function<double(double)>;

struct GaussRule {
  std::vector<double> nodes;    ///< ascending, on [-1, 1]
  std::vector<double> weights;
};

inline constexpr int max_gauss_points = 64;

/// Legendre rule with q points, 1 <= q <= 64. Rules are built once and cached.
const GaussRule& gauss_nodes(int q);

/// q-point rule mapped to [a, b]. Exceptions thrown by f are rethrown as
/// IntegrationError carrying the node.
double panel_integrate(const Integrand& f, double a, double b, int q);

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(std::size_t panel, double node, const std::string& what)
      : std::runtime_error("panel " + std::to_string(panel) + ", node " + std::to_string(node) + ": " + what),
        panel_(panel), node_(node) {}
  std::size_t panel() const noexcept { return panel_; }
  double node() const noexcept { return node_; }

 private:
  std::size_t panel_;
  double node_;
};

/// x_0 < x_1 < ... < x_L, with the implicit left end x_{-1} = 0.
struct SampleGrid {
  std::vector<double> points;
  std::string descriptor;
};

/// "linear:a[,b]"  -> x_l = a(l+1) + b
/// "sqrtlinear:a"  -> x_l = sqrt(a(l+1))
/// Throws std::invalid_argument on malformed descriptors or invalid grids.
SampleGrid make_grid(std::string_view descriptor, std::size_t count);
/// Throws std::invalid_argument unless points are finite, positive, increasing.
void validate_grid(const SampleGrid& grid);

struct CumulativeIntegrals {
  std::vector<double> chi;
  std::vector<double> F;
  int node_count = 0;
  std::vector<bool> bisected;  ///< panels where the refinement safeguard split the panel
};

inline constexpr int default_gauss_points = 16;
inline constexpr double panel_refine_tolerance = 1e-12;

/// Panels run in parallel (OpenMP); prefix sums are formed serially in
/// panel order, so the result is bitwise identical to cumulative_serial.
/// Each panel value uses 2q points, falling back to two 2q-point halves if
/// the q- and 2q-point values differ by more than panel_refine_tolerance
/// relative. Requires 1 <= q <= 32.
CumulativeIntegrals cumulative(const Integrand& f, const SampleGrid& grid, int q = default_gauss_points);
CumulativeIntegrals cumulative_serial(const Integrand& f, const SampleGrid& grid, int q = default_gauss_points);

}  // namespace bclass

#endif  // BCLASS_QUAD_HPP
