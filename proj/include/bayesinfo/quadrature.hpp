#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "bayesinfo/info.hpp"

namespace bayesinfo {

/// Parameter point for grid evaluators; 1-D models use only the first slot.
using GridPoint = std::array<double, 2>;
using GridFn = std::function<double(const GridPoint&)>;

struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  int resolution = 0;
};

/// Open midpoint grid: nodes sit at cell centers and never touch the domain
/// boundary, so integrands with (integrable) boundary singularities stay
/// finite at every node.
struct GridSpec {
  int dims = 1;
  std::array<GridAxis, 2> axes{};

  static GridSpec one_dim(double lo, double hi, int resolution);
  static GridSpec two_dim(const GridAxis& x, const GridAxis& y);

  std::size_t node_count() const;
  double cell_volume() const;
  GridPoint node(std::size_t flat_index) const;
  bool operator==(const GridSpec& other) const;
};

/// Black-box Bayesian model on a rectangular domain. Evaluators return log
/// densities and may be unnormalized.
struct GridModel {
  GridSpec grid;
  GridFn log_prior;
  GridFn log_likelihood;

  static GridModel one_dim(double lo, double hi, int resolution,
                           std::function<double(double)> log_prior,
                           std::function<double(double)> log_likelihood);
};

/// Probability density represented by log values at grid nodes; integrates
/// to 1 under the midpoint rule unless constructed from an exact density.
class GriddedDensity {
 public:
  /// Normalizes exp(log_values) over the grid (log-sum-exp). Throws if the
  /// normalizer is not finite.
  static GriddedDensity normalize(const GridSpec& grid,
                                  std::vector<double> log_values);
  /// Trusts the callable to be an exactly normalized density; no
  /// renormalization is applied (used for priors with known closed-form
  /// normalizers whose singular corners would spoil midpoint mass).
  static GriddedDensity from_exact_log_density(const GridSpec& grid,
                                               const GridFn& log_density);

  const GridSpec& grid() const { return grid_; }
  const std::vector<double>& log_density() const { return log_density_; }

 private:
  GriddedDensity(GridSpec grid, std::vector<double> log_density)
      : grid_(std::move(grid)), log_density_(std::move(log_density)) {}

  GridSpec grid_;
  std::vector<double> log_density_;
};

/// Midpoint-rule posterior ~ prior x likelihood, normalized on the grid.
GriddedDensity grid_posterior(const GridModel& model);

/// Likelihood rescaled to integrate to 1 over the domain.
GriddedDensity grid_normalized_likelihood(const GridModel& model);

/// Midpoint-rule KL divergence in nats. Both densities must share a grid and
/// q must be positive wherever p is.
double grid_kl(const GriddedDensity& p, const GriddedDensity& q);

/// Observed data for the bivariate binomial model: s successes within r
/// successes within m trials, 0 <= s <= r <= m.
struct BivBinData {
  int m = 0;
  int r = 0;
  int s = 0;
};

enum class BivBinPrior { flat, reference, jeffreys };

/// Prior and likelihood information for the bivariate binomial model by 2-D
/// quadrature over the open unit square.
InfoPair bivbin_info(const BivBinData& data, BivBinPrior prior,
                     int resolution = 1024);

/// Bounds on the likelihood information for bounded (possibly unnormalized)
/// prior and likelihood: lower <= v <= upper always holds, and v may be
/// negative when the prior is unnormalized.
struct LikelihoodInfoBounds {
  double lower = 0.0;
  double upper = 0.0;
  double likelihood_info = 0.0;
};

LikelihoodInfoBounds lemma_bounds(const GridModel& model);

}  // namespace bayesinfo
