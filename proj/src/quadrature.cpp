#include "bayesinfo/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bayesinfo/special_math.hpp"

namespace bayesinfo {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_axis(const GridAxis& ax) {
  if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi) || !(ax.lo < ax.hi)) {
    throw std::invalid_argument("GridAxis: need finite lo < hi");
  }
  if (ax.resolution < 64) {
    throw std::invalid_argument("GridAxis: resolution must be >= 64");
  }
}

// Kahan-compensated accumulator; grids run to ~10^6 cells.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

std::vector<double> evaluate_on_grid(const GridSpec& grid, const GridFn& fn,
                                     const char* what) {
  std::vector<double> out(grid.node_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = fn(grid.node(i));
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
      throw std::domain_error(std::string("non-finite ") + what +
                              " at an interior grid node");
    }
    out[i] = v;
  }
  return out;
}

}  // namespace

GridSpec GridSpec::one_dim(double lo, double hi, int resolution) {
  GridSpec g;
  g.dims = 1;
  g.axes[0] = GridAxis{lo, hi, resolution};
  g.axes[1] = GridAxis{0.0, 1.0, 64};  // unused slot kept valid
  check_axis(g.axes[0]);
  return g;
}

GridSpec GridSpec::two_dim(const GridAxis& x, const GridAxis& y) {
  GridSpec g;
  g.dims = 2;
  g.axes[0] = x;
  g.axes[1] = y;
  check_axis(x);
  check_axis(y);
  return g;
}

std::size_t GridSpec::node_count() const {
  std::size_t n = static_cast<std::size_t>(axes[0].resolution);
  if (dims == 2) {
    n *= static_cast<std::size_t>(axes[1].resolution);
  }
  return n;
}

double GridSpec::cell_volume() const {
  double v = (axes[0].hi - axes[0].lo) / axes[0].resolution;
  if (dims == 2) {
    v *= (axes[1].hi - axes[1].lo) / axes[1].resolution;
  }
  return v;
}

GridPoint GridSpec::node(std::size_t flat_index) const {
  GridPoint p{0.0, 0.0};
  if (dims == 1) {
    const double h = (axes[0].hi - axes[0].lo) / axes[0].resolution;
    p[0] = axes[0].lo + (static_cast<double>(flat_index) + 0.5) * h;
    return p;
  }
  const std::size_t ny = static_cast<std::size_t>(axes[1].resolution);
  const std::size_t ix = flat_index / ny;
  const std::size_t iy = flat_index % ny;
  const double hx = (axes[0].hi - axes[0].lo) / axes[0].resolution;
  const double hy = (axes[1].hi - axes[1].lo) / axes[1].resolution;
  p[0] = axes[0].lo + (static_cast<double>(ix) + 0.5) * hx;
  p[1] = axes[1].lo + (static_cast<double>(iy) + 0.5) * hy;
  return p;
}

bool GridSpec::operator==(const GridSpec& other) const {
  if (dims != other.dims) {
    return false;
  }
  for (int d = 0; d < dims; ++d) {
    if (axes[d].lo != other.axes[d].lo || axes[d].hi != other.axes[d].hi ||
        axes[d].resolution != other.axes[d].resolution) {
      return false;
    }
  }
  return true;
}

GridModel GridModel::one_dim(double lo, double hi, int resolution,
                             std::function<double(double)> log_prior,
                             std::function<double(double)> log_likelihood) {
  GridModel m;
  m.grid = GridSpec::one_dim(lo, hi, resolution);
  m.log_prior = [f = std::move(log_prior)](const GridPoint& p) { return f(p[0]); };
  m.log_likelihood = [f = std::move(log_likelihood)](const GridPoint& p) {
    return f(p[0]);
  };
  return m;
}

GriddedDensity GriddedDensity::normalize(const GridSpec& grid,
                                         std::vector<double> log_values) {
  if (log_values.size() != grid.node_count()) {
    throw std::invalid_argument("GriddedDensity: value count != node count");
  }
  const double log_norm = log_sum_exp(log_values) + std::log(grid.cell_volume());
  if (!std::isfinite(log_norm)) {
    throw std::domain_error(
        "GriddedDensity: normalizer underflow/overflow; density not "
        "integrable on this grid");
  }
  for (double& v : log_values) {
    v -= log_norm;
  }
  return GriddedDensity(grid, std::move(log_values));
}

GriddedDensity GriddedDensity::from_exact_log_density(const GridSpec& grid,
                                                      const GridFn& log_density) {
  return GriddedDensity(grid, evaluate_on_grid(grid, log_density, "density"));
}

GriddedDensity grid_posterior(const GridModel& model) {
  std::vector<double> lp = evaluate_on_grid(model.grid, model.log_prior, "log-prior");
  const std::vector<double> ll =
      evaluate_on_grid(model.grid, model.log_likelihood, "log-likelihood");
  for (std::size_t i = 0; i < lp.size(); ++i) {
    lp[i] += ll[i];
  }
  return GriddedDensity::normalize(model.grid, std::move(lp));
}

GriddedDensity grid_normalized_likelihood(const GridModel& model) {
  return GriddedDensity::normalize(
      model.grid, evaluate_on_grid(model.grid, model.log_likelihood, "log-likelihood"));
}

double grid_kl(const GriddedDensity& p, const GriddedDensity& q) {
  if (!(p.grid() == q.grid())) {
    throw std::invalid_argument("grid_kl: densities live on different grids");
  }
  const double vol = p.grid().cell_volume();
  const std::vector<double>& lp = p.log_density();
  const std::vector<double>& lq = q.log_density();
  CompensatedSum acc;
  for (std::size_t i = 0; i < lp.size(); ++i) {
    if (lp[i] == kNegInf) {
      continue;  // zero mass contributes nothing
    }
    if (lq[i] == kNegInf) {
      throw std::domain_error("grid_kl: support violation (q = 0 where p > 0)");
    }
    acc.add(std::exp(lp[i]) * (lp[i] - lq[i]));
  }
  return acc.sum * vol;
}

InfoPair bivbin_info(const BivBinData& data, BivBinPrior prior, int resolution) {
  if (!(0 <= data.s && data.s <= data.r && data.r <= data.m)) {
    throw std::invalid_argument("bivbin_info: require 0 <= s <= r <= m");
  }
  if (resolution < 64) {
    throw std::invalid_argument("bivbin_info: resolution must be >= 64");
  }
  const double m = data.m;
  const double r = data.r;
  const double s = data.s;
  const double log_coef = log_choose(m, r) + log_choose(r, s);

  const GridSpec grid = GridSpec::two_dim(GridAxis{0.0, 1.0, resolution},
                                          GridAxis{0.0, 1.0, resolution});
  const GridFn log_lik = [=](const GridPoint& t) {
    const double p = t[0];
    const double q = t[1];
    return log_coef + r * std::log(p) + (m - r) * std::log(1.0 - p) +
           s * std::log(q) + (r - s) * std::log(1.0 - q);
  };

  // All three priors have known closed-form normalizers, so their exact
  // densities are used directly; midpoint renormalization would lose the
  // singular corner mass.
  const double log_pi = std::log(std::numbers::pi);
  GridFn log_prior;
  switch (prior) {
    case BivBinPrior::flat:
      log_prior = [](const GridPoint&) { return 0.0; };
      break;
    case BivBinPrior::reference:
      log_prior = [=](const GridPoint& t) {
        return -2.0 * log_pi -
               0.5 * (std::log(t[0]) + std::log(1.0 - t[0]) + std::log(t[1]) +
                      std::log(1.0 - t[1]));
      };
      break;
    case BivBinPrior::jeffreys:
      log_prior = [=](const GridPoint& t) {
        return -std::log(2.0 * std::numbers::pi) -
               0.5 * (std::log(1.0 - t[0]) + std::log(t[1]) + std::log(1.0 - t[1]));
      };
      break;
  }

  GridModel model;
  model.grid = grid;
  model.log_prior = log_prior;
  model.log_likelihood = log_lik;

  const GriddedDensity post = grid_posterior(model);
  const GriddedDensity nl = grid_normalized_likelihood(model);
  const GriddedDensity prior_density =
      GriddedDensity::from_exact_log_density(grid, log_prior);

  return InfoPair{grid_kl(post, nl), grid_kl(post, prior_density)};
}

LikelihoodInfoBounds lemma_bounds(const GridModel& model) {
  const std::vector<double> lp =
      evaluate_on_grid(model.grid, model.log_prior, "log-prior");
  const std::vector<double> ll =
      evaluate_on_grid(model.grid, model.log_likelihood, "log-likelihood");
  const double vol = model.grid.cell_volume();

  double max_lp = kNegInf;
  double max_ll = kNegInf;
  std::vector<double> log_joint(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) {
    max_lp = std::max(max_lp, lp[i]);
    max_ll = std::max(max_ll, ll[i]);
    log_joint[i] = lp[i] + ll[i];
  }
  // log p(y_obs) under the supplied (possibly unnormalized) prior.
  const double log_evidence = log_sum_exp(log_joint) + std::log(vol);
  if (!std::isfinite(log_evidence)) {
    throw std::domain_error("lemma_bounds: evidence is not finite");
  }

  CompensatedSum v_acc;
  CompensatedSum h_acc;
  for (std::size_t i = 0; i < lp.size(); ++i) {
    const double log_post = log_joint[i] - log_evidence;
    if (log_post == kNegInf) {
      continue;
    }
    const double mass = std::exp(log_post);
    v_acc.add(mass * (log_post - lp[i]));
    h_acc.add(mass * log_post);
  }
  const double v = v_acc.sum * vol;
  const double entropy = -h_acc.sum * vol;
  if (!std::isfinite(entropy) || !std::isfinite(v)) {
    throw std::domain_error("lemma_bounds: non-finite entropy");
  }
  return LikelihoodInfoBounds{-entropy - max_lp, max_ll - log_evidence, v};
}

}  // namespace bayesinfo
