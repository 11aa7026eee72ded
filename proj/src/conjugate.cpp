#include "bayesinfo/conjugate.hpp"

#include <cmath>
#include <stdexcept>

#include "bayesinfo/special_math.hpp"

namespace bayesinfo {

namespace {

void check_nn(const NormalNormalModel& m, bool needs_data) {
  if (!(m.prior_variance > 0.0) || !(m.noise_variance > 0.0) ||
      !std::isfinite(m.prior_mean) || !std::isfinite(m.ybar)) {
    throw std::invalid_argument("NormalNormalModel: invalid parameters");
  }
  if (m.n < 0 || (needs_data && m.n == 0)) {
    throw std::invalid_argument("NormalNormalModel: requires n >= 1");
  }
}

void check_pg(const PoissonGammaModel& m, bool needs_data) {
  if (!(m.alpha > 0.0) || !(m.beta > 0.0)) {
    throw std::invalid_argument("PoissonGammaModel: invalid hyperparameters");
  }
  if (m.n < 0 || m.total < 0) {
    throw std::invalid_argument("PoissonGammaModel: negative data summary");
  }
  if (needs_data && m.n == 0) {
    throw std::invalid_argument(
        "PoissonGammaModel: likelihood not integrable with n = 0");
  }
}

void check_md(const MultinomialDirichletModel& m) {
  if (m.alphas.size() != m.counts.size() || m.alphas.size() < 2) {
    throw std::invalid_argument("MultinomialDirichletModel: length mismatch");
  }
  for (const double a : m.alphas) {
    if (!(a > 0.0)) {
      throw std::invalid_argument("MultinomialDirichletModel: alphas must be > 0");
    }
  }
  for (const long c : m.counts) {
    if (c < 0) {
      throw std::invalid_argument("MultinomialDirichletModel: negative count");
    }
  }
}

}  // namespace

long MultinomialDirichletModel::total() const {
  long t = 0;
  for (const long c : counts) {
    t += c;
  }
  return t;
}

NormalParams nn_posterior(const NormalNormalModel& m) {
  check_nn(m, true);
  const double prior_prec = 1.0 / m.prior_variance;
  const double data_prec = static_cast<double>(m.n) / m.noise_variance;
  const double var = 1.0 / (prior_prec + data_prec);
  const double mean =
      (m.prior_mean * prior_prec + static_cast<double>(m.n) * m.ybar / m.noise_variance) /
      (prior_prec + data_prec);
  return NormalParams(mean, var);
}

NormalParams nn_normalized_likelihood(const NormalNormalModel& m) {
  check_nn(m, true);
  return NormalParams(m.ybar, m.noise_variance / static_cast<double>(m.n));
}

InfoPair nn_info(const NormalNormalModel& m) {
  check_nn(m, true);
  const double n = static_cast<double>(m.n);
  const double s2 = m.noise_variance;
  const double s02 = m.prior_variance;
  const double mu0 = m.prior_mean;
  const double post_prec = 1.0 / s02 + n / s2;
  const double post_var = 1.0 / post_prec;
  // Combined-fraction form of the posterior mean.
  const double post_mean = (s2 * mu0 + n * m.ybar * s02) / (s2 + n * s02);

  const double dv = mu0 - post_mean;
  const double v = (dv * dv - s02 + post_var) / (2.0 * s02) +
                   std::log(std::sqrt(s02) * std::sqrt(post_prec));

  const double du = m.ybar - post_mean;
  const double u = (du * du - s2 / n + post_var) * n / (2.0 * s2) +
                   std::log(std::sqrt(s2) * std::sqrt(post_prec) / std::sqrt(n));
  return InfoPair{u, v};
}

double nn_expected_prior_info(long n) {
  if (n < 1) {
    throw std::invalid_argument("nn_expected_prior_info: requires n >= 1");
  }
  const double nd = static_cast<double>(n);
  return 0.5 * std::log((nd + 1.0) / nd);
}

GammaParams pg_posterior(const PoissonGammaModel& m) {
  check_pg(m, false);
  return GammaParams(m.alpha + static_cast<double>(m.total),
                     m.beta + static_cast<double>(m.n));
}

GammaParams pg_normalized_likelihood(const PoissonGammaModel& m) {
  check_pg(m, true);
  return GammaParams(static_cast<double>(m.total) + 1.0, static_cast<double>(m.n));
}

InfoPair pg_info(const PoissonGammaModel& m) {
  check_pg(m, true);
  const double a = m.alpha;
  const double b = m.beta;
  const double n = static_cast<double>(m.n);
  const double t = static_cast<double>(m.total);  // n * ybar
  const double psi_post = digamma(a + t);
  const double lg_post = lgamma(a + t);

  const double v = t * psi_post - lg_post + lgamma(a) +
                   a * (std::log(b + n) - std::log(b)) - (a + t) * n / (b + n);
  const double u = (a - 1.0) * psi_post - lg_post + lgamma(t + 1.0) +
                   (t + 1.0) * (std::log(b + n) - std::log(n)) -
                   (a + t) * b / (b + n);
  return InfoPair{u, v};
}

DirichletParams md_posterior(const MultinomialDirichletModel& m) {
  check_md(m);
  std::vector<double> out(m.alphas.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = m.alphas[i] + static_cast<double>(m.counts[i]);
  }
  return DirichletParams(std::move(out));
}

DirichletParams md_normalized_likelihood(const MultinomialDirichletModel& m) {
  check_md(m);
  std::vector<double> out(m.counts.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<double>(m.counts[i]) + 1.0;
  }
  return DirichletParams(std::move(out));
}

InfoPair md_info(const MultinomialDirichletModel& m) {
  check_md(m);
  const std::size_t k = m.alphas.size();
  const double n = static_cast<double>(m.total());
  double a0 = 0.0;
  for (const double a : m.alphas) {
    a0 += a;
  }
  const double psi_post0 = digamma(a0 + n);

  double v = lgamma(a0 + n) - lgamma(a0);
  double u = lgamma(a0 + n) - lgamma(n + static_cast<double>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const double ai = m.alphas[i];
    const double xi = static_cast<double>(m.counts[i]);
    const double lg_ai_xi = lgamma(ai + xi);
    const double psi_i = digamma(ai + xi) - psi_post0;
    v += -lg_ai_xi + lgamma(ai) + xi * psi_i;
    u += -lg_ai_xi + lgamma(xi + 1.0) + (ai - 1.0) * psi_i;
  }
  return InfoPair{u, v};
}

std::vector<DecayPoint> md_decay_curve(double alpha_value, int k,
                                       std::span<const long> n_grid,
                                       int replications, std::uint64_t seed) {
  if (!(alpha_value > 0.0) || k < 2 || replications < 1) {
    throw std::invalid_argument("md_decay_curve: invalid configuration");
  }
  for (const long n : n_grid) {
    if (n < 1) {
      throw std::invalid_argument("md_decay_curve: n values must be >= 1");
    }
  }
  const std::vector<double> alphas(static_cast<std::size_t>(k), alpha_value);
  std::vector<DecayPoint> out;
  out.reserve(n_grid.size());
  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    double sum_u = 0.0;
    for (int rep = 0; rep < replications; ++rep) {
      RngStream rng(seed, gi * static_cast<std::size_t>(replications) + rep);
      const std::vector<double> p = rng.dirichlet(alphas);
      sum_u += md_simulate_prior_info(alphas, p, n_grid[gi], rng);
    }
    out.push_back({n_grid[gi], sum_u / replications});
  }
  return out;
}

double nn_simulate_prior_info(const NormalNormalModel& prior_spec, double true_mu,
                              long n, RngStream& rng) {
  NormalNormalModel m = prior_spec;
  m.n = n;
  // ybar | mu ~ N(mu, noise_variance / n)
  m.ybar = rng.normal(true_mu, std::sqrt(m.noise_variance / static_cast<double>(n)));
  return nn_info(m).prior_info;
}

double pg_simulate_prior_info(const PoissonGammaModel& prior_spec,
                              double true_lambda, long n, RngStream& rng) {
  PoissonGammaModel m = prior_spec;
  m.n = n;
  m.total = rng.poisson(true_lambda * static_cast<double>(n));
  return pg_info(m).prior_info;
}

double md_simulate_prior_info(std::span<const double> alphas,
                              std::span<const double> true_p, long n,
                              RngStream& rng) {
  MultinomialDirichletModel m;
  m.alphas.assign(alphas.begin(), alphas.end());
  m.counts = rng.multinomial(n, true_p);
  return md_info(m).prior_info;
}

}  // namespace bayesinfo
