#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bayesinfo/divergences.hpp"
#include "bayesinfo/info.hpp"
#include "bayesinfo/rng.hpp"

namespace bayesinfo {

/// y_i | mu ~ N(mu, noise_variance) with mu ~ N(prior_mean, prior_variance).
/// Data enter through the sufficient statistics (n, ybar).
struct NormalNormalModel {
  double prior_mean = 0.0;
  double prior_variance = 1.0;
  double noise_variance = 1.0;
  long n = 0;
  double ybar = 0.0;
};

/// y_i | lambda ~ Pois(lambda) with lambda ~ Gamma(alpha, beta).
/// total = n * ybar is the integer event count.
struct PoissonGammaModel {
  double alpha = 1.0;
  double beta = 1.0;
  long n = 0;
  long total = 0;

  double ybar() const { return static_cast<double>(total) / static_cast<double>(n); }
};

/// x ~ Multinomial(n, p) with p ~ Dirichlet(alphas); counts are x.
struct MultinomialDirichletModel {
  std::vector<double> alphas;
  std::vector<long> counts;

  long total() const;
};

NormalParams nn_posterior(const NormalNormalModel& m);
NormalParams nn_normalized_likelihood(const NormalNormalModel& m);
InfoPair nn_info(const NormalNormalModel& m);

/// Average prior information over data drawn from the marginal, for the
/// standardized case prior_mean = 0, prior_variance = noise_variance = 1:
/// 0.5 * log((n+1)/n).
double nn_expected_prior_info(long n);

GammaParams pg_posterior(const PoissonGammaModel& m);
GammaParams pg_normalized_likelihood(const PoissonGammaModel& m);
InfoPair pg_info(const PoissonGammaModel& m);

DirichletParams md_posterior(const MultinomialDirichletModel& m);
DirichletParams md_normalized_likelihood(const MultinomialDirichletModel& m);
InfoPair md_info(const MultinomialDirichletModel& m);

struct DecayPoint {
  long n = 0;
  double mean_prior_info = 0.0;
};

/// Decay-of-prior-information simulation for the symmetric Dirichlet prior:
/// per replication draws p ~ Dir(alpha,...,alpha), x ~ Multinomial(n, p) and
/// averages the prior information over replications at each n.
std::vector<DecayPoint> md_decay_curve(double alpha_value, int k,
                                       std::span<const long> n_grid,
                                       int replications, std::uint64_t seed);

/// One simulated prior-information value per family, used by the decay
/// studies. The true parameter is supplied by the caller.
double nn_simulate_prior_info(const NormalNormalModel& prior_spec, double true_mu,
                              long n, RngStream& rng);
double pg_simulate_prior_info(const PoissonGammaModel& prior_spec,
                              double true_lambda, long n, RngStream& rng);
double md_simulate_prior_info(std::span<const double> alphas,
                              std::span<const double> true_p, long n,
                              RngStream& rng);

}  // namespace bayesinfo
