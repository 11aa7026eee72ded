#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bayesinfo/rng.hpp"

namespace bayesinfo {

/// Fully enumerable Bayesian model: finitely many parameter values with
/// prior masses and finitely many outcomes with conditional masses. Every
/// mass must be strictly positive so all divergences are finite.
struct FiniteModel {
  std::vector<double> prior;                    // per parameter point, sums to 1
  std::vector<std::vector<double>> likelihood;  // [param][outcome], rows sum to 1

  std::size_t n_params() const { return prior.size(); }
  std::size_t n_outcomes() const {
    return likelihood.empty() ? 0 : likelihood.front().size();
  }
  void validate() const;
};

/// KL divergence between two strictly positive mass vectors of equal length.
double discrete_kl(std::span<const double> p, std::span<const double> q);

/// Posterior masses after observing outcome y_index.
std::vector<double> finite_posterior(const FiniteModel& model, std::size_t y_index);

/// Exhaustive E_Y[likelihood information] = sum_y p(y) KL(posterior_y, prior),
/// which equals the mutual information between parameter and outcome.
double finite_avg_likelihood_info(const FiniteModel& model);

/// Prior information after each of n i.i.d. draws from the true parameter's
/// outcome row; the normalized likelihood of a finite model is its posterior
/// under a uniform prior. Element 0 is the no-data value KL(prior, uniform).
std::vector<double> finite_prior_info_trajectory(const FiniteModel& model,
                                                 std::size_t true_theta,
                                                 long n_max, RngStream& rng);

}  // namespace bayesinfo
