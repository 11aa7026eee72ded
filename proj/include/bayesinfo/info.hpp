#pragma once

namespace bayesinfo {

/// The two information metrics, in nats. prior_info is the KL divergence
/// from the posterior to the normalized likelihood; likelihood_info is the
/// KL divergence from the posterior to the prior.
struct InfoPair {
  double prior_info = 0.0;
  double likelihood_info = 0.0;
};

}  // namespace bayesinfo
