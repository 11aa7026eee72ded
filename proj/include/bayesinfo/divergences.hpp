#pragma once

#include <span>
#include <vector>

namespace bayesinfo {

struct NormalParams {
  double mean = 0.0;
  double variance = 1.0;

  NormalParams(double mean, double variance);
};

/// Rate parameterization: density ~ x^{shape-1} exp(-rate x).
struct GammaParams {
  double shape = 1.0;
  double rate = 1.0;

  GammaParams(double shape, double rate);
};

struct DirichletParams {
  std::vector<double> alphas;

  explicit DirichletParams(std::vector<double> alphas);
  std::size_t dimension() const { return alphas.size(); }
};

/// KL(p, q) in nats between two univariate normals.
double kl_normal(const NormalParams& p, const NormalParams& q);

/// KL(p, q) in nats between two gammas in the rate parameterization:
///   (a1-a2) psi(a1) - lgamma(a1) + lgamma(a2) + a2 (log b1 - log b2)
///   + a1 (b2 - b1) / b1
/// The sign of the final term is pinned against the quadrature oracle in the
/// test suite.
double kl_gamma(const GammaParams& p, const GammaParams& q);

/// KL(p, q) in nats between two Dirichlets of equal dimension.
double kl_dirichlet(const DirichletParams& p, const DirichletParams& q);

double logpdf(const NormalParams& d, double x);
double logpdf(const GammaParams& d, double x);
/// x must lie in the open simplex; the last coordinate is included in x.
double logpdf(const DirichletParams& d, std::span<const double> x);

}  // namespace bayesinfo
