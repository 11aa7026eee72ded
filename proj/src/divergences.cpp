#include "bayesinfo/divergences.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bayesinfo/special_math.hpp"

namespace bayesinfo {

NormalParams::NormalParams(double mean_, double variance_)
    : mean(mean_), variance(variance_) {
  if (!std::isfinite(mean) || !(variance > 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("NormalParams: need finite mean, variance > 0");
  }
}

GammaParams::GammaParams(double shape_, double rate_)
    : shape(shape_), rate(rate_) {
  if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) ||
      !std::isfinite(rate)) {
    throw std::invalid_argument("GammaParams: need shape > 0 and rate > 0");
  }
}

DirichletParams::DirichletParams(std::vector<double> alphas_)
    : alphas(std::move(alphas_)) {
  if (alphas.size() < 2) {
    throw std::invalid_argument("DirichletParams: need dimension >= 2");
  }
  for (const double a : alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("DirichletParams: every alpha must be > 0");
    }
  }
}

double kl_normal(const NormalParams& p, const NormalParams& q) {
  const double dm = p.mean - q.mean;
  return (dm * dm + p.variance - q.variance) / (2.0 * q.variance) +
         0.5 * std::log(q.variance / p.variance);
}

double kl_gamma(const GammaParams& p, const GammaParams& q) {
  return (p.shape - q.shape) * digamma(p.shape) - lgamma(p.shape) +
         lgamma(q.shape) + q.shape * (std::log(p.rate) - std::log(q.rate)) +
         p.shape * (q.rate - p.rate) / p.rate;
}

double kl_dirichlet(const DirichletParams& p, const DirichletParams& q) {
  if (p.alphas.size() != q.alphas.size()) {
    throw std::invalid_argument("kl_dirichlet: dimension mismatch");
  }
  double a0 = 0.0;
  double b0 = 0.0;
  for (std::size_t i = 0; i < p.alphas.size(); ++i) {
    a0 += p.alphas[i];
    b0 += q.alphas[i];
  }
  double out = lgamma(a0) - lgamma(b0);
  const double psi_a0 = digamma(a0);
  for (std::size_t i = 0; i < p.alphas.size(); ++i) {
    const double a = p.alphas[i];
    const double b = q.alphas[i];
    out += -lgamma(a) + lgamma(b) + (a - b) * (digamma(a) - psi_a0);
  }
  return out;
}

double logpdf(const NormalParams& d, double x) {
  const double z = x - d.mean;
  constexpr double log_2pi = 1.8378770664093454836;
  return -0.5 * (z * z / d.variance + log_2pi + std::log(d.variance));
}

double logpdf(const GammaParams& d, double x) {
  if (!(x > 0.0)) {
    return -std::numeric_limits<double>::infinity();
  }
  return d.shape * std::log(d.rate) - lgamma(d.shape) +
         (d.shape - 1.0) * std::log(x) - d.rate * x;
}

double logpdf(const DirichletParams& d, std::span<const double> x) {
  if (x.size() != d.alphas.size()) {
    throw std::invalid_argument("dirichlet logpdf: dimension mismatch");
  }
  double a0 = 0.0;
  double out = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) {
      return -std::numeric_limits<double>::infinity();
    }
    a0 += d.alphas[i];
    out += (d.alphas[i] - 1.0) * std::log(x[i]) - lgamma(d.alphas[i]);
  }
  return out + lgamma(a0);
}

}  // namespace bayesinfo
