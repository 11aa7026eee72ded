#include "bayesinfo/special_math.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bayesinfo {

namespace {

// Lanczos g = 7, 9 coefficients (standard published set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Valid for x >= 0.5.
double lgamma_lanczos(double x) {
  const double z = x - 1.0;
  double acc = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    acc += kLanczosCoef[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  constexpr double half_log_2pi = 0.91893853320467274178;
  return half_log_2pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double lgamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("lgamma: argument must be positive");
  }
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum on its accurate branch.
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           lgamma_lanczos(1.0 - x);
  }
  return lgamma_lanczos(x);
}

double digamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("digamma: argument must be positive");
  }
  // Recurrence psi(x) = psi(x+1) - 1/x until the asymptotic series applies.
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
  const double y = 1.0 / (x * x);
  const double series =
      y * (1.0 / 12.0 -
           y * (1.0 / 120.0 -
                y * (1.0 / 252.0 -
                     y * (1.0 / 240.0 -
                          y * (1.0 / 132.0 - y * (691.0 / 32760.0))))));
  return acc + std::log(x) - 0.5 / x - series;
}

double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  const double m = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(m)) {
    return m;  // all -inf, or an explicit +inf entry
  }
  double sum = 0.0;
  for (const double x : xs) {
    sum += std::exp(x - m);
  }
  return m + std::log(sum);
}

double log_choose(double n, double k) {
  if (k < 0.0 || k > n) {
    throw std::domain_error("log_choose: require 0 <= k <= n");
  }
  return lgamma(n + 1.0) - lgamma(k + 1.0) - lgamma(n - k + 1.0);
}

}  // namespace bayesinfo
