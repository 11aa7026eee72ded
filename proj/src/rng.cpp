#include "bayesinfo/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bayesinfo {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream & 0xffffffffu),
      static_cast<std::uint32_t>(stream >> 32),
  };
  engine_.seed(seq);
}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() {
  // 53-bit mantissa, offset by half an ulp so 0 is never returned.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + uniform() * (hi - lo);
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform_index: n must be >= 1");
  }
  // Rejection to remove modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = next_u64();
  while (v >= limit) {
    v = next_u64();
  }
  return v % n;
}

double RngStream::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  // Box-Muller.
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_normal_ = true;
  return r * std::cos(theta);
}

double RngStream::normal(double mean, double sd) { return mean + sd * normal(); }

bool RngStream::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bernoulli: p must be in [0, 1]");
  }
  return uniform() < p;
}

double RngStream::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::invalid_argument("gamma: need shape > 0 and rate > 0");
  }
  if (shape < 1.0) {
    // Boost to shape + 1 and scale back by U^{1/shape}.
    const double g = gamma(shape + 1.0, 1.0);
    return g * std::pow(uniform(), 1.0 / shape) / rate;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) {
      return d * v / rate;
    }
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v / rate;
    }
  }
}

long RngStream::poisson(double mean) {
  if (!(mean >= 0.0)) {
    throw std::invalid_argument("poisson: mean must be >= 0");
  }
  long total = 0;
  // Knuth's product method on chunks small enough that exp() stays normal.
  while (mean > 30.0) {
    double acc = 1.0;
    const double threshold = std::exp(-30.0);
    long k = 0;
    for (acc *= uniform(); acc > threshold; acc *= uniform()) {
      ++k;
    }
    total += k;
    mean -= 30.0;
  }
  const double threshold = std::exp(-mean);
  double acc = uniform();
  long k = 0;
  while (acc > threshold) {
    ++k;
    acc *= uniform();
  }
  return total + k;
}

long RngStream::binomial(long trials, double p) {
  if (trials < 0 || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial: bad parameters");
  }
  long hits = 0;
  for (long i = 0; i < trials; ++i) {
    hits += uniform() < p ? 1 : 0;
  }
  return hits;
}

std::vector<double> RngStream::dirichlet(std::span<const double> alphas) {
  if (alphas.size() < 2) {
    throw std::invalid_argument("dirichlet: need dimension >= 2");
  }
  std::vector<double> out(alphas.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    out[i] = gamma(alphas[i], 1.0);
    sum += out[i];
  }
  for (double& v : out) {
    v /= sum;
  }
  return out;
}

std::vector<long> RngStream::multinomial(long trials,
                                         std::span<const double> probs) {
  if (probs.empty() || trials < 0) {
    throw std::invalid_argument("multinomial: bad parameters");
  }
  double total = 0.0;
  for (const double p : probs) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("multinomial: negative probability");
    }
    total += p;
  }
  std::vector<long> counts(probs.size(), 0);
  for (long t = 0; t < trials; ++t) {
    double u = uniform() * total;
    std::size_t idx = probs.size() - 1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (u < probs[i]) {
        idx = i;
        break;
      }
      u -= probs[i];
    }
    ++counts[idx];
  }
  return counts;
}

std::vector<std::size_t> RngStream::permutation(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    idx[i] = i;
  }
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = uniform_index(i);
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

}  // namespace bayesinfo
