#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bayesinfo {

/// Seeded random stream. The same (seed, stream) pair reproduces the exact
/// draw sequence regardless of how many other streams exist or which thread
/// runs it; parallel code derives one stream per unit of work. All variate
/// transforms are implemented here (rather than via std:: distributions) so
/// the sequence is pinned by this file alone.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_index(std::uint64_t n);

  double normal();
  double normal(double mean, double sd);
  bool bernoulli(double p);
  /// Marsaglia-Tsang; rate parameterization.
  double gamma(double shape, double rate);
  long poisson(double mean);
  long binomial(long trials, double p);
  std::vector<double> dirichlet(std::span<const double> alphas);
  std::vector<long> multinomial(long trials, std::span<const double> probs);

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

}  // namespace bayesinfo
