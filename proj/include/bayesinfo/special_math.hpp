#pragma once

#include <span>

namespace bayesinfo {

/// log Gamma(x) for x > 0. Lanczos approximation, relative accuracy ~1e-13
/// over [1e-3, 1e6]. Throws std::domain_error for x <= 0.
double lgamma(double x);

/// Digamma psi(x) for x > 0. Asymptotic series with upward recurrence below
/// x = 10, absolute accuracy ~1e-12. Throws std::domain_error for x <= 0.
double digamma(double x);

/// log sum_i exp(xs[i]) without overflow for |xs[i]| up to ~700.
/// Returns -inf when every entry is -inf. Throws std::invalid_argument on
/// empty input.
double log_sum_exp(std::span<const double> xs);

/// log of the binomial coefficient C(n, k), 0 <= k <= n.
double log_choose(double n, double k);

}  // namespace bayesinfo
