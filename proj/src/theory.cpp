#include "proms/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "proms/generator.hpp"

namespace proms::theory {

namespace {

constexpr double kSevenEighths = 7.0 / 8.0;

double log2_gamma(double x) { return std::lgamma(x) / std::numbers::ln2; }

void check_fraction(double r, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("lambda must lie strictly between 0 and 1, got " + std::to_string(lambda));
  }
  if (!(r > 0.0)) throw std::domain_error("ratio must be positive");
}

}  // namespace

double log2_binomial(std::uint64_t m, std::uint64_t s) {
  if (s > m) throw std::domain_error("binomial with s > m");
  if (s == 0 || s == m) return 0.0;
  const auto dm = static_cast<double>(m);
  const auto ds = static_cast<double>(s);
  return log2_gamma(dm + 1.0) - log2_gamma(ds + 1.0) - log2_gamma(dm - ds + 1.0);
}

double log2_expected_count(std::uint64_t n, std::uint64_t m, std::uint64_t s) {
  return static_cast<double>(n) + static_cast<double>(s) * std::log2(kSevenEighths) +
         log2_binomial(m, s);
}

double exponent_per_clause(double r, double lambda) {
  check_fraction(r, lambda);
  return 1.0 / r + std::log2(1.0 / (1.0 - lambda)) +
         lambda * std::log2(7.0 * (1.0 - lambda) / (8.0 * lambda));
}

double constant_violation_threshold() { return -1.0 / std::log2(kSevenEighths); }

double h_of_r(double r) {
  double lo = kSevenEighths + 1e-6;
  double hi = 1.0 - 1e-9;
  const double f_lo = exponent_per_clause(r, lo);
  const double f_hi = exponent_per_clause(r, hi);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw std::domain_error("no root of the per-clause exponent in (7/8, 1) for r = " +
                            std::to_string(r));
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f_mid = exponent_per_clause(r, mid);
    if (std::abs(f_mid) < 1e-12 || hi - lo < 1e-15) break;
    if (f_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double hamming_gap(double r, double lambda, double n) {
  const double exponent = exponent_per_clause(r, lambda);
  if (exponent < 0.0) {
    throw std::domain_error("expected count of lambda-solutions is below one");
  }
  const double log2_count = exponent * r * n;
  return log2_count >= n ? 0.0 : n - log2_count;
}

namespace {

struct SampleSums {
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
};

void check_mc_args(std::uint32_t n, std::uint32_t m, std::uint32_t s, std::uint64_t samples) {
  if (n < 3 || n > 20) throw std::invalid_argument("Monte-Carlo estimate needs 3 <= n <= 20");
  if (m > 60) throw std::invalid_argument("Monte-Carlo estimate needs m <= 60");
  if (s > m) throw std::invalid_argument("s must not exceed m");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  if (static_cast<double>(n) + log2_binomial(m, s) >= 62.0) {
    throw std::invalid_argument("per-formula statistic would overflow 64 bits");
  }
}

std::vector<std::uint64_t> binomials_of(std::uint32_t m, std::uint32_t s) {
  // choose[t] = C(t, s) for t in [0, m], by Pascal's rule.
  std::vector<std::vector<std::uint64_t>> pascal(m + 1);
  for (std::uint32_t t = 0; t <= m; ++t) {
    pascal[t].assign(t + 1, 1);
    for (std::uint32_t j = 1; j < t; ++j) pascal[t][j] = pascal[t - 1][j - 1] + pascal[t - 1][j];
  }
  std::vector<std::uint64_t> choose(m + 1, 0);
  for (std::uint32_t t = s; t <= m; ++t) choose[t] = pascal[t][s];
  return choose;
}

// Sum over all 2^n assignments of C(#satisfied clauses, s) for formula `index`.
std::uint64_t sample_statistic(std::uint32_t n, std::uint32_t m, std::uint64_t seed,
                               std::uint64_t index, const std::vector<std::uint64_t>& choose) {
  const Formula f = generate({.n = n, .m = m, .k = 3, .seed = Rng(seed).split(index).seed()});
  std::vector<std::uint32_t> pos(m, 0), neg(m, 0);
  for (ClauseId c = 0; c < m; ++c) {
    for (Literal l : f.clause(c)) (l.negative() ? neg[c] : pos[c]) |= 1u << l.var();
  }
  std::uint64_t total = 0;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t a = 0; a < count; ++a) {
    std::uint32_t sat = 0;
    for (std::uint32_t c = 0; c < m; ++c) sat += ((a & pos[c]) | (~a & neg[c])) != 0;
    total += choose[sat];
  }
  return total;
}

MonteCarloEstimate finish(const SampleSums& sums, std::uint64_t samples) {
  const auto count = static_cast<double>(samples);
  const double mean = static_cast<double>(sums.sum) / count;
  const double mean_sq = static_cast<double>(sums.sum_sq) / count;
  const double variance = std::max(0.0, mean_sq - mean * mean) * count / (count - 1.0);
  return {mean, std::sqrt(variance / count), samples};
}

}  // namespace

MonteCarloEstimate estimate_product_form(std::uint32_t n, std::uint32_t m, std::uint32_t s,
                                         std::uint64_t samples, std::uint64_t seed) {
  check_mc_args(n, m, s, samples);
  const auto choose = binomials_of(m, s);
  std::vector<std::uint64_t> values(samples);
  const auto total = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < total; ++i) {
    values[static_cast<std::size_t>(i)] =
        sample_statistic(n, m, seed, static_cast<std::uint64_t>(i), choose);
  }
  SampleSums sums;
  for (std::uint64_t y : values) {
    sums.sum += y;
    sums.sum_sq += static_cast<unsigned __int128>(y) * y;
  }
  return finish(sums, samples);
}

MonteCarloEstimate estimate_product_form_serial(std::uint32_t n, std::uint32_t m, std::uint32_t s,
                                                std::uint64_t samples, std::uint64_t seed) {
  check_mc_args(n, m, s, samples);
  const auto choose = binomials_of(m, s);
  SampleSums sums;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t y = sample_statistic(n, m, seed, i, choose);
    sums.sum += y;
    sums.sum_sq += static_cast<unsigned __int128>(y) * y;
  }
  return finish(sums, samples);
}

}  // namespace proms::theory
