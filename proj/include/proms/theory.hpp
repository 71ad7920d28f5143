#pragma once

#include <cstdint>

namespace proms::theory {

// First-moment analysis of uniform random 3-CNF. Everything is kept in log2
// so that n and m in the millions never overflow.

/// log2 C(m, s) through lgamma.
double log2_binomial(std::uint64_t m, std::uint64_t s);

/// log2 of 2^n (7/8)^s C(m, s): the expected number of (assignment, s-clause
/// subset) pairs where the assignment satisfies every clause of the subset.
/// Requires s <= m.
double log2_expected_count(std::uint64_t n, std::uint64_t m, std::uint64_t s);

/// Per-clause base-2 exponent of the large-m form
///   2^n (1/(1-l))^m (7(1-l)/(8l))^(l m),
/// i.e. 1/r + log2(1/(1-l)) + l log2(7(1-l)/(8l)).
/// Throws std::domain_error unless 0 < lambda < 1 and r > 0.
double exponent_per_clause(double r, double lambda);

/// Ratio above which assignments violating only a constant number of clauses
/// vanish: -1/log2(7/8).
double constant_violation_threshold();

/// Root lambda in (7/8, 1) of exponent_per_clause(r, .) = 0 by bisection.
/// Throws std::domain_error when the exponent does not change sign over the
/// bracket (r at or below the threshold).
double h_of_r(double r);

/// n minus log2 of the expected count of lambda-solutions, with the count
/// capped at 2^n. Requires exponent_per_clause(r, lambda) >= 0.
double hamming_gap(double r, double lambda, double n);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Monte-Carlo estimate of 2^n (7/8)^s C(m, s) over random 3-CNFs (n >= 3,
/// n <= 20). For each sampled formula, enumerate every assignment and add
/// C(#satisfied clauses, s). Formula i is drawn from stream i of `seed`, so
/// the result does not depend on the thread count. OpenMP-parallel.
MonteCarloEstimate estimate_product_form(std::uint32_t n, std::uint32_t m, std::uint32_t s,
                                         std::uint64_t samples, std::uint64_t seed);

/// Serial reference of estimate_product_form; bit-identical result.
MonteCarloEstimate estimate_product_form_serial(std::uint32_t n, std::uint32_t m, std::uint32_t s,
                                                std::uint64_t samples, std::uint64_t seed);

}  // namespace proms::theory
