#pragma once

#include <cstdint>
#include <span>

namespace breakaway {

struct TestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // one-sided, alternative "a greater than b"
};

/// Student-t CDF through the regularized incomplete beta function.
double student_t_cdf(double t, double df);

/// One-sided paired t test on the differences a - b.
TestResult paired_t_test_one_sided(std::span<const double> a, std::span<const double> b);

/// One-sided Welch t test with Welch-Satterthwaite degrees of freedom.
TestResult welch_t_test_one_sided(std::span<const double> a, std::span<const double> b);

/// One-sided sign-flip permutation test on paired differences. Exact over all
/// 2^n flips for n <= 20, otherwise `rounds` seeded random flips.
double paired_permutation_p(std::span<const double> a, std::span<const double> b, int rounds = 20000,
                            std::uint64_t seed = 0);

/// One-sided label-permutation test on the difference of group means.
double two_sample_permutation_p(std::span<const double> a, std::span<const double> b, int rounds = 20000,
                                std::uint64_t seed = 0);

double mean(std::span<const double> x);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double stddev(std::span<const double> x);

}  // namespace breakaway
