#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace backmc {

inline constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

/// Standard normal density.
inline double norm_pdf(double z) {
    return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

/// Standard normal CDF via erfc, accurate in both tails.
inline double norm_cdf(double z) {
    return 0.5 * std::erfc(-z * kInvSqrt2);
}

/// Complementary CDF, P(Z > z).
inline double norm_ccdf(double z) {
    return 0.5 * std::erfc(z * kInvSqrt2);
}

/// P(a < Z <= b) without catastrophic cancellation for cells deep in a tail.
inline double norm_cdf_interval(double a, double b) {
    if (!(a < b)) return 0.0;
    if (a >= 0.0) return 0.5 * (std::erfc(a * kInvSqrt2) - std::erfc(b * kInvSqrt2));
    if (b <= 0.0) return 0.5 * (std::erfc(-b * kInvSqrt2) - std::erfc(-a * kInvSqrt2));
    return 0.5 * (std::erf(b * kInvSqrt2) + std::erf(-a * kInvSqrt2));
}

/// Inverse standard normal CDF (Wichura's PPND16 rational approximations).
double norm_quantile(double p);

/// Compensated accumulator for order-independent reductions.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

inline double kahan_total(std::span<const double> xs) {
    KahanSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

/// Sample mean and standard error computed with compensated sums.
struct MeanEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

MeanEstimate mean_and_error(std::span<const double> xs);

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace backmc
