#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

namespace qcf {

inline double mean(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

// Population variance (divides by N).
inline double variance(std::span<const double> xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    const double m = mean(xs);
    double sum = 0.0;
    for (double x : xs) {
        const double d = x - m;
        sum += d * d;
    }
    return sum / static_cast<double>(xs.size());
}

inline double stddev(std::span<const double> xs) { return std::sqrt(variance(xs)); }

// Standard error of the sample mean.
inline double mean_std_error(std::span<const double> xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    const double n = static_cast<double>(xs.size());
    return std::sqrt(variance(xs) / (n - 1.0));
}

struct VarianceEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Population variance with the asymptotic standard error
// sqrt((m4 - var^2) / N), m4 the fourth central moment.
inline VarianceEstimate variance_with_se(std::span<const double> xs) {
    VarianceEstimate est;
    if (xs.size() < 2) {
        return est;
    }
    const double m = mean(xs);
    double m2 = 0.0;
    double m4 = 0.0;
    for (double x : xs) {
        const double d = x - m;
        const double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    const double n = static_cast<double>(xs.size());
    m2 /= n;
    m4 /= n;
    est.value = m2;
    est.std_error = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
    return est;
}

} // namespace qcf
