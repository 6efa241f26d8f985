#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace vat {

struct MeanStddev {
    double mean = 0.0;
    double stddev = 0.0; // sample stddev, n-1 denominator
};

MeanStddev mean_stddev(std::span<const double> samples);

/// One-sample Kolmogorov-Smirnov distance against a model CDF.
template <typename Cdf>
double ks_distance(std::span<const double> samples, Cdf&& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

/// Two-sample Kolmogorov-Smirnov distance.
double ks_distance_two_sample(std::span<const double> a, std::span<const double> b);

} // namespace vat
