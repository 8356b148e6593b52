#pragma once

#include <span>
#include <utility>

namespace wwlab {

struct PowerFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double r2 = 1.0;
    /// Standard error of the exponent.
    double stderr_exponent = 0.0;
};

/// Least-squares slope of log(value) against log(t). Needs >= 8 samples with
/// positive t and value; throws ConfigError otherwise.
PowerFit decay_fit(std::span<const std::pair<double, double>> series);

/// Same fit without the sample-count floor (>= 2 points).
PowerFit loglog_fit(std::span<const std::pair<double, double>> series);

}  // namespace wwlab
