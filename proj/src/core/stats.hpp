#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rhgen::stats {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;

    bool passes(double significance) const noexcept { return p_value >= significance; }
};

/// One-sample Kolmogorov-Smirnov test of `samples` against a continuous CDF.
KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// P(D_n > d) from the asymptotic Kolmogorov distribution with the
/// Stephens small-sample correction.
double kolmogorov_pvalue(double statistic, std::size_t n);

struct Summary {
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t count = 0;
};

Summary summarize(std::span<const double> values);

/// |mean_a - mean_b| / sqrt(se_a^2 + se_b^2); 0 when both errors vanish and the means agree.
double standardized_difference(const Summary& a, const Summary& b);

struct LinearFit {
    std::vector<double> coefficients;
    double r_squared = 0.0;
};

/// Ordinary least squares of y on the given design rows (one row per observation).
LinearFit least_squares(const std::vector<std::vector<double>>& design, std::span<const double> y);

} // namespace rhgen::stats
