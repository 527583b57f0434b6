#include "core/stats.hpp"

#include "core/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace rhgen::stats {

double kolmogorov_pvalue(double statistic, std::size_t n) {
    if (n == 0) return 1.0;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * statistic;
    if (lambda < 1e-3) return 1.0;
    double sum = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += (j % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-16) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = sorted.size();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, static_cast<double>(i + 1) / static_cast<double>(n) - f,
                      f - static_cast<double>(i) / static_cast<double>(n)});
    }
    return {d, kolmogorov_pvalue(d, n)};
}

Summary summarize(std::span<const double> values) {
    Summary s;
    s.count = values.size();
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) return s;
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    const double variance = sq / static_cast<double>(values.size() - 1);
    s.standard_error = std::sqrt(variance / static_cast<double>(values.size()));
    return s;
}

double standardized_difference(const Summary& a, const Summary& b) {
    const double diff = std::abs(a.mean - b.mean);
    const double se = std::sqrt(a.standard_error * a.standard_error + b.standard_error * b.standard_error);
    if (se == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / se;
}

LinearFit least_squares(const std::vector<std::vector<double>>& design, std::span<const double> y) {
    if (design.size() != y.size() || design.empty())
        fail(ErrorCode::InvalidArgument, "least squares needs one design row per observation");
    const auto rows = static_cast<Eigen::Index>(design.size());
    const auto cols = static_cast<Eigen::Index>(design.front().size());
    Eigen::MatrixXd X(rows, cols);
    Eigen::VectorXd Y(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(design[static_cast<std::size_t>(i)].size()) != cols)
            fail(ErrorCode::InvalidArgument, "ragged design matrix");
        for (Eigen::Index j = 0; j < cols; ++j) X(i, j) = design[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        Y(i) = y[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(Y);
    const Eigen::VectorXd residual = Y - X * beta;
    const double ss_res = residual.squaredNorm();
    const double ss_tot = (Y.array() - Y.mean()).matrix().squaredNorm();

    LinearFit fit;
    fit.coefficients.assign(beta.data(), beta.data() + beta.size());
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

} // namespace rhgen::stats
