#include "core/parameters.hpp"

#include "core/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rhgen {

namespace {
constexpr double kRelativeTolerance = 1e-6;
constexpr int kMaxBisectionSteps = 100;
constexpr double kMinRadius = 1e-3;
} // namespace

double alpha_from_gamma(double gamma) {
    if (!(gamma > 2.0) || !std::isfinite(gamma))
        fail(ErrorCode::InvalidArgument, "power-law exponent gamma must be > 2, got " + std::to_string(gamma));
    return (gamma - 1.0) / 2.0;
}

double expected_avg_degree(double n, double alpha, double R) {
    constexpr double pi = std::numbers::pi;
    constexpr double zeta = DiskParameters::zeta;
    const double ratio = zeta / alpha;
    const double xi = (alpha / zeta) / (alpha / zeta - 0.5);
    const double prefactor = (2.0 / pi) * xi * xi * n;
    const double bracket = (pi / 4.0) * ratio * ratio - (pi - 1.0) * ratio + (pi - 2.0);
    return prefactor * std::exp(-zeta * R / 2.0) +
           prefactor * (std::exp(-alpha * R) * (alpha * (R / 2.0) * bracket - 1.0));
}

double get_target_radius(std::uint64_t n, double k_bar, double alpha) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "need at least 2 vertices to calibrate the radius");
    if (!(k_bar > 0.0) || !(k_bar < static_cast<double>(n) - 1.0))
        fail(ErrorCode::InvalidArgument, "average degree must lie in (0, n - 1)");
    if (!(alpha > 0.5)) fail(ErrorCode::InvalidArgument, "alpha must be > 1/2");

    const double nd = static_cast<double>(n);
    const auto degree = [&](double R) { return expected_avg_degree(nd, alpha, R); };

    // The formula is not monotone near R = 0, so walk down from the outer end
    // until the degree exceeds the target; the bracket then lies on the
    // decreasing branch.
    double hi = 10.0 * std::log(nd) + 50.0;
    if (degree(hi) >= k_bar)
        fail(ErrorCode::Calibration, "average degree too small to calibrate: no bracket below R = " + std::to_string(hi));
    double lo = hi;
    const double step = 0.5;
    while (true) {
        lo = hi - step;
        if (lo <= kMinRadius) {
            lo = kMinRadius;
            if (degree(lo) <= k_bar)
                fail(ErrorCode::Calibration,
                     "no disk radius in (1e-3, 10 ln n + 50) reaches average degree " + std::to_string(k_bar) +
                         "; parameters outside the range of the degree approximation");
            break;
        }
        if (degree(lo) > k_bar) break;
        hi = lo;
    }

    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < kMaxBisectionSteps; ++i) {
        mid = 0.5 * (lo + hi);
        const double k = degree(mid);
        if (std::abs(k - k_bar) <= kRelativeTolerance * k_bar) return mid;
        if (k > k_bar)
            lo = mid;
        else
            hi = mid;
    }
    if (std::abs(degree(mid) - k_bar) > kRelativeTolerance * k_bar)
        fail(ErrorCode::Calibration, "radius bisection did not converge");
    return mid;
}

double radius_from_disk_constant(std::uint64_t n, double C) {
    return 2.0 * std::log(static_cast<double>(n)) + C;
}

DiskParameters resolve_parameters(std::uint64_t n, double gamma, RadiusMode mode, double value) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "vertex count must be positive");
    DiskParameters params;
    params.n = n;
    params.gamma = gamma;
    params.alpha = alpha_from_gamma(gamma);
    switch (mode) {
    case RadiusMode::AverageDegree:
        params.k_bar = value;
        params.R = get_target_radius(n, value, params.alpha);
        return params;
    case RadiusMode::DiskConstant:
        params.R = radius_from_disk_constant(n, value);
        break;
    case RadiusMode::Radius:
        params.R = value;
        break;
    }
    if (!(params.R >= 0.0) || !std::isfinite(params.R))
        fail(ErrorCode::InvalidArgument, "disk radius must be finite and non-negative");
    params.k_bar = expected_avg_degree(static_cast<double>(n), params.alpha, params.R);
    return params;
}

} // namespace rhgen
