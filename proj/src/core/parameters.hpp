#pragma once

#include <cstdint>

namespace rhgen {

/// Model parameters binding graph size and density to disk geometry.
/// zeta (curvature) is fixed at 1.
struct DiskParameters {
    std::uint64_t n = 0;
    double gamma = 3.0;
    double alpha = 1.0;
    double k_bar = 0.0;
    double R = 0.0;
    static constexpr double zeta = 1.0;
};

/// gamma = 2 alpha + 1; rejects gamma <= 2.
double alpha_from_gamma(double gamma);

/// Asymptotic expected average degree of a threshold graph on n points with
/// dispersion alpha in a disk of radius R (zeta = 1):
///
///   k = (2/pi) xi^2 n e^{-R/2}
///     + (2/pi) xi^2 n e^{-alpha R} (alpha R/2 ((pi/4)(1/alpha)^2 - (pi-1)/alpha + (pi-2)) - 1),
///   xi = alpha / (alpha - 1/2).
double expected_avg_degree(double n, double alpha, double R);

/// Bisection for R with expected_avg_degree(n, alpha, R) = k_bar,
/// to 1e-6 relative. Throws ErrorCode::Calibration when no bracket exists in
/// (1e-3, 10 ln n + 50).
double get_target_radius(std::uint64_t n, double k_bar, double alpha);

/// R = 2 ln n + C.
double radius_from_disk_constant(std::uint64_t n, double C);

/// How the caller pins the disk radius.
enum class RadiusMode { AverageDegree, DiskConstant, Radius };

/// Validates inputs and fills in every field of DiskParameters.
/// `value` is k_bar, C or R depending on `mode`.
DiskParameters resolve_parameters(std::uint64_t n, double gamma, RadiusMode mode, double value);

} // namespace rhgen
