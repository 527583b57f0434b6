#pragma once

#include <cmath>
#include <numbers>
#include <random>

namespace rhgen {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A position in the hyperbolic disk in native polar coordinates.
/// `phi` lies in [0, 2pi), `r` is the hyperbolic distance from the origin.
struct PolarPoint {
    double phi = 0.0;
    double r = 0.0;

    friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

/// Hyperbolic distance via the hyperbolic law of cosines.
///
/// Evaluated in the cancellation-free form
///   cosh d = cosh(r_p - r_q) + 2 sinh(r_p) sinh(r_q) sin^2(dphi / 2),
/// which is algebraically identical to
///   cosh d = cosh r_p cosh r_q - sinh r_p sinh r_q cos|phi_p - phi_q|
/// but keeps full relative precision for nearby points far from the origin.
double hyperbolic_distance(const PolarPoint& p, const PolarPoint& q) noexcept;

/// Maps u in [0, 1) to an angle in [0, 2pi).
double angular_from_unit(double u) noexcept;

/// Inverse CDF of the radial density alpha sinh(alpha r) / (cosh(alpha R) - 1).
/// u in [0, 1) maps to r in [0, R].
double radial_from_unit(double u, double alpha, double R) noexcept;

/// CDF of the radial density: (cosh(alpha r) - 1) / (cosh(alpha R) - 1).
double radial_cdf(double r, double alpha, double R) noexcept;

template <class Rng>
double sample_angular(Rng& rng) {
    return angular_from_unit(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

template <class Rng>
double sample_radial(double alpha, double R, Rng& rng) {
    return radial_from_unit(std::uniform_real_distribution<double>(0.0, 1.0)(rng), alpha, R);
}

/// Angular interval as (center, half-width), with explicit full and empty cases.
struct AngularInterval {
    enum class Kind { Arc, FullCircle, Empty };

    Kind kind = Kind::Empty;
    double center = 0.0;
    double half_width = 0.0;

    static AngularInterval full() noexcept { return {Kind::FullCircle, 0.0, std::numbers::pi}; }
    static AngularInterval empty() noexcept { return {Kind::Empty, 0.0, 0.0}; }
    /// Arc around `center`; collapses to FullCircle once the half-width reaches pi.
    static AngularInterval arc(double center, double half_width) noexcept;

    /// Same interval grown by `slack` radians on both sides (Empty stays Empty).
    AngularInterval widened(double slack) const noexcept;

    /// Start of the arc in [0, 2pi) (meaningful for Arc only).
    double lower() const noexcept;
    /// End of the arc in [0, 2pi) (meaningful for Arc only; may be < lower() on wrap).
    double upper() const noexcept;

    bool contains(double phi) const noexcept;
};

/// Bound on the angular deviation of any point u with r_u >= c_inner and
/// dist(v, u) <= R. Every such u has phi_u inside the returned interval.
AngularInterval min_max_phi(const PolarPoint& v, double c_inner, double R) noexcept;

/// Same bound from precomputed hyperbolic functions of r_v, c_inner and R.
AngularInterval min_max_phi(double phi_v, double cosh_rv, double sinh_rv, double cosh_c, double sinh_c,
                            double cosh_R) noexcept;

/// Point with cached cosh/sinh of its radius, for the threshold test.
struct CachedPoint {
    double phi;
    double cosh_r;
    double sinh_r;

    static CachedPoint of(const PolarPoint& p) noexcept { return {p.phi, std::cosh(p.r), std::sinh(p.r)}; }
};

/// Edge rule dist(p, q) <= R evaluated as
///   cosh r_p cosh r_q - sinh r_p sinh r_q cos(phi_p - phi_q) <= cosh R.
/// Symmetric bit-for-bit; the static generator, the quadratic oracle and the
/// dynamic model all decide edges through this one predicate.
class ThresholdPredicate {
public:
    explicit ThresholdPredicate(double R) noexcept : cosh_R_(std::cosh(R)) {}

    bool operator()(const CachedPoint& p, const CachedPoint& q) const noexcept {
        return p.cosh_r * q.cosh_r - p.sinh_r * q.sinh_r * std::cos(std::abs(p.phi - q.phi)) <= cosh_R_;
    }

    double cosh_radius() const noexcept { return cosh_R_; }

private:
    double cosh_R_;
};

} // namespace rhgen
