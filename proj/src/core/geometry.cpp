#include "core/geometry.hpp"

#include <algorithm>

namespace rhgen {

double hyperbolic_distance(const PolarPoint& p, const PolarPoint& q) noexcept {
    const double half_dphi = 0.5 * std::abs(p.phi - q.phi);
    const double s = std::sin(half_dphi);
    const double cosh_d = std::cosh(p.r - q.r) + 2.0 * std::sinh(p.r) * std::sinh(q.r) * s * s;
    return std::acosh(std::max(cosh_d, 1.0));
}

double angular_from_unit(double u) noexcept {
    const double phi = u * kTwoPi;
    // u = 1 - 2^-53 can round up to exactly 2pi
    return phi < kTwoPi ? phi : std::nextafter(kTwoPi, 0.0);
}

double radial_from_unit(double u, double alpha, double R) noexcept {
    const double r = std::acosh(1.0 + u * (std::cosh(alpha * R) - 1.0)) / alpha;
    return std::clamp(r, 0.0, R);
}

double radial_cdf(double r, double alpha, double R) noexcept {
    if (r <= 0.0) return 0.0;
    if (r >= R) return 1.0;
    // cosh x - 1 = 2 sinh^2(x / 2), exact near the origin
    const double num = std::sinh(0.5 * alpha * r);
    const double den = std::sinh(0.5 * alpha * R);
    return (num / den) * (num / den);
}

AngularInterval AngularInterval::arc(double center, double half_width) noexcept {
    if (half_width >= std::numbers::pi) return full();
    if (half_width < 0.0) return empty();
    return {Kind::Arc, center, half_width};
}

AngularInterval AngularInterval::widened(double slack) const noexcept {
    switch (kind) {
    case Kind::Arc:
        return arc(center, half_width + slack);
    case Kind::FullCircle:
    case Kind::Empty:
        break;
    }
    return *this;
}

namespace {
double wrap(double phi) noexcept {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w < kTwoPi ? w : 0.0;
}
} // namespace

double AngularInterval::lower() const noexcept { return wrap(center - half_width); }
double AngularInterval::upper() const noexcept { return wrap(center + half_width); }

bool AngularInterval::contains(double phi) const noexcept {
    switch (kind) {
    case Kind::FullCircle:
        return true;
    case Kind::Empty:
        return false;
    case Kind::Arc:
        break;
    }
    double d = std::abs(phi - center);
    d = std::fmod(d, kTwoPi);
    d = std::min(d, kTwoPi - d);
    return d <= half_width;
}

AngularInterval min_max_phi(double phi_v, double cosh_rv, double sinh_rv, double cosh_c, double sinh_c,
                            double cosh_R) noexcept {
    const double numerator = cosh_rv * cosh_c - cosh_R;
    const double denominator = sinh_rv * sinh_c;
    if (denominator == 0.0) {
        // v or the slab boundary sits at the origin: the angle does not matter
        return numerator <= 0.0 ? AngularInterval::full() : AngularInterval::empty();
    }
    const double a = numerator / denominator;
    if (a <= -1.0) return AngularInterval::full();
    if (a > 1.0) return AngularInterval::empty();
    return AngularInterval::arc(phi_v, std::acos(a));
}

AngularInterval min_max_phi(const PolarPoint& v, double c_inner, double R) noexcept {
    return min_max_phi(v.phi, std::cosh(v.r), std::sinh(v.r), std::cosh(c_inner), std::sinh(c_inner), std::cosh(R));
}

} // namespace rhgen
