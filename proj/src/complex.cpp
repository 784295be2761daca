#include "lexineq/complex.hpp"

#include <array>
#include <numbers>

namespace lexineq {

Complex complex_div(Complex a, Complex b) {
    if (b.is_zero()) throw DivisionByZero();
    const double den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

double abs(Complex a) { return std::hypot(a.re, a.im); }

Polar polar_decompose(Complex a) {
    if (a.is_zero()) return {0.0, 0.0};
    // atan2 already lands in [-pi, pi]; -pi only shows up for (-x, -0.0).
    return {abs(a), reduce_angle(std::atan2(a.im, a.re))};
}

Complex from_polar(Polar p) {
    return scale(unit_phasor(p.theta), p.r);
}

double reduce_angle(double theta) {
    constexpr double pi = std::numbers::pi;
    if (theta > -pi && theta <= pi) return theta;
    double t = std::remainder(theta, 2.0 * pi);
    if (t <= -pi) t += 2.0 * pi;
    if (t > pi) t -= 2.0 * pi;
    return t;
}

Complex unit_phasor(double theta) {
    constexpr double pi = std::numbers::pi;
    constexpr double h = 0.70710678118654757;  // sqrt(1/2), correctly rounded
    static constexpr std::array<Complex, 8> octants = {{
        {1.0, 0.0}, {h, h}, {0.0, 1.0}, {-h, h}, {-1.0, 0.0}, {-h, -h}, {0.0, -1.0}, {h, -h},
    }};
    const double t = reduce_angle(theta);
    const double k = std::nearbyint(t / (pi / 4.0));
    if (std::abs(t - k * (pi / 4.0)) <= 1e-15) {
        const int idx = ((static_cast<int>(k) % 8) + 8) % 8;
        return octants[static_cast<std::size_t>(idx)];
    }
    return {std::cos(t), std::sin(t)};
}

} // namespace lexineq
