#pragma once

#include <cmath>
#include <stdexcept>

namespace lexineq {

struct Complex {
    double re = 0.0;
    double im = 0.0;

    constexpr Complex() = default;
    constexpr Complex(double r, double i = 0.0) : re(r), im(i) {}

    bool finite() const { return std::isfinite(re) && std::isfinite(im); }
    constexpr bool is_zero() const { return re == 0.0 && im == 0.0; }

    friend constexpr bool operator==(const Complex&, const Complex&) = default;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("complex division by zero") {}
};

constexpr Complex complex_add(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
constexpr Complex complex_sub(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
constexpr Complex complex_mul(Complex a, Complex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
// Textbook quotient (a*conj(b))/|b|^2; throws DivisionByZero for b == 0.
Complex complex_div(Complex a, Complex b);
constexpr Complex complex_square(Complex a) { return complex_mul(a, a); }
constexpr Complex conj(Complex a) { return {a.re, -a.im}; }
constexpr Complex scale(Complex a, double r) { return {r * a.re, r * a.im}; }
double abs(Complex a);

inline Complex operator+(Complex a, Complex b) { return complex_add(a, b); }
inline Complex operator-(Complex a, Complex b) { return complex_sub(a, b); }
inline Complex operator*(Complex a, Complex b) { return complex_mul(a, b); }
inline Complex operator/(Complex a, Complex b) { return complex_div(a, b); }
inline Complex operator-(Complex a) { return {-a.re, -a.im}; }

/// Modulus and principal argument, theta in (-pi, pi].
struct Polar {
    double r = 0.0;
    double theta = 0.0;
};

// polar_decompose(0) is (0, 0).
Polar polar_decompose(Complex a);
Complex from_polar(Polar p);

/// Reduces an angle to (-pi, pi].
double reduce_angle(double theta);

/// e^{i theta}. Angles within 1e-15 of a multiple of pi/4 map to exact
/// phasors so that quarter-turn rotations do not leak rounding noise
/// into the imaginary or real part.
Complex unit_phasor(double theta);

} // namespace lexineq
