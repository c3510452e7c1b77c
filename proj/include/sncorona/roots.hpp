// roots.hpp - real roots of monic quadratics and cubics known to have only
// real roots (they come from symmetric matrices).
#pragma once

#include <sncorona/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace sncorona {

namespace detail {

inline double cubic_value(double a2, double a1, double a0, double x) { return ((x + a2) * x + a1) * x + a0; }

/// A few Newton steps, kept only while the residual shrinks.
inline double polish_cubic(double a2, double a1, double a0, double x) {
    double fx = cubic_value(a2, a1, a0, x);
    for (int it = 0; it < 8 && fx != 0.0; ++it) {
        const double d = (3.0 * x + 2.0 * a2) * x + a1;
        if (d == 0.0) break;
        const double y = x - fx / d;
        const double fy = cubic_value(a2, a1, a0, y);
        if (!(std::abs(fy) < std::abs(fx))) break;
        x = y;
        fx = fy;
    }
    return x;
}

}  // namespace detail

/// Roots of t^2 + b t + c, ascending. Uses q = -(b + sign(b) sqrt(D)) / 2 and
/// c / q to avoid cancellation. A slightly negative discriminant (rounding)
/// is clamped to zero.
inline std::array<double, 2> real_roots_quadratic(double b, double c) {
    double disc = b * b - 4.0 * c;
    if (disc < 0.0) {
        if (disc < -1e-8 * (1.0 + b * b + std::abs(c))) {
            throw Error(ErrorCode::ComplexRootsDetected,
                        "t^2 + (" + std::to_string(b) + ")t + (" + std::to_string(c) + ") has discriminant " +
                            std::to_string(disc));
        }
        disc = 0.0;
    }
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    std::array<double, 2> r{};
    if (q == 0.0) {
        r = {0.0, 0.0};
    } else {
        r = {q, c / q};
    }
    if (r[0] > r[1]) std::swap(r[0], r[1]);
    return r;
}

/// Roots of t^3 + a2 t^2 + a1 t + a0, ascending, by the trigonometric method
/// on the depressed cubic. When the discriminant is within rounding of zero
/// (a repeated root), one real root from Cardano's formula is deflated out
/// and the remaining quadratic is solved directly.
inline std::array<double, 3> real_roots_cubic(double a2, double a1, double a0) {
    const double shift = a2 / 3.0;
    const double p = a1 - a2 * a2 / 3.0;
    const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    // Three real roots iff 4p^3 + 27q^2 <= 0.
    const double disc = 4.0 * p * p * p + 27.0 * q * q;
    const double scale = 1.0 + std::pow(std::abs(p), 3.0) + q * q;

    std::array<double, 3> r{};
    if (disc < -1e-12 * scale && p < 0.0) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) r[k] = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift;
    } else {
        if (disc > 1e-8 * scale) {
            throw Error(ErrorCode::ComplexRootsDetected,
                        "cubic with coefficients (" + std::to_string(a2) + ", " + std::to_string(a1) + ", " +
                            std::to_string(a0) + ") has a complex pair");
        }
        // Repeated root: x = 3q/p (simple) and -3q/(2p) (double), or 0 if p = 0.
        double x0 = 0.0;
        if (std::abs(p) > 1e-300) x0 = 3.0 * q / p;
        double t0 = detail::polish_cubic(a2, a1, a0, x0 - shift);
        // Deflate: t^3 + a2 t^2 + a1 t + a0 = (t - t0)(t^2 + b t + c).
        const double b = a2 + t0;
        const double c = a1 + t0 * b;
        const auto qr = real_roots_quadratic(b, c);
        r = {t0, qr[0], qr[1]};
    }
    for (auto& x : r) x = detail::polish_cubic(a2, a1, a0, x);
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace sncorona
