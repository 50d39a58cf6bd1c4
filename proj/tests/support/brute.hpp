#ifndef DBAR_TESTS_BRUTE_HPP
#define DBAR_TESTS_BRUTE_HPP

// Test-side reference integrators, kept independent of the library's
// quadrature machinery: a masked Cartesian midpoint grid and a polar rule
// with a hardcoded 16-point Gauss-Legendre table.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace brute {

using Complex = std::complex<double>;

// Abscissas/weights for 16-point Gauss-Legendre on [-1, 1].
inline constexpr std::array<double, 8> kGlX = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
inline constexpr std::array<double, 8> kGlW = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

/// int_{r_in < |zeta - c| < r_out} f(zeta) dA by composite GL16 in r and a
/// uniform angular sum; near-exact for smooth integrands.
template <class F>
Complex polar_integral(Complex c, double r_in, double r_out, F&& f,
                       int panels = 6, int n_theta = 128) {
    const double dtheta = 2.0 * std::numbers::pi / n_theta;
    Complex acc = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double a = r_in + (r_out - r_in) * pnl / panels;
        const double b = r_in + (r_out - r_in) * (pnl + 1) / panels;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int g = 0; g < 16; ++g) {
            const double x = g < 8 ? -kGlX[static_cast<std::size_t>(7 - g)]
                                   : kGlX[static_cast<std::size_t>(g - 8)];
            const double w = g < 8 ? kGlW[static_cast<std::size_t>(7 - g)]
                                   : kGlW[static_cast<std::size_t>(g - 8)];
            const double r = mid + half * x;
            for (int t = 0; t < n_theta; ++t) {
                const double theta = (t + 0.5) * dtheta;
                const Complex zeta =
                    c + Complex(r * std::cos(theta), r * std::sin(theta));
                acc += half * w * r * dtheta * f(zeta);
            }
        }
    }
    return acc;
}

/// Masked Cartesian midpoint integral over r_in < |zeta - c| < r_out; the
/// crudest independent check (boundary error O(1/n)).
template <class F>
Complex cartesian_integral(Complex c, double r_in, double r_out, F&& f,
                           int n = 1200) {
    const double cell = 2.0 * r_out / n;
    Complex acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex zeta =
                c + Complex(-r_out + (i + 0.5) * cell, -r_out + (j + 0.5) * cell);
            const double d = std::abs(zeta - c);
            if (d <= r_in || d >= r_out) continue;
            acc += f(zeta) * cell * cell;
        }
    }
    return acc;
}

/// Solid Cauchy transform -(1/pi) int g/(zeta - z) dA over a disc or
/// annulus, via the Cartesian grid.
template <class F>
Complex cartesian_cauchy(Complex c, double r_in, double r_out, F&& g,
                         Complex z, int n = 1600) {
    const Complex integral = cartesian_integral(
        c, r_in, r_out,
        [&](Complex zeta) { return g(zeta) / (zeta - z); }, n);
    return -integral / std::numbers::pi;
}

}  // namespace brute

#endif
