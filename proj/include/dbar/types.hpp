#ifndef DBAR_TYPES_HPP
#define DBAR_TYPES_HPP

#include <complex>

namespace dbar {

using Complex = std::complex<double>;

/// A point of C^2.
struct Point2 {
    Complex z1;
    Complex z2;
};

/// Radial x angular resolution of a polar quadrature rule.
struct Resolution {
    int n_r = 128;
    int n_theta = 256;
};

/// Integer power by repeated squaring. Negative exponents invert;
/// the caller is responsible for z != 0 in that case.
inline Complex ipow(Complex z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    Complex acc = 1.0;
    Complex base = z;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline double sq(double x) { return x * x; }

}  // namespace dbar

#endif
