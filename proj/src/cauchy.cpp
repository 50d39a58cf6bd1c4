#include "dbar/cauchy.hpp"

#include <cmath>
#include <numbers>

namespace dbar {

Complex apply_cauchy_rule(const SingularQuadRule& rule,
                          const std::function<Complex(Complex)>& g, Complex z,
                          kernels::Exec mode) {
    const auto n = static_cast<std::int64_t>(rule.nodes.size());
    const Complex* nodes = rule.nodes.data();
    const double* weights = rule.weights.data();
    const Complex sum = kernels::csum(
        n,
        [&](std::int64_t i) {
            const Complex zeta = nodes[i];
            return weights[i] * g(zeta) / (zeta - z);
        },
        mode);
    return -sum / std::numbers::pi;
}

Complex cauchy_transform(const std::function<Complex(Complex)>& g,
                         const PlanarDomain& domain, Complex z, Resolution res,
                         kernels::Exec mode) {
    const SingularQuadRule rule =
        build_singular_rule(domain, z, res.n_r, res.n_theta);
    return apply_cauchy_rule(rule, g, z, mode);
}

namespace {

void require_unit_disc_point(Complex z) {
    if (!(std::abs(z) < 1.0))
        throw OutOfDomain("closed-form transform needs |z| < 1");
}

}  // namespace

Complex exact_antiholo_transform(int k, Complex z) {
    if (k < 1) throw Error("k must be a positive integer");
    require_unit_disc_point(z);
    const double r2k = std::pow(std::norm(z), k);
    return Complex(r2k - 1.0, 0.0) / static_cast<double>(k);
}

Complex exact_holo_transform(int k, Complex z) {
    if (k < 1) throw Error("k must be a positive integer");
    require_unit_disc_point(z);
    return ipow(z, k) * std::conj(z) - ipow(z, k - 1);
}

bool has_exact_transform(const PlanarDomain& domain, int p, int q) {
    if (!domain.is_unit_disc_like()) return false;
    if (p == 0 && q == 0) return true;           // K[1] = conj(z)
    if (p >= 1 && q == p - 1) return true;       // antiholomorphic family
    if (p >= 1 && q == 0) return true;           // holomorphic family
    return false;
}

Complex exact_monomial_transform(int p, int q, Complex z) {
    if (p == 0 && q == 0) {
        require_unit_disc_point(z);
        return std::conj(z);
    }
    if (q == p - 1) return exact_antiholo_transform(p, z);
    return exact_holo_transform(p, z);
}

Complex monomial_transform(const PlanarDomain& domain, int p, int q, Complex z,
                           Resolution res, bool use_exact, kernels::Exec mode) {
    if (use_exact && has_exact_transform(domain, p, q))
        return exact_monomial_transform(p, q, z);
    auto g = [p, q](Complex zeta) -> Complex {
        if (p < 0 && zeta == Complex(0.0, 0.0)) return 0.0;  // measure zero
        return ipow(zeta, p) * ipow(std::conj(zeta), q);
    };
    return cauchy_transform(g, domain, z, res, mode);
}

}  // namespace dbar
