#ifndef DBAR_NORMS_HPP
#define DBAR_NORMS_HPP

#include <functional>

#include "dbar/forms.hpp"
#include "dbar/geometry.hpp"

namespace dbar {

enum class NormKind { Lp, LpWeighted, BanachB };

struct NormReport {
    NormKind kind = NormKind::Lp;
    double p = 2.0;
    double weight_exp = 0.0;   // exponent s in the |z2|^s weight
    double value = 0.0;
    double est_error = 0.0;    // change under one refinement step
    long long nodes_used = 0;
    double truncation = 0.0;   // radial floor applied near z2 = 0, if any
};

/// Quadrature resolution for the (weighted) Lp norms. Each planar factor
/// gets composite Gauss-Legendre panels in r and midpoint nodes in theta;
/// factors reaching z2 = 0 are graded geometrically from the floor eps.
struct NormOptions {
    int panels = 4;
    int gl = 6;
    int n_theta = 32;
    double eps = 1e-4;     // radial floor for punctured / Hartogs integrals
    double refine = 1.5;   // refinement factor for the error estimate
    // Inner-disc resolution of the iterated Hartogs integral.
    int inner_panels = 3;
    int inner_gl = 4;
    int inner_theta = 16;
};

using Field = std::function<Complex(Complex, Complex)>;

NormReport lp_norm(const FormExpr& g, double p, const ProductDomain& domain,
                   double weight_exp = 0.0, const NormOptions& opts = {});
NormReport lp_norm(const Field& g, double p, const ProductDomain& domain,
                   double weight_exp = 0.0, const NormOptions& opts = {});
NormReport lp_norm(const FormExpr& g, double p, const HartogsDomain& domain,
                   double weight_exp = 0.0, const NormOptions& opts = {});
NormReport lp_norm(const Field& g, double p, const HartogsDomain& domain,
                   double weight_exp = 0.0, const NormOptions& opts = {});

NormReport lp_norm(const Component& g, double p, const ProductDomain& domain,
                   double weight_exp = 0.0, const NormOptions& opts = {});
NormReport lp_norm(const Component& g, double p, const HartogsDomain& domain,
                   double weight_exp = 0.0, const NormOptions& opts = {});

/// ||f1||_p + ||f2||_p + ||Df||_p, the hypothesis norm of the product-domain
/// estimate. Propagates MissingDerivativeData for sampled forms without
/// explicit_D.
NormReport banach_norm(const OneForm& f, double p, const ProductDomain& domain,
                       const NormOptions& opts = {});

}  // namespace dbar

#endif
