#ifndef DBAR_CAUCHY_HPP
#define DBAR_CAUCHY_HPP

#include <functional>

#include "dbar/geometry.hpp"
#include "dbar/kernels.hpp"
#include "dbar/types.hpp"

namespace dbar {

// Solid Cauchy transform, normalized as
//   K[g](z) = -(1/pi) int_D g(zeta)/(zeta - z) dA(zeta),
// which inverts d/dzbar in one variable: dbar K[g] = g on D.

/// Quadrature value of K[g](z) using the desingularized polar rule.
/// Deterministic for a fixed resolution. Throws PointOnOrOutsideBoundary /
/// PointAtPuncture on bad z and propagates evaluation errors from g.
Complex cauchy_transform(const std::function<Complex(Complex)>& g,
                         const PlanarDomain& domain, Complex z,
                         Resolution res = {},
                         kernels::Exec mode = kernels::default_exec());

/// Applies a prebuilt rule; the building block shared by the solvers.
Complex apply_cauchy_rule(const SingularQuadRule& rule,
                          const std::function<Complex(Complex)>& g, Complex z,
                          kernels::Exec mode = kernels::default_exec());

/// K[conj(zeta)^(k-1) zeta^k](z) = (|z|^(2k) - 1)/k on the unit disc,
/// k >= 1. Throws OutOfDomain for |z| >= 1.
Complex exact_antiholo_transform(int k, Complex z);

/// K[zeta^k](z) = z^k conj(z) - z^(k-1) on the unit disc, k >= 1.
/// Throws OutOfDomain for |z| >= 1.
Complex exact_holo_transform(int k, Complex z);

/// True when K[zeta^p conj(zeta)^q] on this domain matches one of the
/// closed forms above (or K[1](z) = conj(z)); requires the unit disc or
/// unit punctured disc, which integrate identically.
bool has_exact_transform(const PlanarDomain& domain, int p, int q);

/// Dispatch to the matching closed form. Pre: has_exact_transform holds
/// for (p, q) on a unit-disc-like domain.
Complex exact_monomial_transform(int p, int q, Complex z);

/// K[zeta^p conj(zeta)^q](z) on the domain: closed form when available and
/// allowed, otherwise quadrature at the given resolution.
Complex monomial_transform(const PlanarDomain& domain, int p, int q, Complex z,
                           Resolution res = {}, bool use_exact = true,
                           kernels::Exec mode = kernels::default_exec());

}  // namespace dbar

#endif
