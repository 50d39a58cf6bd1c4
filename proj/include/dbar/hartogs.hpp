#ifndef DBAR_HARTOGS_HPP
#define DBAR_HARTOGS_HPP

#include <optional>
#include <utility>

#include "dbar/norms.hpp"
#include "dbar/solver.hpp"

namespace dbar {

/// A (0,1)-form alpha = alpha1 dzbar1 + alpha2 dzbar2 on the Hartogs
/// triangle, kept symbolic so closedness and the pullback stay exact.
struct HartogsForm {
    FormExpr alpha1;
    FormExpr alpha2;
};

/// d(alpha1)/dzbar2 - d(alpha2)/dzbar1, exactly.
FormExpr hartogs_closedness_defect(const HartogsForm& alpha);

inline bool hartogs_is_closed(const HartogsForm& alpha) {
    return hartogs_closedness_defect(alpha).is_zero();
}

/// Exact test of zbar1 * alpha1 + zbar2 * alpha2 == 0, the condition under
/// which the pulled-back form has no dwbar2 component.
bool extra_condition_holds(const HartogsForm& alpha);

/// Transfers alpha through (z1, z2) = (w1 w2, w2) to D x D*:
///   f1 = wbar2 * a1~,  f2 = wbar1 * a1~ + a2~,  aj~ = alphaj o phi^{-1}.
/// Purely algebraic on monomials; preserves closedness when present.
/// The solve entry points below gate on closedness before calling this.
OneForm pullback(const HartogsForm& alpha);

/// v(z) = u(phi(z)) where u solves dbar u = pullback(alpha) on D x D*.
/// Throws OutOfDomain for z outside the open triangle, NotClosed for
/// non-closed alpha.
Complex solve_hartogs(const HartogsForm& alpha, Point2 z,
                      const SolveOptions& opts = {});

/// The weighted data norms of the Lp estimate on the triangle, the
/// solution norm, and their ratio.
struct HartogsReport {
    double p = 2.0;
    double truncation = 0.0;
    double alpha1_wm2 = 0.0;  // ||alpha1||_{L^p_{-2}}
    double alpha2_wm2 = 0.0;  // ||alpha2||_{L^p_{-2}}
    double d11_wm1 = 0.0;     // ||d(alpha1)/dzbar1||_{L^p_{-1}}
    double d12_wm1 = 0.0;     // ||d(alpha1)/dzbar2||_{L^p_{-1}}
    double d21_wm1 = 0.0;     // ||d(alpha2)/dzbar1||_{L^p_{-1}} (= d12 for closed alpha)
    double v_norm = 0.0;      // ||v||_{L^p} with v = solve_hartogs
    std::optional<double> ratio;  // v_norm / (alpha1 + alpha2 + d11 + d12), if nonzero
};

HartogsReport hartogs_report(const HartogsForm& alpha, double p,
                             double eps = 1e-4, const NormOptions& norm_opts = {},
                             const SolveOptions& solve_opts = {});

/// The two closed-form solutions of dbar u = z1^k dzbar1 on the bidisc:
/// u = z1^k zbar1 - z1^(k-1) (this operator) and
/// u_can = z1^k zbar1 - k/(k+1) z1^(k-1) (the L2-minimal one).
std::pair<Complex, Complex> canonical_pair(int k, Point2 z);

/// zbar2 - c / z2, the L2-minimal solution of dbar v = dzbar2 on the
/// triangle; c = 1/2 makes it orthogonal to the holomorphic functions.
Complex hartogs_canonical(Point2 z, double c = 0.5);

}  // namespace dbar

#endif
