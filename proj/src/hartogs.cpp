#include "dbar/hartogs.hpp"

#include <cmath>

namespace dbar {

FormExpr hartogs_closedness_defect(const HartogsForm& alpha) {
    return alpha.alpha1.dbar(Var::z2) - alpha.alpha2.dbar(Var::z1);
}

bool extra_condition_holds(const HartogsForm& alpha) {
    const FormExpr zbar1 = FormExpr::monomial(1.0, 0, 1, 0, 0);
    const FormExpr zbar2 = FormExpr::monomial(1.0, 0, 0, 0, 1);
    return (zbar1 * alpha.alpha1 + zbar2 * alpha.alpha2).is_zero();
}

namespace {

// z1^p1 zbar1^q1 z2^p2 zbar2^q2 with z1 = w1 w2, z2 = w2 becomes
// w1^p1 wbar1^q1 w2^(p1+p2) wbar2^(q1+q2).
FormExpr substitute(const FormExpr& e) {
    std::vector<MonomialTerm> out;
    out.reserve(e.terms().size());
    for (const MonomialTerm& t : e.terms())
        out.push_back({t.coef, t.p1, t.q1, t.p1 + t.p2, t.q1 + t.q2});
    return FormExpr(std::move(out));
}

}  // namespace

OneForm pullback(const HartogsForm& alpha) {
    const FormExpr a1 = substitute(alpha.alpha1);
    const FormExpr a2 = substitute(alpha.alpha2);
    const FormExpr wbar1 = FormExpr::monomial(1.0, 0, 1, 0, 0);
    const FormExpr wbar2 = FormExpr::monomial(1.0, 0, 0, 0, 1);
    return OneForm(wbar2 * a1, wbar1 * a1 + a2);
}

Complex solve_hartogs(const HartogsForm& alpha, Point2 z,
                      const SolveOptions& opts) {
    if (!HartogsDomain().contains(z))
        throw OutOfDomain("point outside the Hartogs triangle");
    if (opts.check_closed && !hartogs_is_closed(alpha))
        throw NotClosed("alpha fails the exact closedness test");
    const OneForm f = pullback(alpha);
    return solve_dbar(f, ProductDomain::disc_times_punctured(),
                      HartogsDomain::to_product(z), opts);
}

HartogsReport hartogs_report(const HartogsForm& alpha, double p, double eps,
                             const NormOptions& norm_opts,
                             const SolveOptions& solve_opts) {
    if (!(p >= 1.0)) throw Error("p must be >= 1");
    if (!hartogs_is_closed(alpha))
        throw NotClosed("alpha fails the exact closedness test");

    NormOptions no = norm_opts;
    no.eps = eps;
    const HartogsDomain domain;  // untruncated; eps is the quadrature floor

    HartogsReport rep;
    rep.p = p;
    rep.truncation = eps;
    rep.alpha1_wm2 = lp_norm(alpha.alpha1, p, domain, -2.0, no).value;
    rep.alpha2_wm2 = lp_norm(alpha.alpha2, p, domain, -2.0, no).value;
    rep.d11_wm1 = lp_norm(alpha.alpha1.dbar(Var::z1), p, domain, -1.0, no).value;
    rep.d12_wm1 = lp_norm(alpha.alpha1.dbar(Var::z2), p, domain, -1.0, no).value;
    rep.d21_wm1 = lp_norm(alpha.alpha2.dbar(Var::z1), p, domain, -1.0, no).value;

    // Solution norm by sampling the solver over the triangle. The pullback
    // and closedness work are shared across samples via a SolutionField.
    SolveOptions so = solve_opts;
    so.check_closed = false;
    SolutionField field(pullback(alpha), ProductDomain::disc_times_punctured(),
                        so, /*memoize=*/false);
    Field v = [&field](Complex z1, Complex z2) {
        return field(HartogsDomain::to_product({z1, z2}));
    };
    NormOptions vopts = no;
    vopts.panels = std::max(4, no.panels);
    rep.v_norm = lp_norm(v, p, domain, 0.0, vopts).value;

    const double data =
        rep.alpha1_wm2 + rep.alpha2_wm2 + rep.d11_wm1 + rep.d12_wm1;
    if (data > 0.0) rep.ratio = rep.v_norm / data;
    return rep;
}

std::pair<Complex, Complex> canonical_pair(int k, Point2 z) {
    if (k < 1) throw Error("k must be a positive integer");
    if (!(std::abs(z.z1) < 1.0 && std::abs(z.z2) < 1.0))
        throw OutOfDomain("point outside the bidisc");
    const Complex zk = ipow(z.z1, k);
    const Complex lead = zk * std::conj(z.z1);
    const Complex tail = ipow(z.z1, k - 1);
    return {lead - tail, lead - (double(k) / double(k + 1)) * tail};
}

Complex hartogs_canonical(Point2 z, double c) {
    if (!HartogsDomain().contains(z))
        throw OutOfDomain("point outside the Hartogs triangle");
    return std::conj(z.z2) - c / z.z2;
}

}  // namespace dbar
