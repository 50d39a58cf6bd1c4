#include "dbar/norms.hpp"

#include <cmath>

#include "dbar/kernels.hpp"

namespace dbar {

namespace {

struct GridSpec {
    int panels;
    int gl;
    int n_theta;
    double floor;  // radial floor (0 = none)
};

NormOptions refined(const NormOptions& o) {
    NormOptions r = o;
    r.panels = static_cast<int>(std::ceil(o.panels * o.refine));
    r.n_theta = static_cast<int>(std::ceil(o.n_theta * o.refine));
    r.inner_panels = static_cast<int>(std::ceil(o.inner_panels * o.refine));
    r.inner_theta = static_cast<int>(std::ceil(o.inner_theta * o.refine));
    return r;
}

// Per-term factor tables: value(i, j) = sum_t coef[t] * A[t][i] * B[t][j].
struct TensorTables {
    std::vector<Complex> coef;
    std::vector<std::vector<Complex>> A;
    std::vector<std::vector<Complex>> B;
};

// radial_scale: when nonempty, factor-1 nodes are nodes1[i] scaled by
// radial_scale[j] (the iterated Hartogs grid), which multiplies term t by
// radial_scale[j]^(p1+q1); that power is folded into B.
TensorTables build_tables(const FormExpr& g, const std::vector<Complex>& nodes1,
                          const std::vector<Complex>& nodes2,
                          const std::vector<double>& radial_scale) {
    TensorTables t;
    const auto& terms = g.terms();
    t.coef.reserve(terms.size());
    t.A.reserve(terms.size());
    t.B.reserve(terms.size());
    for (const MonomialTerm& m : terms) {
        t.coef.push_back(m.coef);
        std::vector<Complex> a(nodes1.size());
        for (std::size_t i = 0; i < nodes1.size(); ++i)
            a[i] = ipow(nodes1[i], m.p1) * ipow(std::conj(nodes1[i]), m.q1);
        std::vector<Complex> b(nodes2.size());
        for (std::size_t j = 0; j < nodes2.size(); ++j) {
            Complex v = ipow(nodes2[j], m.p2) * ipow(std::conj(nodes2[j]), m.q2);
            if (!radial_scale.empty())
                v *= std::pow(radial_scale[j], double(m.p1 + m.q1));
            b[j] = v;
        }
        t.A.push_back(std::move(a));
        t.B.push_back(std::move(b));
    }
    return t;
}

// sum_{i,j} w1[i] * w2s[j] * |value(i,j)|^p, where w2s already carries the
// |z2|^s weight (and, for the Hartogs grid, the r_j^2 inner scaling).
double tensor_pth_power_sum(const TensorTables& t,
                            const std::vector<double>& w1,
                            const std::vector<double>& w2s, double p) {
    const auto n1 = static_cast<std::int64_t>(w1.size());
    const auto n2 = static_cast<std::int64_t>(w2s.size());
    const std::size_t nt = t.coef.size();
    if (nt == 0) return 0.0;
    return kernels::rsum(n1 * n2, [&](std::int64_t idx) {
        const auto i = static_cast<std::size_t>(idx / n2);
        const auto j = static_cast<std::size_t>(idx % n2);
        Complex v = 0.0;
        for (std::size_t k = 0; k < nt; ++k)
            v += t.coef[k] * t.A[k][i] * t.B[k][j];
        return w1[i] * w2s[j] * std::pow(std::abs(v), p);
    });
}

std::vector<double> weighted(const std::vector<Complex>& nodes2,
                             const std::vector<double>& w2, double s) {
    std::vector<double> out(w2.size());
    for (std::size_t j = 0; j < w2.size(); ++j) {
        out[j] = (s == 0.0) ? w2[j] : w2[j] * std::pow(std::abs(nodes2[j]), s);
    }
    return out;
}

// ---- product-domain integrals ----------------------------------------

double product_integral_expr(const FormExpr& g, const ProductDomain& dom,
                             double p, double s, const GridSpec& spec,
                             long long* nodes) {
    const PlanarGrid g1 =
        polar_grid(dom.factor1, spec.panels, spec.gl, spec.n_theta, 0.0);
    const PlanarGrid g2 = polar_grid(dom.factor2, spec.panels, spec.gl,
                                     spec.n_theta, spec.floor);
    if (nodes)
        *nodes = static_cast<long long>(g1.nodes.size()) *
                 static_cast<long long>(g2.nodes.size());
    const TensorTables t = build_tables(g, g1.nodes, g2.nodes, {});
    return tensor_pth_power_sum(t, g1.weights, weighted(g2.nodes, g2.weights, s),
                                p);
}

double product_integral_field(const Field& g, const ProductDomain& dom,
                              double p, double s, const GridSpec& spec,
                              long long* nodes) {
    const PlanarGrid g1 =
        polar_grid(dom.factor1, spec.panels, spec.gl, spec.n_theta, 0.0);
    const PlanarGrid g2 = polar_grid(dom.factor2, spec.panels, spec.gl,
                                     spec.n_theta, spec.floor);
    if (nodes)
        *nodes = static_cast<long long>(g1.nodes.size()) *
                 static_cast<long long>(g2.nodes.size());
    const std::vector<double> w2s = weighted(g2.nodes, g2.weights, s);
    const auto n1 = static_cast<std::int64_t>(g1.nodes.size());
    const auto n2 = static_cast<std::int64_t>(g2.nodes.size());
    return kernels::rsum(n1 * n2, [&](std::int64_t idx) {
        const auto i = static_cast<std::size_t>(idx / n2);
        const auto j = static_cast<std::size_t>(idx % n2);
        const Complex v = g(g1.nodes[i], g2.nodes[j]);
        return g1.weights[i] * w2s[j] * std::pow(std::abs(v), p);
    });
}

// ---- Hartogs integrals (iterated: z2 outer, z1 over |z1| < |z2|) ------

double hartogs_integral_expr(const FormExpr& g, const HartogsDomain& dom,
                             double p, double s, const GridSpec& spec,
                             const GridSpec& inner, long long* nodes) {
    const PlanarGrid outer = polar_grid(PlanarDomain::unit_punctured_disc(),
                                        spec.panels, spec.gl, spec.n_theta,
                                        std::max(dom.cutoff(), spec.floor));
    const PlanarGrid unit = polar_grid(PlanarDomain::unit_disc(), inner.panels,
                                       inner.gl, inner.n_theta, 0.0);
    if (nodes)
        *nodes = static_cast<long long>(outer.nodes.size()) *
                 static_cast<long long>(unit.nodes.size());

    std::vector<double> r(outer.nodes.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = std::abs(outer.nodes[j]);
    const TensorTables t = build_tables(g, unit.nodes, outer.nodes, r);

    // weight |z2|^s plus the r^2 scaling of the inner disc of radius r.
    std::vector<double> w2s(outer.weights.size());
    for (std::size_t j = 0; j < w2s.size(); ++j)
        w2s[j] = outer.weights[j] * std::pow(r[j], s) * r[j] * r[j];
    return tensor_pth_power_sum(t, unit.weights, w2s, p);
}

double hartogs_integral_field(const Field& g, const HartogsDomain& dom,
                              double p, double s, const GridSpec& spec,
                              const GridSpec& inner, long long* nodes) {
    const PlanarGrid outer = polar_grid(PlanarDomain::unit_punctured_disc(),
                                        spec.panels, spec.gl, spec.n_theta,
                                        std::max(dom.cutoff(), spec.floor));
    const PlanarGrid unit = polar_grid(PlanarDomain::unit_disc(), inner.panels,
                                       inner.gl, inner.n_theta, 0.0);
    if (nodes)
        *nodes = static_cast<long long>(outer.nodes.size()) *
                 static_cast<long long>(unit.nodes.size());

    const auto n1 = static_cast<std::int64_t>(unit.nodes.size());
    const auto n2 = static_cast<std::int64_t>(outer.nodes.size());
    return kernels::rsum(n1 * n2, [&](std::int64_t idx) {
        const auto i = static_cast<std::size_t>(idx / n2);
        const auto j = static_cast<std::size_t>(idx % n2);
        const Complex z2 = outer.nodes[j];
        const double r = std::abs(z2);
        const Complex z1 = r * unit.nodes[i];
        const double w = unit.weights[i] * outer.weights[j] *
                         std::pow(r, s) * r * r;
        return w * std::pow(std::abs(g(z1, z2)), p);
    });
}

// ---- shared driver ----------------------------------------------------

template <class Integral>
NormReport run_norm(double p, double weight_exp, const NormOptions& opts,
                    bool reaches_zero, bool singular_integrand,
                    double truncation, Integral&& integral) {
    if (!(p >= 1.0)) throw Error("p must be >= 1");

    long long nodes_coarse = 0, nodes_fine = 0;
    const double s_coarse = integral(opts, truncation, &nodes_coarse);
    const NormOptions fine = refined(opts);
    const double s_fine = integral(fine, truncation, &nodes_fine);

    if (reaches_zero && truncation > 0.0 &&
        (weight_exp < 0.0 || singular_integrand)) {
        // Shrinking the floor must not move the integral: otherwise the
        // weight makes it diverge and truncation would silently hide that.
        NormOptions deep = fine;
        deep.panels += 8;
        const double s_deep = integral(deep, truncation * 1e-2, nullptr);
        if (std::abs(s_deep - s_fine) > 0.02 * std::max(std::abs(s_fine), 1e-300))
            throw DivergentWeight(
                "weighted integral keeps growing as the z2 floor shrinks");
    }

    NormReport rep;
    rep.kind = (weight_exp == 0.0) ? NormKind::Lp : NormKind::LpWeighted;
    rep.p = p;
    rep.weight_exp = weight_exp;
    rep.value = std::pow(std::max(s_fine, 0.0), 1.0 / p);
    rep.est_error = std::abs(rep.value - std::pow(std::max(s_coarse, 0.0), 1.0 / p));
    rep.nodes_used = nodes_fine;
    rep.truncation = truncation;
    return rep;
}

bool factor2_reaches_zero(const ProductDomain& dom) {
    return dom.factor2.kind() == DomainKind::PuncturedDisc &&
           dom.factor2.center() == Complex(0.0, 0.0);
}

void check_weight_precondition(double weight_exp, bool excludes_zero) {
    if (weight_exp < 0.0 && !excludes_zero)
        throw Error("negative weight exponent requires a domain excluding z2 = 0");
}

bool product_excludes_zero(const ProductDomain& dom) {
    return !dom.factor2.contains(Complex(0.0, 0.0));
}

}  // namespace

NormReport lp_norm(const FormExpr& g, double p, const ProductDomain& domain,
                   double weight_exp, const NormOptions& opts) {
    check_weight_precondition(weight_exp, product_excludes_zero(domain));
    const bool reaches_zero = factor2_reaches_zero(domain);
    const double floor = reaches_zero ? std::max(opts.eps, 1e-12) : 0.0;
    return run_norm(p, weight_exp, opts, reaches_zero, g.has_laurent(), floor,
                    [&](const NormOptions& o, double trunc, long long* nodes) {
                        GridSpec spec{o.panels, o.gl, o.n_theta, trunc};
                        return product_integral_expr(g, domain, p, weight_exp,
                                                     spec, nodes);
                    });
}

NormReport lp_norm(const Field& g, double p, const ProductDomain& domain,
                   double weight_exp, const NormOptions& opts) {
    check_weight_precondition(weight_exp, product_excludes_zero(domain));
    const bool reaches_zero = factor2_reaches_zero(domain);
    const double floor = reaches_zero ? std::max(opts.eps, 1e-12) : 0.0;
    return run_norm(p, weight_exp, opts, reaches_zero, false, floor,
                    [&](const NormOptions& o, double trunc, long long* nodes) {
                        GridSpec spec{o.panels, o.gl, o.n_theta, trunc};
                        return product_integral_field(g, domain, p, weight_exp,
                                                      spec, nodes);
                    });
}

NormReport lp_norm(const FormExpr& g, double p, const HartogsDomain& domain,
                   double weight_exp, const NormOptions& opts) {
    const bool untruncated = domain.cutoff() <= 0.0;
    const double floor =
        untruncated ? std::max(opts.eps, 1e-12) : domain.cutoff();
    return run_norm(p, weight_exp, opts, untruncated, g.has_laurent(), floor,
                    [&](const NormOptions& o, double trunc, long long* nodes) {
                        GridSpec spec{o.panels, o.gl, o.n_theta, trunc};
                        GridSpec inner{o.inner_panels, o.inner_gl,
                                       o.inner_theta, 0.0};
                        return hartogs_integral_expr(g, domain, p, weight_exp,
                                                     spec, inner, nodes);
                    });
}

NormReport lp_norm(const Field& g, double p, const HartogsDomain& domain,
                   double weight_exp, const NormOptions& opts) {
    const bool untruncated = domain.cutoff() <= 0.0;
    const double floor =
        untruncated ? std::max(opts.eps, 1e-12) : domain.cutoff();
    return run_norm(p, weight_exp, opts, untruncated, false, floor,
                    [&](const NormOptions& o, double trunc, long long* nodes) {
                        GridSpec spec{o.panels, o.gl, o.n_theta, trunc};
                        GridSpec inner{o.inner_panels, o.inner_gl,
                                       o.inner_theta, 0.0};
                        return hartogs_integral_field(g, domain, p, weight_exp,
                                                      spec, inner, nodes);
                    });
}

NormReport lp_norm(const Component& g, double p, const ProductDomain& domain,
                   double weight_exp, const NormOptions& opts) {
    if (const auto* e = std::get_if<FormExpr>(&g))
        return lp_norm(*e, p, domain, weight_exp, opts);
    const SampledFunction& s = std::get<SampledFunction>(g);
    return lp_norm(Field(s.evaluator), p, domain, weight_exp, opts);
}

NormReport lp_norm(const Component& g, double p, const HartogsDomain& domain,
                   double weight_exp, const NormOptions& opts) {
    if (const auto* e = std::get_if<FormExpr>(&g))
        return lp_norm(*e, p, domain, weight_exp, opts);
    const SampledFunction& s = std::get<SampledFunction>(g);
    return lp_norm(Field(s.evaluator), p, domain, weight_exp, opts);
}

NormReport banach_norm(const OneForm& f, double p, const ProductDomain& domain,
                       const NormOptions& opts) {
    const Component d = mixed_derivative(f);
    const NormReport n1 = lp_norm(f.f1(), p, domain, 0.0, opts);
    const NormReport n2 = lp_norm(f.f2(), p, domain, 0.0, opts);
    const NormReport nd = lp_norm(d, p, domain, 0.0, opts);
    NormReport rep;
    rep.kind = NormKind::BanachB;
    rep.p = p;
    rep.weight_exp = 0.0;
    rep.value = n1.value + n2.value + nd.value;
    rep.est_error = n1.est_error + n2.est_error + nd.est_error;
    rep.nodes_used = n1.nodes_used + n2.nodes_used + nd.nodes_used;
    rep.truncation = std::max({n1.truncation, n2.truncation, nd.truncation});
    return rep;
}

}  // namespace dbar
