#include "dbar/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace dbar {

namespace {

constexpr double kPi = std::numbers::pi;

void warn_unchecked_closedness() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        std::fprintf(stderr,
                     "dbar: sampled form, closedness not verifiable; "
                     "trusting the caller\n");
    });
}

auto monomial_fn(int p, int q) {
    return [p, q](Complex zeta) -> Complex {
        if (p < 0 && zeta == Complex(0.0, 0.0)) return 0.0;  // measure zero
        return ipow(zeta, p) * ipow(std::conj(zeta), q);
    };
}

// Per-point solve state: the two singular rules are built lazily and
// shared by every quadrature transform at this point.
struct SolveContext {
    const ProductDomain& dom;
    Point2 z;
    const SolveOptions& o;
    std::optional<SingularQuadRule> rule1, rule2;

    const SingularQuadRule& r1() {
        if (!rule1)
            rule1 = build_singular_rule(dom.factor1, z.z1, o.res.n_r,
                                        o.res.n_theta);
        return *rule1;
    }
    const SingularQuadRule& r2() {
        if (!rule2)
            rule2 = build_singular_rule(dom.factor2, z.z2, o.res.n_r,
                                        o.res.n_theta);
        return *rule2;
    }

    Complex k1(int p, int q) {
        if (o.use_exact && has_exact_transform(dom.factor1, p, q))
            return exact_monomial_transform(p, q, z.z1);
        return apply_cauchy_rule(r1(), monomial_fn(p, q), z.z1, o.exec);
    }
    Complex k2(int p, int q) {
        if (o.use_exact && has_exact_transform(dom.factor2, p, q))
            return exact_monomial_transform(p, q, z.z2);
        return apply_cauchy_rule(r2(), monomial_fn(p, q), z.z2, o.exec);
    }
};

// Transform of f2(z1, .) over factor2, evaluated at z2.
Complex single_transform_in_z2(const Component& f2, SolveContext& ctx) {
    const Point2 z = ctx.z;
    if (const auto* e = std::get_if<FormExpr>(&f2)) {
        Complex acc = 0.0;
        const Complex z1c = std::conj(z.z1);
        for (const MonomialTerm& t : e->terms())
            acc += t.coef * ipow(z.z1, t.p1) * ipow(z1c, t.q1) *
                   ctx.k2(t.p2, t.q2);
        return acc;
    }
    const SampledFunction& s = std::get<SampledFunction>(f2);
    return apply_cauchy_rule(
        ctx.r2(), [&](Complex zeta2) { return s.eval(z.z1, zeta2); }, z.z2,
        ctx.o.exec);
}

Complex single_transform_in_z1(const Component& f1, SolveContext& ctx) {
    const Point2 z = ctx.z;
    if (const auto* e = std::get_if<FormExpr>(&f1)) {
        Complex acc = 0.0;
        const Complex z2c = std::conj(z.z2);
        for (const MonomialTerm& t : e->terms())
            acc += t.coef * ipow(z.z2, t.p2) * ipow(z2c, t.q2) *
                   ctx.k1(t.p1, t.q1);
        return acc;
    }
    const SampledFunction& s = std::get<SampledFunction>(f1);
    return apply_cauchy_rule(
        ctx.r1(), [&](Complex zeta1) { return s.eval(zeta1, z.z2); }, z.z1,
        ctx.o.exec);
}

// Double transform of the cross derivative. Symbolic data separates into
// products of single transforms; sampled data goes through the tensor
// product of two singular rules.
Complex double_transform(const Component& cross, SolveContext& ctx) {
    const Point2 z = ctx.z;
    const SolveOptions& o = ctx.o;
    if (const auto* e = std::get_if<FormExpr>(&cross)) {
        Complex acc = 0.0;
        for (const MonomialTerm& t : e->terms())
            acc += t.coef * ctx.k1(t.p1, t.q1) * ctx.k2(t.p2, t.q2);
        return acc;
    }
    const SampledFunction& s = std::get<SampledFunction>(cross);
    const SingularQuadRule r1 = build_singular_rule(
        ctx.dom.factor1, z.z1, o.res_tensor.n_r, o.res_tensor.n_theta);
    const SingularQuadRule r2 = build_singular_rule(
        ctx.dom.factor2, z.z2, o.res_tensor.n_r, o.res_tensor.n_theta);
    const auto n1 = static_cast<std::int64_t>(r1.nodes.size());
    const auto n2 = static_cast<std::int64_t>(r2.nodes.size());
    const Complex sum = kernels::csum(
        n1 * n2,
        [&](std::int64_t idx) {
            const auto i = static_cast<std::size_t>(idx / n2);
            const auto j = static_cast<std::size_t>(idx % n2);
            const Complex zeta1 = r1.nodes[i];
            const Complex zeta2 = r2.nodes[j];
            return r1.weights[i] * r2.weights[j] * s.eval(zeta1, zeta2) /
                   ((zeta1 - z.z1) * (zeta2 - z.z2));
        },
        o.exec);
    return sum / (kPi * kPi);
}

Complex solve_impl(const OneForm& f, const Component& cross,
                   const ProductDomain& dom, Point2 z, const SolveOptions& o) {
    require_interior(dom.factor1, z.z1);
    require_interior(dom.factor2, z.z2);
    SolveContext ctx{dom, z, o, std::nullopt, std::nullopt};
    return single_transform_in_z2(f.f2(), ctx) +
           single_transform_in_z1(f.f1(), ctx) + double_transform(cross, ctx);
}

Component checked_cross(const OneForm& f, const SolveOptions& o) {
    if (f.symbolic()) {
        if (o.check_closed && !is_closed(f))
            throw NotClosed("the form fails the exact closedness test");
    } else if (o.check_closed) {
        warn_unchecked_closedness();
    }
    return mixed_derivative(f);
}

}  // namespace

Complex solve_dbar(const OneForm& f, const ProductDomain& domain, Point2 z,
                   const SolveOptions& opts) {
    const Component cross = checked_cross(f, opts);
    return solve_impl(f, cross, domain, z, opts);
}

SolutionField::SolutionField(OneForm f, ProductDomain domain,
                             SolveOptions opts, bool memoize)
    : f_(std::move(f)),
      domain_(std::move(domain)),
      opts_(opts),
      cross_(checked_cross(f_, opts)),
      memoize_(memoize) {}

std::size_t SolutionField::PointKeyHash::operator()(const PointKey& k) const {
    auto mix = [](std::size_t h, double v) {
        std::size_t x = std::hash<double>{}(v);
        return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    std::size_t h = 0;
    h = mix(h, k.a);
    h = mix(h, k.b);
    h = mix(h, k.c);
    h = mix(h, k.d);
    return h;
}

Complex SolutionField::operator()(Complex z1, Complex z2) const {
    const PointKey key{z1.real(), z1.imag(), z2.real(), z2.imag()};
    if (memoize_) {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    SolveOptions o = opts_;
    o.check_closed = false;  // done once in the constructor
    const Complex value = solve_impl(f_, cross_, domain_, {z1, z2}, o);
    if (memoize_) {
        std::unique_lock lock(mutex_);
        memo_[key] = value;
    }
    return value;
}

std::vector<Complex> SolutionField::evaluate_grid(
    const std::vector<Point2>& pts) const {
    SolveOptions o = opts_;
    o.check_closed = false;
    o.exec = kernels::Exec::Serial;  // parallelism moves to the point loop
    std::vector<Complex> out;
    kernels::map_indices(
        static_cast<std::int64_t>(pts.size()), out,
        [&](std::int64_t i) {
            return solve_impl(f_, cross_, domain_, pts[static_cast<std::size_t>(i)], o);
        },
        opts_.exec);
    return out;
}

namespace {

struct BoundaryCircle {
    Complex center;
    double radius;
    double sign;  // +1 outer, -1 inner (orientation of the domain boundary)
};

std::vector<BoundaryCircle> boundary_circles(const PlanarDomain& d) {
    std::vector<BoundaryCircle> out;
    out.push_back({d.center(), d.r_outer(), +1.0});
    if (d.kind() == DomainKind::Annulus)
        out.push_back({d.center(), d.r_inner(), -1.0});
    return out;
}

}  // namespace

Complex solve_dbar_boundary(const OneForm& f, const ProductDomain& domain,
                            Point2 z, int n_bdry, const SolveOptions& opts) {
    if (n_bdry < 8) throw Error("n_bdry too small");
    checked_cross(f, opts);  // closedness gate; the cross term is implicit here
    require_interior(domain.factor1, z.z1);
    require_interior(domain.factor2, z.z2);

    const kernels::Exec exec = opts.exec;
    auto f1_at = [&](Complex a, Complex b) { return eval_component(f.f1(), a, b); };
    auto f2_at = [&](Complex a, Complex b) { return eval_component(f.f2(), a, b); };

    // Subtract the value at z from both components. Constant forms are
    // closed with vanishing cross derivative, so their boundary and
    // double-area corrections cancel exactly; removing them makes every
    // singular integrand vanish at zeta = z.
    const Complex c1 = f1_at(z.z1, z.z2);
    const Complex c2 = f2_at(z.z1, z.z2);
    auto g1 = [&](Complex a, Complex b) { return f1_at(a, b) - c1; };
    auto g2 = [&](Complex a, Complex b) { return f2_at(a, b) - c2; };

    const SingularQuadRule area1 =
        build_singular_rule(domain.factor1, z.z1, opts.res.n_r, opts.res.n_theta);
    const SingularQuadRule area2 =
        build_singular_rule(domain.factor2, z.z2, opts.res.n_r, opts.res.n_theta);

    // Two single Cauchy terms.
    const Complex termA =
        apply_cauchy_rule(area2, [&](Complex zeta2) { return f2_at(z.z1, zeta2); },
                          z.z2, exec);
    const Complex termB =
        apply_cauchy_rule(area1, [&](Complex zeta1) { return f1_at(zeta1, z.z2); },
                          z.z1, exec);

    // Mixed area x boundary-circle terms.
    const double dtheta = 2.0 * kPi / n_bdry;
    Complex term2 = 0.0;
    for (const BoundaryCircle& c : boundary_circles(domain.factor2)) {
        const auto n1 = static_cast<std::int64_t>(area1.nodes.size());
        const Complex sum = kernels::csum(
            static_cast<std::int64_t>(n_bdry) * n1,
            [&](std::int64_t idx) {
                const auto m = static_cast<std::size_t>(idx / n1);
                const auto i = static_cast<std::size_t>(idx % n1);
                const double theta = (static_cast<double>(m) + 0.5) * dtheta;
                const Complex eit(std::cos(theta), std::sin(theta));
                const Complex zeta2 = c.center + c.radius * eit;
                const Complex zeta1 = area1.nodes[i];
                const double dist2 =
                    std::norm(zeta1 - z.z1) + std::norm(zeta2 - z.z2);
                return area1.weights[i] * dtheta * g1(zeta1, zeta2) *
                       std::conj(zeta2 - z.z2) * eit /
                       ((zeta1 - z.z1) * dist2);
            },
            exec);
        term2 += -c.sign * c.radius / (2.0 * kPi * kPi) * sum;
    }

    Complex term4 = 0.0;
    for (const BoundaryCircle& c : boundary_circles(domain.factor1)) {
        const auto n2 = static_cast<std::int64_t>(area2.nodes.size());
        const Complex sum = kernels::csum(
            static_cast<std::int64_t>(n_bdry) * n2,
            [&](std::int64_t idx) {
                const auto m = static_cast<std::size_t>(idx / n2);
                const auto j = static_cast<std::size_t>(idx % n2);
                const double theta = (static_cast<double>(m) + 0.5) * dtheta;
                const Complex eit(std::cos(theta), std::sin(theta));
                const Complex zeta1 = c.center + c.radius * eit;
                const Complex zeta2 = area2.nodes[j];
                const double dist2 =
                    std::norm(zeta1 - z.z1) + std::norm(zeta2 - z.z2);
                return area2.weights[j] * dtheta * g2(zeta1, zeta2) *
                       std::conj(zeta1 - z.z1) * eit /
                       ((zeta2 - z.z2) * dist2);
            },
            exec);
        term4 += -c.sign * c.radius / (2.0 * kPi * kPi) * sum;
    }

    // Double-area term with the Bochner-Martinelli-type kernel; radial
    // grading toward the joint singularity at zeta = z.
    const int panels = std::max(24, n_bdry / 8);
    const int ntheta4 = std::max(48, n_bdry / 4);
    auto graded = [&](const PlanarDomain& d, Complex center) {
        if (d.kind() == DomainKind::Annulus) {
            // Graded rules cover disc-like factors; annulus holes are far
            // from the diagonal singularity, so the plain rule suffices.
            return build_singular_rule(d, center, panels * 2, ntheta4);
        }
        return build_graded_singular_rule(d, center, panels, ntheta4);
    };
    const SingularQuadRule t1 = graded(domain.factor1, z.z1);
    const SingularQuadRule t2 = graded(domain.factor2, z.z2);
    const auto n1 = static_cast<std::int64_t>(t1.nodes.size());
    const auto n2 = static_cast<std::int64_t>(t2.nodes.size());
    const Complex bmk = kernels::csum(
        n1 * n2,
        [&](std::int64_t idx) {
            const auto i = static_cast<std::size_t>(idx / n2);
            const auto j = static_cast<std::size_t>(idx % n2);
            const Complex zeta1 = t1.nodes[i];
            const Complex zeta2 = t2.nodes[j];
            const Complex d1 = zeta1 - z.z1;
            const Complex d2 = zeta2 - z.z2;
            const double dist2 = std::norm(d1) + std::norm(d2);
            const Complex num = g1(zeta1, zeta2) * std::conj(d1) +
                                g2(zeta1, zeta2) * std::conj(d2);
            return t1.weights[i] * t2.weights[j] * num / (dist2 * dist2);
        },
        exec);
    const Complex term5 = bmk / (kPi * kPi);

    return termA + termB + term2 + term4 + term5;
}

ResidualReport dbar_residual(const OneForm& f, const ProductDomain& domain,
                             int grid_n, double h, const ResidualOptions& opts) {
    if (!(h > 0.0)) throw Error("step must be positive");
    if (grid_n < 1) throw Error("grid_n must be positive");

    SolveOptions solve = opts.solve;
    if (opts.force_quadrature) solve.use_exact = false;

    const double margin = 5.0 * h;
    const std::vector<Complex> pts1 =
        interior_points(domain.factor1, grid_n, margin, margin);
    const std::vector<Complex> pts2 =
        interior_points(domain.factor2, grid_n, margin, margin);

    SolutionField field(f, domain, solve, /*memoize=*/false);

    std::vector<Point2> grid;
    grid.reserve(pts1.size() * pts2.size());
    for (Complex a : pts1)
        for (Complex b : pts2) grid.push_back({a, b});

    // Stencil: 8 shifted evaluations per grid point.
    const Complex re(h, 0.0), im(0.0, h);
    std::vector<Point2> stencil;
    stencil.reserve(grid.size() * 8);
    for (const Point2& p : grid) {
        stencil.push_back({p.z1 + re, p.z2});
        stencil.push_back({p.z1 - re, p.z2});
        stencil.push_back({p.z1 + im, p.z2});
        stencil.push_back({p.z1 - im, p.z2});
        stencil.push_back({p.z1, p.z2 + re});
        stencil.push_back({p.z1, p.z2 - re});
        stencil.push_back({p.z1, p.z2 + im});
        stencil.push_back({p.z1, p.z2 - im});
    }
    const std::vector<Complex> u = field.evaluate_grid(stencil);

    ResidualReport rep;
    rep.grid_n = grid_n;
    rep.h = h;
    rep.points = grid;
    rep.err1.resize(grid.size());
    rep.err2.resize(grid.size());
    double sumsq = 0.0;
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const std::size_t base = 8 * p;
        const Complex du1 =
            0.5 * ((u[base + 0] - u[base + 1]) / (2.0 * h) +
                   Complex(0, 1) * (u[base + 2] - u[base + 3]) / (2.0 * h));
        const Complex du2 =
            0.5 * ((u[base + 4] - u[base + 5]) / (2.0 * h) +
                   Complex(0, 1) * (u[base + 6] - u[base + 7]) / (2.0 * h));
        const Complex e1 =
            du1 - eval_component(f.f1(), grid[p].z1, grid[p].z2);
        const Complex e2 =
            du2 - eval_component(f.f2(), grid[p].z1, grid[p].z2);
        rep.err1[p] = std::abs(e1);
        rep.err2[p] = std::abs(e2);
        rep.max_err_1 = std::max(rep.max_err_1, rep.err1[p]);
        rep.max_err_2 = std::max(rep.max_err_2, rep.err2[p]);
        const double combined = std::hypot(rep.err1[p], rep.err2[p]);
        rep.max_err = std::max(rep.max_err, combined);
        sumsq += combined * combined;
    }
    rep.l2_err = std::sqrt(sumsq);
    return rep;
}

}  // namespace dbar
