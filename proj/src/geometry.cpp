#include "dbar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace dbar {

namespace {
constexpr double kPi = std::numbers::pi;
}

PlanarDomain::PlanarDomain(DomainKind k, Complex c, double r_in, double r_out)
    : kind_(k), center_(c), r_outer_(r_out), r_inner_(r_in) {
    if (!(r_out > 0.0)) throw Error("r_outer must be positive");
    if (k == DomainKind::Annulus) {
        if (!(r_in > 0.0 && r_in < r_out))
            throw Error("annulus requires 0 < r_inner < r_outer");
    } else if (r_in != 0.0) {
        throw Error("r_inner must be 0 for disc and punctured_disc");
    }
}

PlanarDomain PlanarDomain::disc(Complex center, double r_outer) {
    return PlanarDomain(DomainKind::Disc, center, 0.0, r_outer);
}

PlanarDomain PlanarDomain::annulus(Complex center, double r_inner,
                                   double r_outer) {
    return PlanarDomain(DomainKind::Annulus, center, r_inner, r_outer);
}

PlanarDomain PlanarDomain::punctured_disc(Complex center, double r_outer) {
    return PlanarDomain(DomainKind::PuncturedDisc, center, 0.0, r_outer);
}

double PlanarDomain::area() const {
    return kPi * (sq(r_outer_) - sq(r_inner_));
}

bool PlanarDomain::contains(Complex z) const {
    const double d = std::abs(z - center_);
    switch (kind_) {
        case DomainKind::Disc:
            return d < r_outer_;
        case DomainKind::Annulus:
            return d > r_inner_ && d < r_outer_;
        case DomainKind::PuncturedDisc:
            return d > 0.0 && d < r_outer_;
    }
    return false;
}

double PlanarDomain::boundary_distance(Complex z) const {
    const double d = std::abs(z - center_);
    double dist = r_outer_ - d;
    if (kind_ == DomainKind::Annulus) dist = std::min(dist, d - r_inner_);
    return dist;
}

bool PlanarDomain::is_unit_disc_like() const {
    return kind_ != DomainKind::Annulus && center_ == Complex(0.0, 0.0) &&
           r_outer_ == 1.0;
}

double SingularQuadRule::weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

void require_interior(const PlanarDomain& domain, Complex z) {
    if (domain.kind() == DomainKind::PuncturedDisc && z == domain.center())
        throw PointAtPuncture("evaluation point at the puncture");
    if (!domain.contains(z) ||
        domain.boundary_distance(z) < kInteriorClearance * domain.r_outer())
        throw PointOnOrOutsideBoundary(
            "evaluation point too close to or outside the boundary");
}

namespace {

// Distance along direction e^{i theta} from z to the circle |w - c| = R,
// assuming |z - c| < R.
double ray_exit(Complex z, Complex c, double R, double cos_t, double sin_t) {
    const Complex d = z - c;
    const double b = d.real() * cos_t + d.imag() * sin_t;
    const double disc = b * b + R * R - std::norm(d);
    return -b + std::sqrt(disc);
}


// Full-disc singular rule: midpoint in r along each ray, midpoint in theta.
// Weights are rescaled so they sum to the disc area exactly; the raw sum
// already agrees to spectral accuracy for interior points, so the rescale
// is a no-op in the usual case.
SingularQuadRule disc_rule(Complex disc_center, double R, Complex z, int n_r,
                           int n_theta) {
    SingularQuadRule rule;
    rule.center = z;
    rule.resolution = {n_r, n_theta};
    rule.nodes.reserve(static_cast<std::size_t>(n_r) * n_theta);
    rule.weights.reserve(static_cast<std::size_t>(n_r) * n_theta);

    const double dtheta = 2.0 * kPi / n_theta;
    double raw_sum = 0.0;
    for (int j = 0; j < n_theta; ++j) {
        const double theta = (j + 0.5) * dtheta;
        const double ct = std::cos(theta), st = std::sin(theta);
        const double r_max = ray_exit(z, disc_center, R, ct, st);
        const double h = r_max / n_r;
        for (int i = 0; i < n_r; ++i) {
            const double r = (i + 0.5) * h;
            rule.nodes.push_back(z + Complex(r * ct, r * st));
            const double w = h * r * dtheta;  // polar Jacobian
            rule.weights.push_back(w);
            raw_sum += w;
        }
    }
    const double scale = kPi * R * R / raw_sum;
    for (double& w : rule.weights) w *= scale;
    return rule;
}

// Regular centered polar rule on a full disc (no kernel singularity).
// Midpoint in r integrates the Jacobian exactly, so weights sum to the
// area without rescaling.
void append_centered_disc(SingularQuadRule& rule, Complex c, double R,
                          int n_r, int n_theta, double sign) {
    const double dtheta = 2.0 * kPi / n_theta;
    const double h = R / n_r;
    for (int j = 0; j < n_theta; ++j) {
        const double theta = (j + 0.5) * dtheta;
        const Complex dir(std::cos(theta), std::sin(theta));
        for (int i = 0; i < n_r; ++i) {
            const double r = (i + 0.5) * h;
            rule.nodes.push_back(c + r * dir);
            rule.weights.push_back(sign * h * r * dtheta);
        }
    }
}

}  // namespace

SingularQuadRule build_singular_rule(const PlanarDomain& domain, Complex z,
                                     int n_r, int n_theta) {
    if (n_r < 1 || n_theta < 4) throw Error("rule resolution too small");
    require_interior(domain, z);

    SingularQuadRule rule =
        disc_rule(domain.center(), domain.r_outer(), z, n_r, n_theta);
    if (domain.kind() == DomainKind::Annulus) {
        // Outer disc minus the hole; the hole integral is nonsingular
        // because z lies in the annulus.
        append_centered_disc(rule, domain.center(), domain.r_inner(), n_r,
                             n_theta, -1.0);
    }
    return rule;
}

SingularQuadRule build_graded_singular_rule(const PlanarDomain& domain,
                                            Complex z, int n_panels,
                                            int n_theta, double t_floor) {
    if (n_panels < 2 || n_theta < 4) throw Error("rule resolution too small");
    if (!(t_floor > 0.0 && t_floor < 0.5)) throw Error("bad t_floor");
    require_interior(domain, z);
    if (domain.kind() == DomainKind::Annulus)
        throw Error("graded rule supports disc-like domains only");

    SingularQuadRule rule;
    rule.center = z;
    rule.resolution = {n_panels, n_theta};

    // Geometric radial breakpoints as fractions of the ray length.
    std::vector<double> t(static_cast<std::size_t>(n_panels) + 1);
    const double ratio = std::pow(1.0 / t_floor, 1.0 / n_panels);
    t[0] = t_floor;
    for (int i = 1; i <= n_panels; ++i) t[static_cast<std::size_t>(i)] = t[i - 1] * ratio;
    t[static_cast<std::size_t>(n_panels)] = 1.0;

    const double dtheta = 2.0 * kPi / n_theta;
    const double R = domain.r_outer();
    for (int j = 0; j < n_theta; ++j) {
        const double theta = (j + 0.5) * dtheta;
        const double ct = std::cos(theta), st = std::sin(theta);
        const double r_max = ray_exit(z, domain.center(), R, ct, st);
        for (int i = 0; i < n_panels; ++i) {
            const double a = t[static_cast<std::size_t>(i)] * r_max;
            const double b = t[static_cast<std::size_t>(i) + 1] * r_max;
            const double r = 0.5 * (a + b);
            rule.nodes.push_back(z + Complex(r * ct, r * st));
            rule.weights.push_back((b - a) * r * dtheta);
        }
    }
    return rule;
}

void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    static std::mutex m;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>>
        cache;
    {
        std::scoped_lock lock(m);
        auto it = cache.find(order);
        if (it != cache.end()) {
            nodes = it->second.first;
            weights = it->second.second;
            return;
        }
    }

    nodes.assign(static_cast<std::size_t>(order), 0.0);
    weights.assign(static_cast<std::size_t>(order), 0.0);
    for (int i = 0; i < order; ++i) {
        // Newton iteration from the Chebyshev estimate.
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = x;
        weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }

    std::scoped_lock lock(m);
    cache.emplace(order, std::make_pair(nodes, weights));
}

PlanarGrid polar_grid(const PlanarDomain& domain, int n_panels, int gl_order,
                      int n_theta, double r_floor) {
    if (n_panels < 1 || gl_order < 2 || n_theta < 4)
        throw Error("grid resolution too small");

    const double R = domain.r_outer();
    double lo = domain.r_inner();
    bool geometric = false;
    if (lo == 0.0 && r_floor > 0.0) {
        lo = r_floor;
        geometric = true;
    }

    std::vector<double> breaks(static_cast<std::size_t>(n_panels) + 1);
    if (geometric) {
        const double ratio = std::pow(R / lo, 1.0 / n_panels);
        breaks[0] = lo;
        for (int i = 1; i <= n_panels; ++i)
            breaks[static_cast<std::size_t>(i)] = breaks[i - 1] * ratio;
        breaks[static_cast<std::size_t>(n_panels)] = R;
    } else {
        for (int i = 0; i <= n_panels; ++i)
            breaks[static_cast<std::size_t>(i)] = lo + (R - lo) * i / n_panels;
    }

    std::vector<double> gx, gw;
    gauss_legendre(gl_order, gx, gw);

    PlanarGrid grid;
    grid.nodes.reserve(static_cast<std::size_t>(n_panels) * gl_order * n_theta);
    grid.weights.reserve(grid.nodes.capacity());
    const double dtheta = 2.0 * kPi / n_theta;
    for (int j = 0; j < n_theta; ++j) {
        const double theta = (j + 0.5) * dtheta;
        const Complex dir(std::cos(theta), std::sin(theta));
        for (int pnl = 0; pnl < n_panels; ++pnl) {
            const double a = breaks[static_cast<std::size_t>(pnl)];
            const double b = breaks[static_cast<std::size_t>(pnl) + 1];
            for (int i = 0; i < gl_order; ++i) {
                const double r = 0.5 * (a + b) + 0.5 * (b - a) * gx[static_cast<std::size_t>(i)];
                grid.nodes.push_back(domain.center() + r * dir);
                grid.weights.push_back(0.5 * (b - a) * gw[static_cast<std::size_t>(i)] * r *
                                       dtheta);
            }
        }
    }
    return grid;
}

std::vector<Complex> interior_points(const PlanarDomain& domain, int n,
                                     double margin, double puncture_margin) {
    const double R = domain.r_outer();
    double lo = domain.r_inner() > 0.0 ? domain.r_inner() + margin : 0.0;
    if (domain.kind() == DomainKind::PuncturedDisc)
        lo = std::max(lo, puncture_margin);
    const double hi = R - margin;
    if (!(hi > lo))
        throw GridTooCloseToBoundary("margins leave no interior room");

    // Golden-angle spiral: deterministic and well spread.
    constexpr double golden = 2.399963229728653;
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double r = lo + (hi - lo) * (i + 0.5) / n;
        const double theta = golden * i;
        pts.push_back(domain.center() +
                      Complex(r * std::cos(theta), r * std::sin(theta)));
    }
    return pts;
}

}  // namespace dbar
