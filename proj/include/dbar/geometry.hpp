#ifndef DBAR_GEOMETRY_HPP
#define DBAR_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "dbar/errors.hpp"
#include "dbar/types.hpp"

namespace dbar {

enum class DomainKind { Disc, Annulus, PuncturedDisc };

/// A disc, annulus or punctured disc in the plane. Immutable after
/// construction; all members are safe for concurrent use.
class PlanarDomain {
public:
    static PlanarDomain disc(Complex center, double r_outer);
    static PlanarDomain annulus(Complex center, double r_inner, double r_outer);
    static PlanarDomain punctured_disc(Complex center, double r_outer);

    static PlanarDomain unit_disc() { return disc(0.0, 1.0); }
    static PlanarDomain unit_punctured_disc() { return punctured_disc(0.0, 1.0); }

    DomainKind kind() const { return kind_; }
    Complex center() const { return center_; }
    double r_outer() const { return r_outer_; }
    double r_inner() const { return r_inner_; }

    /// pi (r_outer^2 - r_inner^2); the puncture has measure zero.
    double area() const;

    /// Strict interior membership. Excludes the puncture point itself.
    bool contains(Complex z) const;

    /// Distance from z to the boundary circle(s). The puncture does not
    /// count as boundary here; see minimum_clearance for rule building.
    double boundary_distance(Complex z) const;

    /// True when the domain is the unit disc or unit punctured disc
    /// centered at the origin (the case covered by the closed-form
    /// transforms).
    bool is_unit_disc_like() const;

private:
    PlanarDomain(DomainKind k, Complex c, double r_in, double r_out);

    DomainKind kind_;
    Complex center_;
    double r_outer_;
    double r_inner_;
};

/// D1 x D2 in C^2.
struct ProductDomain {
    PlanarDomain factor1;
    PlanarDomain factor2;

    bool contains(Complex z1, Complex z2) const {
        return factor1.contains(z1) && factor2.contains(z2);
    }
    bool contains(Point2 z) const { return contains(z.z1, z.z2); }
    double volume() const { return factor1.area() * factor2.area(); }

    static ProductDomain bidisc() {
        return {PlanarDomain::unit_disc(), PlanarDomain::unit_disc()};
    }
    static ProductDomain disc_times_punctured() {
        return {PlanarDomain::unit_disc(), PlanarDomain::unit_punctured_disc()};
    }
};

/// The set {|z1| < |z2| < 1}, optionally truncated to {|z2| > cutoff}.
class HartogsDomain {
public:
    HartogsDomain() = default;
    explicit HartogsDomain(double cutoff) : cutoff_(cutoff) {}

    double cutoff() const { return cutoff_; }

    bool contains(Complex z1, Complex z2) const {
        const double a2 = std::abs(z2);
        return std::abs(z1) < a2 && a2 < 1.0 && a2 > cutoff_;
    }
    bool contains(Point2 z) const { return contains(z.z1, z.z2); }

    /// (z1, z2) -> (z1/z2, z2), a biholomorphism onto D x D*.
    static Point2 to_product(Point2 z) { return {z.z1 / z.z2, z.z2}; }

    /// (w1, w2) -> (w1 w2, w2), the inverse map.
    static Point2 from_product(Point2 w) { return {w.z1 * w.z2, w.z2}; }

private:
    double cutoff_ = 0.0;
};

/// Polar quadrature rule for area integrals int_D g(zeta)/(zeta - z) dA.
/// When centered at a singular point z, the radial midpoint nodes combined
/// with the polar Jacobian keep the transformed integrand bounded. For an
/// annulus the rule is the full outer-disc rule minus a regular rule on the
/// hole, so hole nodes carry negative weights; disc rules have positive
/// weights only.
struct SingularQuadRule {
    std::vector<Complex> nodes;
    std::vector<double> weights;
    std::optional<Complex> center;  // singular point, if any
    Resolution resolution;

    double weight_sum() const;
};

/// Fraction of r_outer that an evaluation point must keep clear of the
/// boundary circles.
inline constexpr double kInteriorClearance = 1e-6;

/// Throws PointAtPuncture / PointOnOrOutsideBoundary unless z is interior
/// with the required clearance.
void require_interior(const PlanarDomain& domain, Complex z);

/// Builds the desingularized rule for z strictly inside the domain.
/// Throws PointOnOrOutsideBoundary / PointAtPuncture on bad z.
SingularQuadRule build_singular_rule(const PlanarDomain& domain, Complex z,
                                     int n_r, int n_theta);

/// Variant with geometrically graded radial nodes (toward the singular
/// point), used by the strongly singular double-area term of the
/// boundary-integral solver.
SingularQuadRule build_graded_singular_rule(const PlanarDomain& domain,
                                            Complex z, int n_panels,
                                            int n_theta,
                                            double t_floor = 1e-4);

/// Regular polar rule centered at the domain center: composite
/// Gauss-Legendre panels in r, midpoint in theta. If r_floor > 0 and the
/// domain reaches radius 0, the radial panels are geometric from r_floor
/// (resolving |z|^s weights near the origin) and the rule truncates there.
struct PlanarGrid {
    std::vector<Complex> nodes;
    std::vector<double> weights;
};

PlanarGrid polar_grid(const PlanarDomain& domain, int n_panels, int gl_order,
                      int n_theta, double r_floor = 0.0);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Deterministic well-spread interior sample points (radial progression,
/// golden-angle arguments), all at distance >= margin from the boundary
/// circles and, for punctured discs, at |z - puncture| >= puncture_margin.
/// Throws GridTooCloseToBoundary when the margins leave no room.
std::vector<Complex> interior_points(const PlanarDomain& domain, int n,
                                     double margin,
                                     double puncture_margin = 0.0);

}  // namespace dbar

#endif
