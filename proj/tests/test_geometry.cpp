#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dbar/cauchy.hpp"
#include "dbar/geometry.hpp"

using namespace dbar;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("areas of the supported domains") {
    CHECK(PlanarDomain::unit_disc().area() == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(PlanarDomain::annulus(0.0, 0.5, 1.0).area() ==
          doctest::Approx(0.75 * kPi).epsilon(1e-14));
    CHECK(PlanarDomain::unit_punctured_disc().area() ==
          doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("domain invariants reject bad parameters") {
    CHECK_THROWS_AS(PlanarDomain::disc(0.0, -1.0), Error);
    CHECK_THROWS_AS(PlanarDomain::annulus(0.0, 1.0, 0.5), Error);
    CHECK_THROWS_AS(PlanarDomain::annulus(0.0, 0.0, 1.0), Error);
}

TEST_CASE("membership and puncture") {
    const PlanarDomain pd = PlanarDomain::unit_punctured_disc();
    CHECK(pd.contains(Complex(0.5, 0.0)));
    CHECK_FALSE(pd.contains(Complex(0.0, 0.0)));
    CHECK_FALSE(pd.contains(Complex(1.0, 0.0)));

    const PlanarDomain an = PlanarDomain::annulus(0.0, 0.3, 1.0);
    CHECK(an.contains(Complex(0.5, 0.0)));
    CHECK_FALSE(an.contains(Complex(0.1, 0.0)));

    const HartogsDomain h;
    CHECK(h.contains(Complex(0.1, 0.0), Complex(0.5, 0.0)));
    CHECK_FALSE(h.contains(Complex(0.5, 0.0), Complex(0.1, 0.0)));
    CHECK_FALSE(h.contains(Complex(0.5, 0.0), Complex(1.2, 0.0)));
}

TEST_CASE("singular rule weights sum to the area") {
    const auto rule = build_singular_rule(PlanarDomain::unit_disc(),
                                          Complex(0.0, 0.0), 64, 64);
    CHECK(std::abs(rule.weight_sum() - kPi) / kPi <= 1e-10);

    // off-center, all three kinds, random interior points
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    const PlanarDomain domains[] = {PlanarDomain::disc(Complex(0.2, -0.1), 1.3),
                                    PlanarDomain::annulus(0.0, 0.3, 1.0),
                                    PlanarDomain::unit_punctured_disc()};
    for (const auto& d : domains) {
        for (int i = 0; i < 8; ++i) {
            Complex z(u(rng), u(rng));
            z = d.center() + z * d.r_outer();
            if (!d.contains(z) || d.boundary_distance(z) < 0.05) continue;
            const auto r = build_singular_rule(d, z, 48, 96);
            CHECK(std::abs(r.weight_sum() - d.area()) / d.area() <= 1e-10);
        }
    }
}

TEST_CASE("singular rule applied to the constant reproduces conj(z)") {
    const auto rule = build_singular_rule(PlanarDomain::unit_disc(),
                                          Complex(0.5, 0.0), 64, 128);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] / (rule.nodes[i] - Complex(0.5, 0.0));
    const Complex k = -acc / kPi;
    CHECK(std::abs(k - Complex(0.5, 0.0)) <= 1e-4);
}

TEST_CASE("rule construction rejects boundary and puncture points") {
    CHECK_THROWS_AS(build_singular_rule(PlanarDomain::unit_disc(),
                                        Complex(1.0, 0.0), 32, 64),
                    PointOnOrOutsideBoundary);
    CHECK_THROWS_AS(build_singular_rule(PlanarDomain::unit_disc(),
                                        Complex(0.0, 1.0 - 1e-9), 32, 64),
                    PointOnOrOutsideBoundary);
    CHECK_THROWS_AS(build_singular_rule(PlanarDomain::unit_punctured_disc(),
                                        Complex(0.0, 0.0), 32, 64),
                    PointAtPuncture);
    CHECK_THROWS_AS(build_singular_rule(PlanarDomain::annulus(0.0, 0.3, 1.0),
                                        Complex(0.1, 0.0), 32, 64),
                    PointOnOrOutsideBoundary);
}

TEST_CASE("refinement convergence of the rule-based transform") {
    // g = conj(zeta) zeta^2 at z = 0.3: exact value (|z|^4 - 1)/2.
    const Complex z(0.3, 0.0);
    const Complex exact = (std::pow(std::norm(z), 2) - 1.0) / 2.0;
    auto g = [](Complex zeta) { return std::conj(zeta) * zeta * zeta; };

    std::vector<double> errs;
    for (int n : {16, 32, 64, 128}) {
        const Complex num =
            cauchy_transform(g, PlanarDomain::unit_disc(), z, {n, 2 * n});
        errs.push_back(std::abs(num - exact));
    }
    // observed order >= 2 between successive refinements
    for (std::size_t i = 1; i < errs.size(); ++i) {
        const double order = std::log2(errs[i - 1] / errs[i]);
        CHECK(order >= 1.9);
    }
    CHECK(errs.back() <= 1e-5);
}

TEST_CASE("product map round trip on the triangle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0;
    while (tested < 10000) {
        const Complex z2(u(rng), u(rng));
        const Complex z1(u(rng), u(rng));
        if (!HartogsDomain().contains(z1, z2)) continue;
        ++tested;
        const Point2 back =
            HartogsDomain::from_product(HartogsDomain::to_product({z1, z2}));
        CHECK(std::abs(back.z1 - z1) <= 1e-14);
        CHECK(std::abs(back.z2 - z2) <= 1e-14);
    }
}

TEST_CASE("polar grid integrates areas and monomials") {
    const PlanarGrid g = polar_grid(PlanarDomain::unit_disc(), 4, 6, 32);
    double area = 0.0;
    Complex moment = 0.0;  // int |z|^2 dA = pi/2
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        area += g.weights[i];
        moment += g.weights[i] * std::norm(g.nodes[i]);
    }
    CHECK(area == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(moment.real() == doctest::Approx(kPi / 2).epsilon(1e-12));

    const PlanarGrid ga = polar_grid(PlanarDomain::annulus(0.0, 0.3, 1.0), 4, 6, 32);
    double area_a = 0.0;
    for (double w : ga.weights) area_a += w;
    CHECK(area_a == doctest::Approx(kPi * (1.0 - 0.09)).epsilon(1e-12));

    // graded grid truncates at the floor
    const PlanarGrid gp =
        polar_grid(PlanarDomain::unit_punctured_disc(), 8, 6, 16, 1e-4);
    double rmin = 1.0;
    for (const Complex& node : gp.nodes) rmin = std::min(rmin, std::abs(node));
    CHECK(rmin >= 1e-4);
    CHECK(rmin <= 2e-3);
}

TEST_CASE("interior points respect margins") {
    const auto pts = interior_points(PlanarDomain::unit_disc(), 16, 0.05);
    for (Complex p : pts) CHECK(std::abs(p) <= 0.95 + 1e-12);

    const auto ptsA =
        interior_points(PlanarDomain::annulus(0.0, 0.4, 1.0), 16, 0.05);
    for (Complex p : ptsA) {
        CHECK(std::abs(p) >= 0.45 - 1e-12);
        CHECK(std::abs(p) <= 0.95 + 1e-12);
    }

    const auto ptsP =
        interior_points(PlanarDomain::unit_punctured_disc(), 16, 0.05, 0.01);
    for (Complex p : ptsP) CHECK(std::abs(p) >= 0.01 - 1e-12);

    CHECK_THROWS_AS(interior_points(PlanarDomain::unit_disc(), 4, 0.6),
                    GridTooCloseToBoundary);
}
