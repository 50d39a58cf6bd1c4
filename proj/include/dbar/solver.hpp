#ifndef DBAR_SOLVER_HPP
#define DBAR_SOLVER_HPP

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "dbar/cauchy.hpp"
#include "dbar/forms.hpp"
#include "dbar/geometry.hpp"

namespace dbar {

// The three-term solution operator on D1 x D2,
//   u(z) = K2[f2(z1,.)](z2) + K1[f1(.,z2)](z1) + (K1 (x) K2)[Df](z1, z2),
// which satisfies dbar u = f for closed f. Symbolic forms separate the
// double transform into products of single-variable transforms, evaluated
// by the closed forms when the factor monomial admits one.

struct SolveOptions {
    Resolution res = {128, 256};        // single-variable transforms
    Resolution res_tensor = {48, 96};   // per factor, sampled double term
    bool use_exact = true;              // closed-form monomial transforms
    bool check_closed = true;
    kernels::Exec exec = kernels::Exec::Parallel;
};

/// Evaluates the solution operator at one interior point.
/// Throws NotClosed when a symbolic f fails the exact closedness test,
/// MissingDerivativeData for sampled f without explicit_D, and the
/// geometry errors for bad z.
Complex solve_dbar(const OneForm& f, const ProductDomain& domain, Point2 z,
                   const SolveOptions& opts = {});

/// The boundary-integral form of the same operator: the two single Cauchy
/// terms plus two boundary-circle integrals and a double-area term. Agrees
/// with solve_dbar on forms continuous up to the closure; factors must
/// have circular boundaries. All five terms are evaluated by quadrature
/// with n_bdry midpoint nodes per boundary circle.
Complex solve_dbar_boundary(const OneForm& f, const ProductDomain& domain,
                            Point2 z, int n_bdry = 256,
                            const SolveOptions& opts = {});

/// A prepared, memoizing view of z -> solve_dbar(f, domain, z): the
/// closedness gate runs once, the cross derivative is cached, and repeat
/// evaluations at the same point are served from a map (last write wins;
/// safe for concurrent use).
class SolutionField {
public:
    SolutionField(OneForm f, ProductDomain domain, SolveOptions opts = {},
                  bool memoize = true);

    Complex operator()(Complex z1, Complex z2) const;
    Complex operator()(Point2 z) const { return (*this)(z.z1, z.z2); }

    /// Batch evaluation, parallel over points (kernels run serial inside).
    /// Does not touch the memo map.
    std::vector<Complex> evaluate_grid(const std::vector<Point2>& pts) const;

    const OneForm& form() const { return f_; }
    const ProductDomain& domain() const { return domain_; }
    const SolveOptions& options() const { return opts_; }

private:
    OneForm f_;
    ProductDomain domain_;
    SolveOptions opts_;
    Component cross_;
    bool memoize_;

    struct PointKey {
        double a, b, c, d;
        bool operator==(const PointKey&) const = default;
    };
    struct PointKeyHash {
        std::size_t operator()(const PointKey& k) const;
    };
    mutable std::unordered_map<PointKey, Complex, PointKeyHash> memo_;
    mutable std::shared_mutex mutex_;
};

/// Finite-difference witness that dbar(u) = f on an interior tensor grid:
/// grid_n points per factor, central differences with step h. Grid points
/// keep distance >= 5h from the boundary circles (and from the puncture).
struct ResidualReport {
    int grid_n = 0;
    double h = 0.0;
    double max_err = 0.0;    // max_p sqrt(|e1|^2 + |e2|^2)
    double l2_err = 0.0;     // sqrt(sum_p (|e1|^2 + |e2|^2))
    double max_err_1 = 0.0;  // per-component maxima
    double max_err_2 = 0.0;
    std::vector<Point2> points;
    std::vector<double> err1;
    std::vector<double> err2;
};

struct ResidualOptions {
    SolveOptions solve;
    // Measure the numeric operator rather than the closed-form fast path;
    // with the closed forms on, the residual of a monomial form would only
    // test the finite differences.
    bool force_quadrature = true;
};

ResidualReport dbar_residual(const OneForm& f, const ProductDomain& domain,
                             int grid_n, double h,
                             const ResidualOptions& opts = {});

}  // namespace dbar

#endif
