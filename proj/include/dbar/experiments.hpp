#ifndef DBAR_EXPERIMENTS_HPP
#define DBAR_EXPERIMENTS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dbar/hartogs.hpp"
#include "dbar/norms.hpp"
#include "dbar/solver.hpp"

namespace dbar {

// ---- the L1 counterexample family -------------------------------------

/// f^k = zbar1^(k-1) z1^k zbar2^k z2^k dzbar1 + zbar1^k z1^k zbar2^(k-1) z2^k dzbar2,
/// closed for every k >= 1.
OneForm fk_form(int k);

/// g^L = sum_{k<=L} f^k.
OneForm gL_form(int L);

double harmonic_number(int L);

/// ||f^k_1||_{L1} + ||f^k_2||_{L1} on the bidisc = 8 pi^2 / ((2k+1)(2k+2)).
double fk_l1_closed(int k);
double gL_l1_closed(int L);

/// Solution of the operator applied to g^L, summed term by term:
/// sum_{k<=L} ( |z1 z2|^(2k) - 1 ) / k.
Complex TgL_closed(int L, Point2 z);

/// ||T(g^L)||_{L1} = pi^2 H_L - pi^2 sum_{k<=L} 1/(k (k+1)^2).
double TgL_l1_closed(int L);

struct CounterexampleRow {
    int L = 0;
    double g_norm_l1 = 0.0;   // closed form
    double tg_norm_l1 = 0.0;  // closed form
    double ratio = 0.0;
    double harmonic = 0.0;
    // Quadrature cross-checks (NaN when skipped).
    double g_norm_quad = 0.0;
    double tg_norm_quad = 0.0;
};

/// One row per L <= L_max. The quadrature columns integrate |g^L| directly
/// and sample the solution operator over the bidisc, so the analytic and
/// numeric routes stay independent.
std::vector<CounterexampleRow> counterexample_table(int L_max,
                                                    bool with_quadrature = true);

// ---- Lp / hypothesis-norm ratio sweeps ---------------------------------

struct BoundReport {
    double tf_norm = 0.0;
    double b_norm = 0.0;
    std::optional<double> ratio;  // unset when the hypothesis norm vanishes
    int grid_per_factor = 0;
};

/// ||Tf||_p by sampling the solver on an interior tensor grid
/// (grid_per_factor radial x angular nodes per factor, boundary margin),
/// and the hypothesis norm of f, with their ratio.
BoundReport lp_bound_report(const OneForm& f, const ProductDomain& domain,
                            double p, int grid_per_factor = 32,
                            double margin = 0.02,
                            const SolveOptions& solve = {},
                            const NormOptions& norm = {});

/// max over `trials` random monomials g of
/// ||K1[g(., z2)](z1)||_p / ||g||_p on the bidisc.
double cauchy_lp_property(double p, int trials,
                          std::uint64_t seed = 20240901ULL);

/// Ratio for one monomial; unset for the zero function.
std::optional<double> cauchy_ratio(const MonomialTerm& g, double p,
                                   const ProductDomain& domain);

// ---- quadrature-vs-closed-form oracle suite ----------------------------

struct OracleCase {
    std::string name;
    double err_at_default = 0.0;  // relative error at resolution (128, 256)
    double order = 0.0;           // fitted convergence order over the sweep
    bool pass = false;
};

struct OracleSuiteReport {
    std::vector<OracleCase> cases;
    bool all_pass = false;
};

/// Compares the quadrature transform against both closed-form families at
/// k in {1,2,5} and five interior points, over resolutions n in
/// {32,64,128,256} (n_theta = 2n). A case passes when the error at
/// (128,256) is <= 1e-4 and the fitted order is >= 1.9 (or the error sits
/// at rounding level).
OracleSuiteReport oracle_suite();

// ---- random closed test forms ------------------------------------------

/// Random closed monomial form, built as the dbar of a random potential
/// (optionally Laurent in z2) plus an occasional pure closed term.
OneForm random_closed_form(std::mt19937& rng, bool laurent_in_z2);

HartogsForm random_closed_hartogs_form(std::mt19937& rng);

}  // namespace dbar

#endif
