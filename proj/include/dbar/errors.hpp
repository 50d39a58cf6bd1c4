#ifndef DBAR_ERRORS_HPP
#define DBAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dbar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation point is on or outside the boundary circles of a planar domain.
struct PointOnOrOutsideBoundary : Error {
    using Error::Error;
};

/// Evaluation point coincides with the puncture of a punctured disc.
struct PointAtPuncture : Error {
    using Error::Error;
};

/// Point lies outside the domain of a closed-form expression.
struct OutOfDomain : Error {
    using Error::Error;
};

/// A Laurent term z2^p, p < 0, was evaluated at z2 = 0.
struct LaurentPole : Error {
    using Error::Error;
};

/// Operation needs a symbolic (monomial-sum) representation.
struct SymbolicRequired : Error {
    using Error::Error;
};

/// Sampled form without an explicit cross derivative.
struct MissingDerivativeData : Error {
    using Error::Error;
};

/// The (0,1)-form fails the exact closedness test.
struct NotClosed : Error {
    using Error::Error;
};

/// Weighted integral failed the refinement convergence test.
struct DivergentWeight : Error {
    using Error::Error;
};

/// Residual grid cannot keep the required distance from the boundary.
struct GridTooCloseToBoundary : Error {
    using Error::Error;
};

}  // namespace dbar

#endif
