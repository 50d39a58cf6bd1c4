#ifndef DBAR_FORMS_HPP
#define DBAR_FORMS_HPP

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "dbar/errors.hpp"
#include "dbar/geometry.hpp"
#include "dbar/types.hpp"

namespace dbar {

/// One term coef * z1^p1 * conj(z1)^q1 * z2^p2 * conj(z2)^q2.
/// p1, q1, q2 >= 0; p2 may be negative (Laurent behavior in z2 only,
/// meaningful on domains excluding z2 = 0).
struct MonomialTerm {
    Complex coef;
    int p1 = 0;
    int q1 = 0;
    int p2 = 0;
    int q2 = 0;
};

enum class Var { z1, z2 };

/// Coefficients smaller than this are pruned during canonicalization,
/// keeping exact-zero tests meaningful after coefficient arithmetic.
inline constexpr double kCoefPrune = 1e-15;

/// Finite sum of monomial terms, kept canonical: sorted lexicographically
/// by (p1, q1, p2, q2), like terms merged, tiny coefficients pruned.
/// An empty term list is the zero function. Immutable value type.
class FormExpr {
public:
    FormExpr() = default;
    explicit FormExpr(std::vector<MonomialTerm> terms);

    static FormExpr monomial(Complex coef, int p1, int q1, int p2, int q2);
    static FormExpr constant(Complex c) { return monomial(c, 0, 0, 0, 0); }

    const std::vector<MonomialTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when some term has a negative z2 exponent.
    bool has_laurent() const;

    /// Throws LaurentPole if z2 == 0 and a term has p2 < 0.
    Complex eval(Complex z1, Complex z2) const;
    Complex eval(Point2 z) const { return eval(z.z1, z.z2); }

    /// Conjugate Wirtinger derivative d/d conj(v), exact term by term.
    FormExpr dbar(Var v) const;

    FormExpr operator-() const;
    FormExpr operator+(const FormExpr& o) const;
    FormExpr operator-(const FormExpr& o) const;
    FormExpr operator*(const FormExpr& o) const;
    FormExpr scaled(Complex c) const;

    /// Exact comparison of canonical term lists.
    bool operator==(const FormExpr& o) const;

private:
    std::vector<MonomialTerm> terms_;
};

/// Pointwise data given by a black-box evaluator.
struct SampledFunction {
    enum class Smoothness { C0, C1 };
    std::function<Complex(Complex, Complex)> evaluator;
    Smoothness smoothness = Smoothness::C1;

    Complex eval(Complex z1, Complex z2) const { return evaluator(z1, z2); }
};

using Component = std::variant<FormExpr, SampledFunction>;

inline bool is_symbolic(const Component& c) {
    return std::holds_alternative<FormExpr>(c);
}

inline Complex eval_component(const Component& c, Complex z1, Complex z2) {
    if (const auto* e = std::get_if<FormExpr>(&c)) return e->eval(z1, z2);
    return std::get<SampledFunction>(c).eval(z1, z2);
}

/// A (0,1)-form f = f1 dzbar1 + f2 dzbar2. When both components are
/// symbolic the cross derivative is computed exactly and a symbolic
/// explicit_D, if given, must agree with it.
class OneForm {
public:
    OneForm(FormExpr f1, FormExpr f2);
    OneForm(Component f1, Component f2,
            std::optional<Component> explicit_D = std::nullopt);

    const Component& f1() const { return f1_; }
    const Component& f2() const { return f2_; }
    bool symbolic() const { return is_symbolic(f1_) && is_symbolic(f2_); }

    /// Throws SymbolicRequired when the component is sampled.
    const FormExpr& f1_expr() const;
    const FormExpr& f2_expr() const;

    const std::optional<Component>& explicit_D() const { return explicit_D_; }

    OneForm scaled(Complex c) const;
    OneForm operator+(const OneForm& o) const;

private:
    Component f1_;
    Component f2_;
    std::optional<Component> explicit_D_;
};

/// df1/dzbar2 - df2/dzbar1; the zero expression iff f is closed.
/// Throws SymbolicRequired when a component is sampled.
FormExpr closedness_defect(const OneForm& f);

/// Exact closedness test for symbolic forms.
inline bool is_closed(const OneForm& f) {
    return closedness_defect(f).is_zero();
}

/// The cross-derivative (1/2)(df1/dzbar2 + df2/dzbar1). Symbolic forms are
/// differentiated exactly; sampled forms require explicit_D
/// (MissingDerivativeData otherwise).
Component mixed_derivative(const OneForm& f);

/// Central-difference conjugate Wirtinger derivative
/// (1/2)(du/dx + i du/dy) of a pointwise map, in the chosen variable.
Complex fd_dbar(const std::function<Complex(Complex, Complex)>& g, Complex z1,
                Complex z2, Var v, double h);

/// Central finite-difference cross derivative for sampled data; pass the
/// result as explicit_D when no analytic derivative is available. Accuracy
/// is O(h^2) at best and limited by evaluator noise.
SampledFunction finite_difference_mixed_derivative(const OneForm& f, double h);

}  // namespace dbar

#endif
