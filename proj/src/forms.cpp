#include "dbar/forms.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace dbar {

namespace {

auto key(const MonomialTerm& t) {
    return std::tuple(t.p1, t.q1, t.p2, t.q2);
}

std::vector<MonomialTerm> canonicalize(std::vector<MonomialTerm> terms) {
    for (const MonomialTerm& t : terms) {
        if (t.p1 < 0 || t.q1 < 0 || t.q2 < 0)
            throw Error("monomial exponents p1, q1, q2 must be nonnegative");
    }
    std::sort(terms.begin(), terms.end(),
              [](const MonomialTerm& a, const MonomialTerm& b) {
                  return key(a) < key(b);
              });
    std::vector<MonomialTerm> out;
    out.reserve(terms.size());
    for (const MonomialTerm& t : terms) {
        if (!out.empty() && key(out.back()) == key(t))
            out.back().coef += t.coef;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const MonomialTerm& t) {
        return std::abs(t.coef) < kCoefPrune;
    });
    return out;
}

}  // namespace

FormExpr::FormExpr(std::vector<MonomialTerm> terms)
    : terms_(canonicalize(std::move(terms))) {}

FormExpr FormExpr::monomial(Complex coef, int p1, int q1, int p2, int q2) {
    return FormExpr({MonomialTerm{coef, p1, q1, p2, q2}});
}

bool FormExpr::has_laurent() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const MonomialTerm& t) { return t.p2 < 0; });
}

Complex FormExpr::eval(Complex z1, Complex z2) const {
    Complex acc = 0.0;
    const Complex z1c = std::conj(z1), z2c = std::conj(z2);
    for (const MonomialTerm& t : terms_) {
        if (t.p2 < 0 && z2 == Complex(0.0, 0.0))
            throw LaurentPole("Laurent term evaluated at z2 = 0");
        acc += t.coef * ipow(z1, t.p1) * ipow(z1c, t.q1) * ipow(z2, t.p2) *
               ipow(z2c, t.q2);
    }
    return acc;
}

FormExpr FormExpr::dbar(Var v) const {
    std::vector<MonomialTerm> out;
    out.reserve(terms_.size());
    for (const MonomialTerm& t : terms_) {
        if (v == Var::z1) {
            if (t.q1 > 0)
                out.push_back({t.coef * double(t.q1), t.p1, t.q1 - 1, t.p2, t.q2});
        } else {
            if (t.q2 > 0)
                out.push_back({t.coef * double(t.q2), t.p1, t.q1, t.p2, t.q2 - 1});
        }
    }
    return FormExpr(std::move(out));
}

FormExpr FormExpr::operator-() const { return scaled(-1.0); }

FormExpr FormExpr::operator+(const FormExpr& o) const {
    std::vector<MonomialTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return FormExpr(std::move(all));
}

FormExpr FormExpr::operator-(const FormExpr& o) const { return *this + (-o); }

FormExpr FormExpr::operator*(const FormExpr& o) const {
    std::vector<MonomialTerm> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const MonomialTerm& a : terms_)
        for (const MonomialTerm& b : o.terms_)
            prod.push_back({a.coef * b.coef, a.p1 + b.p1, a.q1 + b.q1,
                            a.p2 + b.p2, a.q2 + b.q2});
    return FormExpr(std::move(prod));
}

FormExpr FormExpr::scaled(Complex c) const {
    std::vector<MonomialTerm> out = terms_;
    for (MonomialTerm& t : out) t.coef *= c;
    return FormExpr(std::move(out));
}

bool FormExpr::operator==(const FormExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (key(terms_[i]) != key(o.terms_[i])) return false;
        if (terms_[i].coef != o.terms_[i].coef) return false;
    }
    return true;
}

OneForm::OneForm(FormExpr f1, FormExpr f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {}

OneForm::OneForm(Component f1, Component f2, std::optional<Component> explicit_D)
    : f1_(std::move(f1)), f2_(std::move(f2)), explicit_D_(std::move(explicit_D)) {
    if (symbolic() && explicit_D_) {
        if (!is_symbolic(*explicit_D_))
            throw Error("explicit_D must be symbolic for a symbolic form");
        const FormExpr exact =
            std::get<FormExpr>(f1_).dbar(Var::z2)
                .operator+(std::get<FormExpr>(f2_).dbar(Var::z1))
                .scaled(0.5);
        if (!(std::get<FormExpr>(*explicit_D_) == exact))
            throw Error("explicit_D disagrees with the exact cross derivative");
    }
}

const FormExpr& OneForm::f1_expr() const {
    if (const auto* e = std::get_if<FormExpr>(&f1_)) return *e;
    throw SymbolicRequired("f1 is sampled");
}

const FormExpr& OneForm::f2_expr() const {
    if (const auto* e = std::get_if<FormExpr>(&f2_)) return *e;
    throw SymbolicRequired("f2 is sampled");
}

OneForm OneForm::scaled(Complex c) const {
    auto scale_component = [&](const Component& comp) -> Component {
        if (const auto* e = std::get_if<FormExpr>(&comp)) return e->scaled(c);
        const SampledFunction& s = std::get<SampledFunction>(comp);
        auto ev = s.evaluator;
        return SampledFunction{[ev, c](Complex a, Complex b) { return c * ev(a, b); },
                               s.smoothness};
    };
    std::optional<Component> d;
    if (explicit_D_) d = scale_component(*explicit_D_);
    OneForm out(scale_component(f1_), scale_component(f2_));
    out.explicit_D_ = std::move(d);
    return out;
}

OneForm OneForm::operator+(const OneForm& o) const {
    if (symbolic() && o.symbolic())
        return OneForm(f1_expr() + o.f1_expr(), f2_expr() + o.f2_expr());
    auto add_component = [](const Component& a, const Component& b) -> Component {
        auto ea = [a](Complex x, Complex y) { return eval_component(a, x, y); };
        auto eb = [b](Complex x, Complex y) { return eval_component(b, x, y); };
        return SampledFunction{
            [ea, eb](Complex x, Complex y) { return ea(x, y) + eb(x, y); }};
    };
    OneForm out(add_component(f1_, o.f1_), add_component(f2_, o.f2_));
    if (explicit_D_ && o.explicit_D_)
        out.explicit_D_ = add_component(*explicit_D_, *o.explicit_D_);
    return out;
}

FormExpr closedness_defect(const OneForm& f) {
    return f.f1_expr().dbar(Var::z2) - f.f2_expr().dbar(Var::z1);
}

Component mixed_derivative(const OneForm& f) {
    if (f.symbolic()) {
        return f.f1_expr().dbar(Var::z2)
            .operator+(f.f2_expr().dbar(Var::z1))
            .scaled(0.5);
    }
    if (f.explicit_D()) return *f.explicit_D();
    throw MissingDerivativeData(
        "sampled form without explicit cross derivative");
}

Complex fd_dbar(const std::function<Complex(Complex, Complex)>& g, Complex z1,
                Complex z2, Var v, double h) {
    const Complex re(h, 0.0), im(0.0, h);
    Complex ux, uy;
    if (v == Var::z1) {
        ux = (g(z1 + re, z2) - g(z1 - re, z2)) / (2.0 * h);
        uy = (g(z1 + im, z2) - g(z1 - im, z2)) / (2.0 * h);
    } else {
        ux = (g(z1, z2 + re) - g(z1, z2 - re)) / (2.0 * h);
        uy = (g(z1, z2 + im) - g(z1, z2 - im)) / (2.0 * h);
    }
    return 0.5 * (ux + Complex(0.0, 1.0) * uy);
}

SampledFunction finite_difference_mixed_derivative(const OneForm& f, double h) {
    if (!(h > 0.0)) throw Error("step must be positive");
    const Component f1 = f.f1();
    const Component f2 = f.f2();
    return SampledFunction{
        [f1, f2, h](Complex z1, Complex z2) {
            auto e1 = [&f1](Complex a, Complex b) { return eval_component(f1, a, b); };
            auto e2 = [&f2](Complex a, Complex b) { return eval_component(f2, a, b); };
            return 0.5 * (fd_dbar(e1, z1, z2, Var::z2, h) +
                          fd_dbar(e2, z1, z2, Var::z1, h));
        },
        SampledFunction::Smoothness::C0};
}

}  // namespace dbar
