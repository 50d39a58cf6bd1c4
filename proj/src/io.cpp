#include "dbar/io.hpp"

#include <cmath>
#include <ostream>

namespace dbar::io {

namespace {

Complex parse_complex_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw Error(std::string(what) + " must be a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

PlanarDomain parse_planar_domain(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const Complex center = j.contains("center")
                               ? parse_complex_pair(j["center"], "center")
                               : Complex(0.0, 0.0);
    const double r_outer = j.at("r_outer").get<double>();
    const double r_inner = j.value("r_inner", 0.0);
    if (kind == "disc") {
        if (r_inner != 0.0) throw Error("disc takes r_inner = 0");
        return PlanarDomain::disc(center, r_outer);
    }
    if (kind == "annulus") return PlanarDomain::annulus(center, r_inner, r_outer);
    if (kind == "punctured_disc") {
        if (r_inner != 0.0) throw Error("punctured_disc takes r_inner = 0");
        return PlanarDomain::punctured_disc(center, r_outer);
    }
    throw Error("unknown domain kind: " + kind);
}

ProductDomain parse_product_domain(const json& j) {
    return {parse_planar_domain(j.at("factor1")),
            parse_planar_domain(j.at("factor2"))};
}

FormExpr parse_terms(const json& arr) {
    if (!arr.is_array()) throw Error("form component must be a term array");
    std::vector<MonomialTerm> terms;
    terms.reserve(arr.size());
    for (const json& t : arr) {
        MonomialTerm m;
        m.coef = parse_complex_pair(t.at("coef"), "coef");
        m.p1 = t.at("p1").get<int>();
        m.q1 = t.at("q1").get<int>();
        m.p2 = t.at("p2").get<int>();
        m.q2 = t.at("q2").get<int>();
        if (m.p1 < 0 || m.q1 < 0 || m.q2 < 0)
            throw Error("exponents p1, q1, q2 must be nonnegative");
        terms.push_back(m);
    }
    return FormExpr(std::move(terms));
}

OneForm parse_one_form(const json& j, const ProductDomain& domain) {
    FormExpr f1 = parse_terms(j.at("f1"));
    FormExpr f2 = parse_terms(j.at("f2"));
    if ((f1.has_laurent() || f2.has_laurent()) &&
        domain.factor2.contains(Complex(0.0, 0.0)))
        throw Error("negative z2 powers need a domain excluding z2 = 0");
    return OneForm(std::move(f1), std::move(f2));
}

HartogsForm parse_hartogs_form(const json& j) {
    return {parse_terms(j.at("alpha1")), parse_terms(j.at("alpha2"))};
}

json to_json(const NormReport& r) {
    const char* kind = r.kind == NormKind::Lp
                           ? "Lp"
                           : (r.kind == NormKind::LpWeighted ? "Lp_weighted"
                                                             : "Banach_B");
    return json{{"kind", kind},
                {"p", r.p},
                {"weight_exp", r.weight_exp},
                {"value", r.value},
                {"est_error", r.est_error},
                {"nodes_used", r.nodes_used},
                {"truncation", r.truncation}};
}

json to_json(const ResidualReport& r) {
    return json{{"grid_n", r.grid_n},   {"h", r.h},
                {"max_err", r.max_err}, {"l2_err", r.l2_err},
                {"max_err_1", r.max_err_1}, {"max_err_2", r.max_err_2}};
}

json to_json(const HartogsReport& r) {
    json j{{"p", r.p},
           {"truncation", r.truncation},
           {"alpha1_norm_wm2", r.alpha1_wm2},
           {"alpha2_norm_wm2", r.alpha2_wm2},
           {"dbar1_alpha1_norm_wm1", r.d11_wm1},
           {"dbar2_alpha1_norm_wm1", r.d12_wm1},
           {"dbar1_alpha2_norm_wm1", r.d21_wm1},
           {"v_norm", r.v_norm}};
    if (r.ratio)
        j["ratio"] = *r.ratio;
    else
        j["ratio"] = nullptr;
    return j;
}

json to_json(const CounterexampleRow& r) {
    json j{{"L", r.L},
           {"g_norm_l1", r.g_norm_l1},
           {"tg_norm_l1", r.tg_norm_l1},
           {"ratio", r.ratio},
           {"harmonic", r.harmonic}};
    if (!std::isnan(r.g_norm_quad)) {
        j["g_norm_quad"] = r.g_norm_quad;
        j["tg_norm_quad"] = r.tg_norm_quad;
    }
    return j;
}

json to_json(const std::vector<CounterexampleRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

json to_json(const BoundReport& r) {
    json j{{"tf_norm", r.tf_norm},
           {"b_norm", r.b_norm},
           {"grid_per_factor", r.grid_per_factor}};
    if (r.ratio)
        j["ratio"] = *r.ratio;
    else
        j["ratio"] = nullptr;
    return j;
}

json to_json(const OracleSuiteReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back(json{{"name", c.name},
                             {"err_at_default", c.err_at_default},
                             {"order", c.order},
                             {"pass", c.pass}});
    return json{{"all_pass", r.all_pass}, {"cases", cases}};
}

void write_counterexample_csv(std::ostream& os,
                              const std::vector<CounterexampleRow>& rows) {
    os << "L,g_norm_l1,tg_norm_l1,ratio,harmonic,g_norm_quad,tg_norm_quad\n";
    for (const auto& r : rows) {
        os << r.L << ',' << r.g_norm_l1 << ',' << r.tg_norm_l1 << ','
           << r.ratio << ',' << r.harmonic << ',';
        if (std::isnan(r.g_norm_quad))
            os << ",";
        else
            os << r.g_norm_quad << ',' << r.tg_norm_quad;
        os << '\n';
    }
}

void write_grid_csv(std::ostream& os, const std::vector<Point2>& pts,
                    const std::vector<double>& values) {
    os << "re1,im1,re2,im2,value\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << pts[i].z1.real() << ',' << pts[i].z1.imag() << ','
           << pts[i].z2.real() << ',' << pts[i].z2.imag() << ',' << values[i]
           << '\n';
    }
}

}  // namespace dbar::io
