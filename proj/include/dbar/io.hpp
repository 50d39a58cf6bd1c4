#ifndef DBAR_IO_HPP
#define DBAR_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dbar/experiments.hpp"
#include "dbar/hartogs.hpp"

namespace dbar::io {

using nlohmann::json;

// Domain config: {"kind":"disc|annulus|punctured_disc","center":[re,im],
//                 "r_outer":x,"r_inner":y}
PlanarDomain parse_planar_domain(const json& j);

// Product config: {"factor1":{...},"factor2":{...}}
ProductDomain parse_product_domain(const json& j);

// Form spec: {"f1":[{"coef":[re,im],"p1":..,"q1":..,"p2":..,"q2":..},...],
//             "f2":[...]}. Rejects q1<0, q2<0, p1<0 always, and p2<0 when
// the second factor contains z2 = 0.
FormExpr parse_terms(const json& arr);
OneForm parse_one_form(const json& j, const ProductDomain& domain);

// Same term schema under keys "alpha1"/"alpha2"; negative z2 powers are
// permitted (the triangle excludes z2 = 0).
HartogsForm parse_hartogs_form(const json& j);

json to_json(const NormReport& r);
json to_json(const ResidualReport& r);
json to_json(const HartogsReport& r);
json to_json(const CounterexampleRow& r);
json to_json(const std::vector<CounterexampleRow>& rows);
json to_json(const BoundReport& r);
json to_json(const OracleSuiteReport& r);

void write_counterexample_csv(std::ostream& os,
                              const std::vector<CounterexampleRow>& rows);

// Heatmap/plot data rows: re1,im1,re2,im2,value
void write_grid_csv(std::ostream& os, const std::vector<Point2>& pts,
                    const std::vector<double>& values);

}  // namespace dbar::io

#endif
