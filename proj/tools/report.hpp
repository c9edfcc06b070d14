#pragma once

#include <nlohmann/json.hpp>

#include "pealab/homlattice.hpp"
#include "pealab/pea.hpp"
#include "pealab/pmv.hpp"
#include "pealab/riesz.hpp"
#include "pealab/statespace.hpp"

/// JSON fragments. Rationals are always "p/q" strings.
namespace pealab::report {

using nlohmann::json;

json rational_vector(const RationalVector& v);
json labels(const FiniteTable& table, const std::vector<ElementId>& ids);
json axioms(const FiniteTable& table, const AxiomReport& r);
json pmv_axioms(const PmvTable& t, const AxiomReport& r);
json riesz(const FiniteTable& table, const RieszReport& r);
json state_space(const StatePolytope& p);
json measure(const DiscreteMeasure& m);
json representing(const RepresentingMeasures& r);
json group_element(const GroupElement& g);

}  // namespace pealab::report
