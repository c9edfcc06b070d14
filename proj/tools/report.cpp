#include "report.hpp"

namespace pealab::report {

json rational_vector(const RationalVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json labels(const FiniteTable& table, const std::vector<ElementId>& ids) {
  json a = json::array();
  for (auto id : ids) a.push_back(table.label(id));
  return a;
}

json axioms(const FiniteTable& table, const AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    json w = json::array();
    for (auto id : x.witness) w.push_back(id < table.size() ? table.label(id) : std::to_string(id));
    v.push_back({{"axiom", x.axiom}, {"witness", w}, {"detail", x.detail}});
  }
  return {{"passed", r.passed()}, {"violations", v}};
}

json pmv_axioms(const PmvTable& t, const AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    json w = json::array();
    for (auto id : x.witness) w.push_back(id < t.size() ? t.label(id) : std::to_string(id));
    v.push_back({{"axiom", x.axiom}, {"witness", w}, {"detail", x.detail}});
  }
  return {{"passed", r.passed()}, {"violations", v}};
}

json riesz(const FiniteTable& table, const RieszReport& r) {
  json out = json::object();
  for (auto p : kRieszLadder) {
    const auto& res = r.get(p);
    json w = json::array();
    for (const auto& x : res.witnesses) {
      w.push_back({{"tuple", labels(table, x.tuple)}, {"refinements", x.refinements}});
    }
    out[std::string(to_string(p))] = {{"holds", res.holds}, {"witnesses", w}};
  }
  out["ladder_consistent"] = r.ladder_consistent();
  return out;
}

json state_space(const StatePolytope& p) {
  json v = json::array();
  for (const auto& s : p.vertices) v.push_back(rational_vector(s.values));
  return {{"empty", p.empty}, {"dim", p.affine_dim}, {"vertices", v}, {"class", to_string(classify(p).kind)}};
}

json measure(const DiscreteMeasure& m) {
  json atoms = json::array();
  for (std::size_t i = 0; i < m.support.size(); ++i) {
    atoms.push_back({{"state", rational_vector(m.support[i].values)}, {"weight", to_string(m.weights[i])}});
  }
  return {{"atoms", atoms}};
}

json representing(const RepresentingMeasures& r) {
  json out = {{"primary", measure(r.primary)}, {"unique_certified", r.unique_certified}, {"note", r.note}};
  out["second"] = r.second ? measure(*r.second) : json(nullptr);
  return out;
}

json group_element(const GroupElement& g) { return json(g.coords); }

}  // namespace pealab::report
