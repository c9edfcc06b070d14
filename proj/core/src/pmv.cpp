#include "pealab/pmv.hpp"

#include <algorithm>

#include "pealab/error.hpp"
#include "pealab/riesz.hpp"

namespace pealab {

PmvTable::PmvTable(std::size_t size, ElementId zero, ElementId one, std::vector<std::string> labels,
                   std::string name)
    : size_(size),
      zero_(zero),
      one_(one),
      oplus_(size * size, zero),
      minus_(size, zero),
      tilde_(size, zero),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (size < 2 || zero >= size || one >= size || zero == one) {
    throw StructuralError("pseudo MV carrier needs distinct 0 and 1 in range");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < size; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != size) throw StructuralError("label count does not match carrier size");
}

void PmvTable::check(ElementId x) const {
  if (x >= size_) throw StructuralError("element id " + std::to_string(x) + " out of range");
}

void PmvTable::set_oplus(ElementId x, ElementId y, ElementId z) {
  check(x);
  check(y);
  check(z);
  oplus_[x * size_ + y] = z;
}

void PmvTable::set_minus(ElementId x, ElementId v) {
  check(x);
  check(v);
  minus_[x] = v;
}

void PmvTable::set_tilde(ElementId x, ElementId v) {
  check(x);
  check(v);
  tilde_[x] = v;
}

AxiomReport validate_pmv(const PmvTable& t, bool fail_fast) {
  const auto n = static_cast<ElementId>(t.size());
  if (n < 2 || t.zero() >= n || t.one() >= n || t.zero() == t.one()) {
    throw StructuralError("pseudo MV carrier needs distinct 0 and 1 in range");
  }
  const ElementId o = t.zero();
  const ElementId u = t.one();
  AxiomReport report;
  auto fail = [&](std::string axiom, std::vector<ElementId> w, std::string detail) {
    const bool seen = std::any_of(report.violations.begin(), report.violations.end(),
                                  [&](const AxiomViolation& v) { return v.axiom == axiom; });
    if (!seen) report.violations.push_back({std::move(axiom), std::move(w), std::move(detail)});
  };
  auto stop = [&] { return fail_fast && !report.passed(); };

  for (ElementId x = 0; x < n && !stop(); ++x) {
    if (t.oplus(x, o) != x || t.oplus(o, x) != x) fail("A2", {x}, "x ⊕ 0 = 0 ⊕ x = x fails");
    if (t.oplus(x, u) != u || t.oplus(u, x) != u) fail("A3", {x}, "x ⊕ 1 = 1 ⊕ x = 1 fails");
    if (t.tilde(t.minus(x)) != x) fail("A8", {x}, "(x⁻)˜ = x fails");
  }
  if (t.tilde(u) != o || t.minus(u) != o) fail("A4", {u}, "1˜ = 1⁻ = 0 fails");
  for (ElementId x = 0; x < n && !stop(); ++x) {
    for (ElementId y = 0; y < n && !stop(); ++y) {
      if (t.tilde(t.oplus(t.minus(x), t.minus(y))) != t.minus(t.oplus(t.tilde(x), t.tilde(y)))) {
        fail("A5", {x, y}, "(x⁻ ⊕ y⁻)˜ = (x˜ ⊕ y˜)⁻ fails");
      }
      const ElementId a6a = t.oplus(x, t.odot(t.tilde(x), y));
      const ElementId a6b = t.oplus(y, t.odot(t.tilde(y), x));
      const ElementId a6c = t.oplus(t.odot(x, t.minus(y)), y);
      const ElementId a6d = t.oplus(t.odot(y, t.minus(x)), x);
      if (a6a != a6b || a6b != a6c || a6c != a6d) fail("A6", {x, y}, "the four A6 terms differ");
      if (t.odot(x, t.oplus(t.minus(x), y)) != t.odot(t.oplus(x, t.tilde(y)), y)) {
        fail("A7", {x, y}, "x ⊙ (x⁻ ⊕ y) = (x ⊕ y˜) ⊙ y fails");
      }
      for (ElementId z = 0; z < n; ++z) {
        if (t.oplus(x, t.oplus(y, z)) != t.oplus(t.oplus(x, y), z)) {
          fail("A1", {x, y, z}, "x ⊕ (y ⊕ z) = (x ⊕ y) ⊕ z fails");
          break;
        }
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const AxiomViolation& a, const AxiomViolation& b) { return a.axiom < b.axiom; });
  return report;
}

PmvTable gamma_lgroup(const std::vector<std::int64_t>& u) {
  if (u.empty()) throw StructuralError("unit must have at least one coordinate");
  for (auto c : u) {
    if (c <= 0) throw StructuralError("unit coordinates must be strictly positive");
  }
  const std::size_t rank = u.size();
  std::vector<std::vector<std::int64_t>> points{{}};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& p : points) {
      for (std::int64_t c = 0; c <= u[i]; ++c) {
        next.push_back(p);
        next.back().push_back(c);
      }
    }
    points = std::move(next);
  }
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (rank == 1) {
      labels.push_back(std::to_string(p[0]));
    } else {
      std::string s = "(";
      for (std::size_t i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(p[i]);
      labels.push_back(s + ")");
    }
  }
  auto id = [&](const std::vector<std::int64_t>& p) {
    return static_cast<ElementId>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
  };
  const auto one = static_cast<ElementId>(points.size() - 1);
  std::string name = "gamma-lgroup";
  for (auto c : u) name += "-" + std::to_string(c);
  PmvTable t(points.size(), 0, one, std::move(labels), name);
  for (const auto& x : points) {
    std::vector<std::int64_t> comp(rank);
    for (std::size_t i = 0; i < rank; ++i) comp[i] = u[i] - x[i];
    t.set_minus(id(x), id(comp));
    t.set_tilde(id(x), id(comp));
    for (const auto& y : points) {
      std::vector<std::int64_t> s(rank);
      for (std::size_t i = 0; i < rank; ++i) s[i] = std::min(x[i] + y[i], u[i]);
      t.set_oplus(id(x), id(y), id(s));
    }
  }
  return t;
}

PmvTable pea_to_pmv(const FiniteTable& table) {
  require_valid(table);
  if (!has_rdp2(table).holds) throw NotApplicable("pseudo MV conversion needs RDP₂");
  const auto order = derive_order(table);
  const auto n = static_cast<ElementId>(table.size());
  PmvTable t(n, table.zero(), table.one(), table.labels(), table.name());
  for (ElementId a = 0; a < n; ++a) {
    const auto c = complements(table, a);
    t.set_minus(a, c.minus);
    t.set_tilde(a, c.tilde);
    for (ElementId b = 0; b < n; ++b) {
      const auto m = partial_meet(order, c.tilde, b);
      if (!m) throw ConstructionMismatch("no meet of " + table.label(c.tilde) + " and " + table.label(b));
      const auto s = table.sum(a, *m);
      if (!s) {
        throw ConstructionMismatch(table.label(a) + " + (" + table.label(a) + "˜ ∧ " + table.label(b) +
                                   ") is undefined");
      }
      t.set_oplus(a, b, *s);
    }
  }
  const auto report = validate_pmv(t);
  if (!report.passed()) {
    const auto& v = report.violations.front();
    throw ConstructionMismatch("converted table violates " + v.axiom + ": " + v.detail);
  }
  return t;
}

std::vector<std::vector<bool>> pmv_order(const PmvTable& t) {
  const auto n = static_cast<ElementId>(t.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId z = 0; z < n; ++z) leq[x][t.oplus(x, z)] = true;
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (leq[x][y] != (t.oplus(t.minus(x), y) == t.one())) {
        throw ConsistencyError("order characterizations disagree at (" + t.label(x) + ", " + t.label(y) + ")");
      }
    }
  }
  return leq;
}

FiniteTable pmv_to_pea(const PmvTable& t) {
  const auto leq = pmv_order(t);
  const auto n = static_cast<ElementId>(t.size());
  FiniteTable table(n, t.zero(), t.one(), t.labels(), t.name());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (leq[a][t.minus(b)]) table.set_sum(a, b, t.oplus(a, b));
    }
  }
  const auto report = validate_axioms(table);
  if (!report.passed()) {
    throw ConstructionMismatch("partial table violates axiom (" + report.violations.front().axiom + ")");
  }
  if (!has_rdp2(table).holds) throw ConstructionMismatch("partial table lacks RDP₂");
  return table;
}

LinearSystem pmv_state_system(const PmvTable& t) {
  const std::size_t n = t.size();
  LinearSystem sys;
  sys.variables = n;
  auto unit = [&](std::size_t i, int v) {
    RationalVector r = zeros(n);
    r[i] = v;
    return r;
  };
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (t.odot(y, x) != t.zero()) continue;
      RationalVector row = zeros(n);
      row[x] += 1;
      row[y] += 1;
      row[t.oplus(x, y)] -= 1;
      sys.equalities.push_back({std::move(row), 0});
    }
  }
  sys.equalities.push_back({unit(t.zero(), 1), 0});
  sys.equalities.push_back({unit(t.one(), 1), 1});
  for (std::size_t a = 0; a < n; ++a) {
    sys.inequalities.push_back({unit(a, -1), 0});
    sys.inequalities.push_back({unit(a, 1), 1});
  }
  sys.deduplicate();
  return sys;
}

}  // namespace pealab
