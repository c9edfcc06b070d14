#include "pealab/pogroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pealab/error.hpp"
#include "pealab/linalg.hpp"

namespace pealab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_rank(const PoGroupPresentation& g, const GroupElement& x) {
  if (x.rank() != g.rank()) {
    throw StructuralError("element " + to_string(x) + " has rank " + std::to_string(x.rank()) +
                          ", presentation expects " + std::to_string(g.rank()));
  }
}

Coordinates tail(const Coordinates& c) { return Coordinates(c.begin() + 1, c.end()); }

Coordinates prepend(std::int64_t head, const Coordinates& rest) {
  Coordinates out;
  out.reserve(rest.size() + 1);
  out.push_back(head);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool lex_positive(const Coordinates& c) {
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (*it != 0) return *it > 0;
  }
  return true;
}

// Bounded search for x = Σ c_r·rows[r] with 0 ≤ c_r ≤ cap.
bool combination_search(const std::vector<Coordinates>& rows, std::size_t r, Coordinates& rest,
                        const std::vector<int>& caps) {
  if (r == rows.size()) {
    return std::all_of(rest.begin(), rest.end(), [](std::int64_t v) { return v == 0; });
  }
  const Coordinates& row = rows[r];
  bool found = false;
  int used = 0;
  for (int c = 0; c <= caps[r] && !found; ++c) {
    if (c > 0) {
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= row[j];
      used = c;
    }
    found = combination_search(rows, r + 1, rest, caps);
  }
  for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += used * row[j];
  return found;
}

Membership polyhedral_membership(const PolyhedralCone& cone, const Coordinates& x) {
  if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) return Membership::Yes;
  if (cone.rows.empty()) return Membership::No;

  // With nonnegative rows every coefficient is bounded by the target, which
  // makes a failed search a proof of non-membership.
  const bool nonnegative_rows = std::all_of(cone.rows.begin(), cone.rows.end(), [](const Coordinates& r) {
    return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v >= 0; }) &&
           std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v > 0; });
  });
  bool complete = nonnegative_rows;
  std::vector<int> caps(cone.rows.size(), kPolyhedralCoefficientCap);
  if (nonnegative_rows) {
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v < 0; })) return Membership::No;
    for (std::size_t r = 0; r < cone.rows.size(); ++r) {
      std::int64_t bound = INT64_MAX;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (cone.rows[r][j] > 0) bound = std::min(bound, x[j] / cone.rows[r][j]);
      }
      if (bound > kPolyhedralCoefficientCap) {
        complete = false;
      } else {
        caps[r] = static_cast<int>(bound);
      }
    }
  }
  Coordinates rest = x;
  if (combination_search(cone.rows, 0, rest, caps)) return Membership::Yes;
  return complete ? Membership::No : Membership::Unknown;
}

}  // namespace

std::string to_string(const GroupElement& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.coords[i]);
  }
  return out + ")";
}

Matrix2 Matrix2::power(std::int64_t n) const {
  Matrix2 base = *this;
  if (n < 0) {
    const std::int64_t d = det();
    if (d != 1 && d != -1) throw StructuralError("negative power of a non-unimodular matrix");
    base.m = {d * m[3], -d * m[1], -d * m[2], d * m[0]};
    n = -n;
  }
  Matrix2 result;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& a = result.m;
    const auto& b = base.m;
    result.m = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3]};
  }
  return result;
}

PoGroupPresentation PoGroupPresentation::free_abelian(std::size_t rank, FreeAbelianCone cone,
                                                      std::string label) {
  if (const auto* poly = std::get_if<PolyhedralCone>(&cone)) {
    for (const auto& row : poly->rows) {
      if (row.size() != rank) throw StructuralError("polyhedral generator row has wrong length");
    }
  }
  return PoGroupPresentation(FreeAbelian{rank, std::move(cone)}, std::move(label));
}

PoGroupPresentation PoGroupPresentation::lex_z(PoGroupPresentation inner, std::string label) {
  return PoGroupPresentation(LexZ{std::make_shared<const PoGroupPresentation>(std::move(inner))},
                             std::move(label));
}

PoGroupPresentation PoGroupPresentation::semidirect(Matrix2 action, std::string label) {
  const auto d = action.det();
  if (d != 1 && d != -1) throw StructuralError("semidirect action must be unimodular");
  // An automorphism of ℤ² keeps the lex cone iff it is [[1,b],[0,1]].
  if (action.m[2] != 0 || action.m[0] != 1 || action.m[3] != 1) {
    throw StructuralError("semidirect action must preserve the lex cone of Z^2 (shape [[1,b],[0,1]])");
  }
  return PoGroupPresentation(Semidirect{action}, std::move(label));
}

std::size_t PoGroupPresentation::rank() const {
  return std::visit(overloaded{[](const FreeAbelian& f) { return f.rank; },
                               [](const LexZ& l) { return 1 + l.inner->rank(); },
                               [](const Semidirect&) { return std::size_t{3}; }},
                    variant_);
}

bool PoGroupPresentation::is_abelian() const {
  return std::visit(overloaded{[](const FreeAbelian&) { return true; },
                               [](const LexZ& l) { return l.inner->is_abelian(); },
                               [](const Semidirect& s) { return s.action == Matrix2{}; }},
                    variant_);
}

bool PoGroupPresentation::is_standard() const {
  const auto* f = std::get_if<FreeAbelian>(&variant_);
  return f && std::holds_alternative<StandardCone>(f->cone);
}

Membership cone_membership(const PoGroupPresentation& g, const GroupElement& x) {
  require_rank(g, x);
  const Coordinates& c = x.coords;
  return std::visit(
      overloaded{
          [&](const PoGroupPresentation::FreeAbelian& f) {
            return std::visit(
                overloaded{[&](const StandardCone&) {
                             return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v >= 0; })
                                        ? Membership::Yes
                                        : Membership::No;
                           },
                           [&](const LexCone&) { return lex_positive(c) ? Membership::Yes : Membership::No; },
                           [&](const PolyhedralCone& p) { return polyhedral_membership(p, c); }},
                f.cone);
          },
          [&](const PoGroupPresentation::LexZ& l) {
            if (c[0] != 0) return c[0] > 0 ? Membership::Yes : Membership::No;
            return cone_membership(*l.inner, GroupElement{tail(c)});
          },
          [&](const PoGroupPresentation::Semidirect&) {
            if (c[0] != 0) return c[0] > 0 ? Membership::Yes : Membership::No;
            return lex_positive(tail(c)) ? Membership::Yes : Membership::No;
          }},
      g.variant());
}

bool cone_contains(const PoGroupPresentation& g, const GroupElement& x) {
  switch (cone_membership(g, x)) {
    case Membership::Yes:
      return true;
    case Membership::No:
      return false;
    case Membership::Unknown:
      break;
  }
  throw Undecided("cone membership of " + to_string(x) + " undecided within coefficient cap " +
                  std::to_string(kPolyhedralCoefficientCap));
}

bool group_leq(const PoGroupPresentation& g, const GroupElement& x, const GroupElement& y) {
  return cone_contains(g, add(g, neg(g, x), y));
}

GroupElement zero_element(const PoGroupPresentation& g) { return {Coordinates(g.rank(), 0)}; }

GroupElement unit_vector(const PoGroupPresentation& g, std::size_t i) {
  GroupElement e = zero_element(g);
  e.coords.at(i) = 1;
  return e;
}

GroupElement add(const PoGroupPresentation& g, const GroupElement& x, const GroupElement& y) {
  require_rank(g, x);
  require_rank(g, y);
  return std::visit(
      overloaded{[&](const PoGroupPresentation::FreeAbelian&) {
                   GroupElement out = x;
                   for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
                   return out;
                 },
                 [&](const PoGroupPresentation::LexZ& l) {
                   const GroupElement inner = add(*l.inner, {tail(x.coords)}, {tail(y.coords)});
                   return GroupElement{prepend(x.coords[0] + y.coords[0], inner.coords)};
                 },
                 [&](const PoGroupPresentation::Semidirect& s) {
                   const auto v = s.action.power(-y.coords[0]).apply(x.coords[1], x.coords[2]);
                   return GroupElement{
                       {x.coords[0] + y.coords[0], v[0] + y.coords[1], v[1] + y.coords[2]}};
                 }},
      g.variant());
}

GroupElement neg(const PoGroupPresentation& g, const GroupElement& x) {
  require_rank(g, x);
  return std::visit(overloaded{[&](const PoGroupPresentation::FreeAbelian&) {
                                 GroupElement out = x;
                                 for (auto& v : out.coords) v = -v;
                                 return out;
                               },
                               [&](const PoGroupPresentation::LexZ& l) {
                                 const GroupElement inner = neg(*l.inner, {tail(x.coords)});
                                 return GroupElement{prepend(-x.coords[0], inner.coords)};
                               },
                               [&](const PoGroupPresentation::Semidirect& s) {
                                 const auto v = s.action.power(x.coords[0]).apply(x.coords[1], x.coords[2]);
                                 return GroupElement{{-x.coords[0], -v[0], -v[1]}};
                               }},
                    g.variant());
}

GroupElement conjugate(const PoGroupPresentation& g, const GroupElement& x, const GroupElement& by) {
  return add(g, add(g, neg(g, by), x), by);
}

GroupElement multiple(const PoGroupPresentation& g, const GroupElement& x, std::int64_t n) {
  const GroupElement step = n < 0 ? neg(g, x) : x;
  GroupElement acc = zero_element(g);
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = add(g, acc, step);
  return acc;
}

std::vector<GroupElement> window_elements(const PoGroupPresentation& g, int radius) {
  if (radius < 0) throw StructuralError("negative window radius");
  const std::size_t rank = g.rank();
  std::vector<GroupElement> out;
  Coordinates c(rank, -radius);
  for (;;) {
    out.push_back({c});
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (c[i] < radius) {
        ++c[i];
        break;
      }
      c[i] = -radius;
      if (i == 0) return out;
    }
    if (rank == 0) return out;
  }
}

PresentationCheck check_presentation(const PoGroupPresentation& g, int radius) {
  PresentationCheck check;
  const auto window = window_elements(g, radius);
  const GroupElement zero = zero_element(g);

  std::vector<GroupElement> positive;
  for (const auto& x : window) {
    if (cone_membership(g, x) == Membership::Yes) positive.push_back(x);
  }
  for (const auto& x : positive) {
    if (x != zero && cone_membership(g, neg(g, x)) == Membership::Yes) {
      check.strict = false;
      check.problems.push_back("cone not strict: " + to_string(x) + " and its negative are positive");
      break;
    }
  }
  if (!g.is_abelian()) {
    for (const auto& x : positive) {
      for (const auto& b : window) {
        if (cone_membership(g, conjugate(g, x, b)) != Membership::Yes) {
          check.normal = false;
          check.problems.push_back("cone not normal: conjugate of " + to_string(x) + " by " +
                                   to_string(b) + " leaves the cone");
          break;
        }
      }
      if (!check.normal) break;
    }
  }
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const GroupElement e = unit_vector(g, i);
    const bool expressible = std::any_of(positive.begin(), positive.end(), [&](const GroupElement& q) {
      return cone_membership(g, add(g, e, q)) == Membership::Yes;
    });
    if (!expressible) {
      check.directed = false;
      check.problems.push_back("generator " + to_string(e) + " is not a difference of window positives");
    }
  }
  return check;
}

StrongUnit check_strong_unit(const PoGroupPresentation& g, const GroupElement& u, int window_radius,
                             int cap) {
  if (!cone_contains(g, u)) throw NotStrongUnit(to_string(u) + " is not positive");
  std::vector<GroupElement> multiples;
  multiples.reserve(static_cast<std::size_t>(cap));
  GroupElement acc = u;
  for (int n = 1; n <= cap; ++n) {
    multiples.push_back(acc);
    acc = add(g, acc, u);
  }
  auto least_bound = [&](const GroupElement& x) -> int {
    for (int n = 1; n <= cap; ++n) {
      if (cone_membership(g, add(g, neg(g, x), multiples[n - 1])) == Membership::Yes) return n;
    }
    return 0;
  };

  StrongUnit out{u, {}};
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (const GroupElement& x : {unit_vector(g, i), neg(g, unit_vector(g, i))}) {
      const int n = least_bound(x);
      if (n == 0) {
        throw NotStrongUnit(to_string(u) + " does not dominate " + to_string(x) + " within n <= " +
                            std::to_string(cap));
      }
      out.bounds.emplace_back(x, n);
    }
  }
  for (const auto& x : window_elements(g, window_radius)) {
    if (least_bound(x) == 0) {
      throw NotStrongUnit(to_string(u) + " does not dominate window element " + to_string(x) +
                          " within n <= " + std::to_string(cap));
    }
  }
  return out;
}

const FiniteRealization& IntervalAlgebra::finite() const {
  if (const auto* f = std::get_if<FiniteRealization>(&realization_)) return *f;
  throw NotApplicable("interval is not finitely realized");
}

const LazyRealization& IntervalAlgebra::lazy() const {
  if (const auto* l = std::get_if<LazyRealization>(&realization_)) return *l;
  throw NotApplicable("interval is finitely realized");
}

bool IntervalAlgebra::contains(const GroupElement& x) const {
  return cone_membership(group_, x) == Membership::Yes &&
         cone_membership(group_, add(group_, neg(group_, x), unit_)) == Membership::Yes;
}

namespace {

std::vector<std::string> labels_for(const std::vector<GroupElement>& elements) {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& e : elements) {
    labels.push_back(e.rank() == 1 ? std::to_string(e.coords[0]) : to_string(e));
  }
  return labels;
}

// Zero first, then lexicographic by coordinates.
void canonical_order(std::vector<GroupElement>& elements, const GroupElement& zero) {
  std::sort(elements.begin(), elements.end(), [&](const GroupElement& a, const GroupElement& b) {
    if ((a == zero) != (b == zero)) return a == zero;
    return a < b;
  });
}

struct PartialTable {
  FiniteTable table;
  std::vector<std::pair<ElementId, ElementId>> unknown;
};

PartialTable interval_table(const IntervalAlgebra& interval, const std::vector<GroupElement>& elements,
                            std::string name) {
  const auto& g = interval.group();
  std::map<GroupElement, ElementId> ids;
  for (std::size_t i = 0; i < elements.size(); ++i) ids.emplace(elements[i], static_cast<ElementId>(i));
  PartialTable out{FiniteTable(elements.size(), ids.at(zero_element(g)), ids.at(interval.unit()),
                               labels_for(elements), std::move(name)),
                   {}};
  for (ElementId a = 0; a < elements.size(); ++a) {
    for (ElementId b = 0; b < elements.size(); ++b) {
      const GroupElement s = add(g, elements[a], elements[b]);
      if (!interval.contains(s)) continue;
      if (const auto it = ids.find(s); it != ids.end()) {
        out.table.set_sum(a, b, it->second);
      } else {
        out.unknown.emplace_back(a, b);
      }
    }
  }
  return out;
}

}  // namespace

IntervalAlgebra gamma_interval(const PoGroupPresentation& g, const GroupElement& u, std::size_t cap,
                               int unit_window) {
  check_strong_unit(g, u, unit_window);
  const IntervalAlgebra probe(g, u, LazyRealization{});

  std::vector<GroupElement> steps;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    steps.push_back(unit_vector(g, i));
    steps.push_back(neg(g, unit_vector(g, i)));
  }
  if (const auto* f = std::get_if<PoGroupPresentation::FreeAbelian>(&g.variant())) {
    if (const auto* p = std::get_if<PolyhedralCone>(&f->cone)) {
      for (const auto& r : p->rows) steps.push_back({r});
    }
  }

  const GroupElement zero = zero_element(g);
  std::set<GroupElement> seen{zero};
  std::deque<GroupElement> frontier{zero};
  while (!frontier.empty()) {
    const GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& step : steps) {
      GroupElement y = add(g, x, step);
      if (seen.count(y) || !probe.contains(y)) continue;
      seen.insert(y);
      if (seen.size() > cap) {
        return IntervalAlgebra(
            g, u,
            LazyRealization{seen.size(), "interval [0," + to_string(u) + "] has more than " +
                                             std::to_string(cap) +
                                             " elements and no finiteness certificate; using a lazy view"});
      }
      frontier.push_back(std::move(y));
    }
  }

  std::vector<GroupElement> elements(seen.begin(), seen.end());
  canonical_order(elements, zero);
  const std::string name = "gamma " + (g.label().empty() ? std::string("G") : g.label()) + " " + to_string(u);
  PartialTable pt = interval_table(probe, elements, name);
  const AxiomReport report = validate_axioms(pt.table);
  if (!report.passed()) {
    throw ConstructionMismatch("interval table fails axiom (" + report.violations.front().axiom +
                               "): " + report.violations.front().detail);
  }
  return IntervalAlgebra(g, u, FiniteRealization{std::move(pt.table), std::move(elements)});
}

bool WindowTable::is_unknown(ElementId a, ElementId b) const {
  return std::find(unknown.begin(), unknown.end(), std::pair{a, b}) != unknown.end();
}

WindowTable window_table(const IntervalAlgebra& interval, int radius) {
  if (radius < 1) throw NotApplicable("window radius must be at least 1");
  const auto& g = interval.group();
  const GroupElement& u = interval.unit();

  std::set<GroupElement> members;
  for (auto& x : window_elements(g, radius)) {
    if (interval.contains(x)) members.insert(std::move(x));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = members.begin(); it != members.end();) {
      const GroupElement minus = add(g, u, neg(g, *it));
      const GroupElement tilde = add(g, neg(g, *it), u);
      if (!members.count(minus) || !members.count(tilde)) {
        it = members.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  if (!members.count(zero_element(g)) || !members.count(u)) {
    throw WindowTooSmall("window of radius " + std::to_string(radius) + " does not contain 0 and u");
  }

  std::vector<GroupElement> elements(members.begin(), members.end());
  canonical_order(elements, zero_element(g));
  PartialTable pt = interval_table(interval, elements, "window r=" + std::to_string(radius));
  return WindowTable{std::move(pt.table), std::move(elements), std::move(pt.unknown), radius};
}

Rational GroupState::operator()(const GroupElement& x) const {
  if (x.rank() != generator_values.size()) throw StructuralError("group state rank mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x.coords[i] != 0) acc += generator_values[i] * Rational(static_cast<long>(x.coords[i]));
  }
  return acc;
}

GroupState extend_state(const IntervalAlgebra& interval, const StateVector& s) {
  const auto& g = interval.group();
  if (!g.is_abelian()) throw NotApplicable("state extension implemented for abelian presentations");
  const FiniteRealization& fin = interval.finite();
  validate_state(fin.table, s);

  const std::size_t rank = g.rank();
  linalg::Matrix a;
  RationalVector b;
  for (ElementId i = 0; i < fin.elements.size(); ++i) {
    RationalVector row;
    for (auto c : fin.elements[i].coords) row.emplace_back(static_cast<long>(c));
    a.push_back(std::move(row));
    b.push_back(s[i]);
  }
  const auto sol = linalg::solve_affine(a, b, rank);
  if (!sol) throw InvalidState("no group homomorphism restricts to this state");
  if (!sol->kernel.empty()) throw NotApplicable("interval does not determine the generator values");
  GroupState gs{sol->particular};

  // Each cone element x = a + b with a, b in the interval: ŝ(x) must not
  // depend on the decomposition.
  std::map<GroupElement, std::pair<Rational, std::pair<ElementId, ElementId>>> seen;
  for (ElementId i = 0; i < fin.elements.size(); ++i) {
    for (ElementId j = 0; j < fin.elements.size(); ++j) {
      const GroupElement x = add(g, fin.elements[i], fin.elements[j]);
      const Rational value = s[i] + s[j];
      const auto [it, inserted] = seen.try_emplace(x, value, std::pair{i, j});
      if (!inserted && it->second.first != value) {
        throw ConsistencyError("decompositions of " + to_string(x) + " disagree (" +
                               fin.table.label(it->second.second.first) + "+" +
                               fin.table.label(it->second.second.second) + " vs " + fin.table.label(i) +
                               "+" + fin.table.label(j) + "): group lacks RDP on the tested window");
      }
      if (gs(x) != value) {
        throw ConsistencyError("additive extension disagrees with the solved homomorphism at " + to_string(x));
      }
    }
  }
  return gs;
}

StateVector restrict_state(const GroupState& gs, const IntervalAlgebra& interval, int window_radius) {
  const auto& g = interval.group();
  if (gs.generator_values.size() != g.rank()) throw StructuralError("group state rank mismatch");
  for (const auto& x : window_elements(g, window_radius)) {
    if (cone_membership(g, x) == Membership::Yes && gs(x) < 0) {
      throw InvalidState("group state is negative at positive element " + to_string(x));
    }
  }
  if (gs(interval.unit()) != 1) throw InvalidState("group state is not normalized at the unit");
  const FiniteRealization& fin = interval.finite();
  StateVector s;
  s.values.reserve(fin.elements.size());
  for (const auto& e : fin.elements) s.values.push_back(gs(e));
  validate_state(fin.table, s);
  return s;
}

}  // namespace pealab
