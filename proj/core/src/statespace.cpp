#include "pealab/statespace.hpp"

#include <algorithm>

#include "pealab/error.hpp"
#include "pealab/linalg.hpp"

namespace pealab {

namespace {

RationalVector unit_row(std::size_t n, std::size_t i, const Rational& v) {
  RationalVector r = zeros(n);
  r[i] = v;
  return r;
}

bool superset(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

LinearSystem build_hrep(const FiniteTable& table) {
  const std::size_t n = table.size();
  LinearSystem sys;
  sys.variables = n;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const auto c = table.sum(a, b);
      if (!c) continue;
      RationalVector row = zeros(n);
      row[a] += 1;
      row[b] += 1;
      row[*c] -= 1;
      sys.equalities.push_back({std::move(row), 0});
    }
  }
  sys.equalities.push_back({unit_row(n, table.zero(), 1), 0});
  sys.equalities.push_back({unit_row(n, table.one(), 1), 1});
  for (std::size_t a = 0; a < n; ++a) {
    sys.inequalities.push_back({unit_row(n, a, -1), 0});
    sys.inequalities.push_back({unit_row(n, a, 1), 1});
  }
  sys.deduplicate();
  return sys;
}

std::optional<std::size_t> StatePolytope::vertex_index(const StateVector& s) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), s,
                                   [](const StateVector& x, const StateVector& y) { return x.values < y.values; });
  if (it == vertices.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

StatePolytope enumerate_states(const LinearSystem& system) {
  StatePolytope p;
  p.system = system;
  p.system.deduplicate();
  auto vr = enumerate_vertices(p.system);
  p.empty = vr.empty;
  p.affine_dim = vr.affine_dim;
  for (auto& v : vr.vertices) p.vertices.push_back(StateVector{std::move(v)});
  return p;
}

StatePolytope state_polytope(const FiniteTable& table) { return enumerate_states(build_hrep(table)); }

std::string to_string(SimplexClass c) {
  switch (c) {
    case SimplexClass::Empty:
      return "empty";
    case SimplexClass::Simplex:
      return "simplex";
    case SimplexClass::NonSimplex:
      return "non_simplex";
  }
  return "?";
}

Classification classify(const StatePolytope& p) {
  Classification c;
  c.vertex_count = p.vertices.size();
  c.affine_dim = p.affine_dim;
  if (p.empty) {
    c.kind = SimplexClass::Empty;
    c.note = "no states";
    return c;
  }
  if (c.vertex_count == static_cast<std::size_t>(p.affine_dim) + 1) {
    c.kind = SimplexClass::Simplex;
    c.choquet = c.bauer = true;
    c.note = "finite polytope: extreme set closed, simplex is Choquet and Bauer";
  } else {
    c.kind = SimplexClass::NonSimplex;
    c.note = "vertex count exceeds affine dimension + 1";
  }
  return c;
}

AffFunction constant_function(std::size_t variables, const Rational& c) { return {zeros(variables), c}; }

AffFunction evaluation_map(const FiniteTable& table, ElementId a) {
  if (a >= table.size()) throw StructuralError("element out of range");
  return {unit_row(table.size(), a, 1), 0};
}

Rational ConvexPLFunction::operator()(const StateVector& s) const {
  if (pieces.empty()) throw NotApplicable("convex function without pieces");
  Rational best = pieces.front()(s);
  for (std::size_t i = 1; i < pieces.size(); ++i) best = std::max(best, pieces[i](s));
  return best;
}

ConvexPLFunction random_convex_pl(RationalRng& rng, std::size_t variables, std::size_t max_pieces) {
  ConvexPLFunction f;
  const auto count = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(std::max<std::size_t>(1, max_pieces))));
  for (std::size_t k = 0; k < count; ++k) {
    AffFunction piece{zeros(variables), rng.signed_rational()};
    for (auto& c : piece.coeffs) c = rng.signed_rational();
    f.pieces.push_back(std::move(piece));
  }
  return f;
}

void DiscreteMeasure::canonicalize() {
  std::vector<std::pair<StateVector, Rational>> atoms;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (sgn(weights[i]) == 0) continue;
    auto it = std::find_if(atoms.begin(), atoms.end(), [&](const auto& a) { return a.first == support[i]; });
    if (it == atoms.end()) {
      atoms.emplace_back(support[i], weights[i]);
    } else {
      it->second += weights[i];
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& x, const auto& y) { return x.first.values < y.first.values; });
  support.clear();
  weights.clear();
  for (auto& [s, w] : atoms) {
    support.push_back(std::move(s));
    weights.push_back(std::move(w));
  }
}

StateVector DiscreteMeasure::barycenter() const {
  if (support.empty()) return {};
  StateVector b{zeros(support.front().size())};
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t a = 0; a < b.size(); ++a) b.values[a] += weights[i] * support[i].values[a];
  }
  return b;
}

bool DiscreteMeasure::is_probability() const {
  Rational total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  return total == 1;
}

DiscreteMeasure dirac(const StateVector& s) { return {{s}, {Rational(1)}}; }

DiscreteMeasure barycentric_decompose(const StatePolytope& p, const StateVector& s) {
  if (classify(p).kind != SimplexClass::Simplex) throw NotApplicable("barycentric decomposition needs a simplex");
  const std::size_t m = p.vertices.size();
  const std::size_t n = s.size();
  linalg::Matrix a(n + 1, RationalVector(m));
  RationalVector b(n + 1);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j < m; ++j) a[row][j] = p.vertices[j].values[row];
    b[row] = s.values[row];
  }
  for (std::size_t j = 0; j < m; ++j) a[n][j] = 1;
  b[n] = 1;
  const auto sol = linalg::solve_affine(a, b, m);
  if (!sol) throw InvalidState("state lies outside the affine hull of the state space");
  for (std::size_t j = 0; j < m; ++j) {
    if (sgn(sol->particular[j]) < 0) {
      throw InvalidState("state lies outside the state space: negative weight on vertex " + std::to_string(j));
    }
  }
  DiscreteMeasure mu{{p.vertices.begin(), p.vertices.end()}, sol->particular};
  mu.canonicalize();
  return mu;
}

DiscreteMeasure fan_decompose(const StatePolytope& p, const StateVector& s, std::size_t apex) {
  const std::size_t m = p.vertices.size();
  if (apex >= m) throw NotApplicable("fan apex out of range");
  if (!p.contains(s)) throw InvalidState("state lies outside the state space");
  std::vector<std::size_t> order{apex};
  for (std::size_t j = 0; j < m; ++j) {
    if (j != apex) order.push_back(j);
  }
  std::vector<std::vector<std::size_t>> vertex_tight;
  for (const auto& v : p.vertices) vertex_tight.push_back(p.system.tight(v.values));

  RationalVector weights = zeros(m);
  Rational mass = 1;
  RationalVector q = s.values;
  for (std::size_t step = 0; step <= m; ++step) {
    const auto t = p.system.tight(q);
    std::size_t pick = m;
    for (auto j : order) {
      if (superset(vertex_tight[j], t)) {
        pick = j;
        break;
      }
    }
    if (pick == m) throw ConsistencyError("minimal face without vertices");
    const RationalVector& v = p.vertices[pick].values;
    if (q == v) {
      weights[pick] += mass;
      DiscreteMeasure mu{{p.vertices.begin(), p.vertices.end()}, weights};
      mu.canonicalize();
      return mu;
    }
    RationalVector dir(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) dir[i] = q[i] - v[i];
    std::optional<Rational> t_max;
    for (const auto& row : p.system.inequalities) {
      const Rational slope = dot(row.coeffs, dir);
      if (sgn(slope) <= 0) continue;
      const Rational limit = (row.rhs - dot(row.coeffs, v)) / slope;
      if (!t_max || limit < *t_max) t_max = limit;
    }
    if (!t_max || *t_max <= 1) throw ConsistencyError("fan step did not leave the current face");
    // q = (1 − 1/t)·v + (1/t)·q'
    const Rational inv = 1 / *t_max;
    weights[pick] += mass * (1 - inv);
    mass *= inv;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = v[i] + *t_max * dir[i];
  }
  throw ConsistencyError("fan decomposition did not terminate");
}

RepresentingMeasures representing_measures(const StatePolytope& p, const StateVector& s) {
  if (p.empty) throw NotApplicable("empty state space has no representing measures");
  RepresentingMeasures out;
  if (classify(p).kind == SimplexClass::Simplex) {
    out.primary = barycentric_decompose(p, s);
    out.unique_certified = true;
    out.note = "simplex: unique";
    return out;
  }
  if (!p.contains(s)) throw InvalidState("state lies outside the state space");
  if (p.vertex_index(s)) {
    out.primary = dirac(s);
    out.unique_certified = true;
    out.note = "extreme state: Dirac measure";
    return out;
  }
  out.primary = fan_decompose(p, s, 0);
  for (std::size_t apex = 1; apex < p.vertices.size(); ++apex) {
    auto other = fan_decompose(p, s, apex);
    if (!(other == out.primary)) {
      out.second = std::move(other);
      out.note = "non-simplex: two distinct representing measures";
      return out;
    }
  }
  out.note = "unique among fan triangulations";
  return out;
}

bool jensen_check(const DiscreteMeasure& m, const StateVector& s, const ConvexPLFunction& f) {
  if (!m.is_probability() || !(m.barycenter() == s)) throw NotApplicable("measure does not have barycenter s");
  return m.integrate(f) >= f(s);
}

bool extremal_min_rule(const FiniteTable& table, const StateVector& s) {
  const auto order = derive_order(table);
  bool holds = true;
  for (ElementId a = 0; a < table.size(); ++a) {
    for (ElementId b = 0; b < table.size(); ++b) {
      const auto m = partial_meet(order, a, b);
      if (!m) throw NotApplicable("no meet for " + table.label(a) + " and " + table.label(b));
      if (s[*m] != std::min(s[a], s[b])) holds = false;
    }
  }
  return holds;
}

AffStateRecord aff_state_correspondence(const FiniteTable& table, const StatePolytope& p, const StateVector& s,
                                        std::uint64_t seed, std::size_t samples) {
  if (p.empty) throw NotApplicable("empty state space");
  if (!p.contains(s)) throw InvalidState("state lies outside the state space");
  AffStateRecord rec;
  const std::size_t n = table.size();
  for (ElementId a = 0; a < n; ++a) {
    if (evaluation_map(table, a)(s) != s[a]) rec.evaluations_match = false;
  }
  rec.normalized = constant_function(n, 1)(s) == 1;
  RationalRng rng(seed);
  while (rec.positivity_checks < samples) {
    AffFunction f{zeros(n), 0};
    for (auto& c : f.coeffs) c = rng.signed_rational();
    Rational low = f(p.vertices.front());
    for (const auto& v : p.vertices) low = std::min(low, f(v));
    f.constant = -low + (rng.integer(0, 1) == 0 ? Rational(0) : rng.positive_rational());
    const bool nonneg = std::all_of(p.vertices.begin(), p.vertices.end(),
                                    [&](const StateVector& v) { return sgn(f(v)) >= 0; });
    if (!nonneg) continue;
    ++rec.positivity_checks;
    if (sgn(f(s)) < 0) rec.positive = false;
  }
  return rec;
}

StateVector random_interior_state(const StatePolytope& p, RationalRng& rng) {
  if (p.empty) throw NotApplicable("empty state space");
  DiscreteMeasure mu;
  Rational total = 0;
  for (const auto& v : p.vertices) {
    mu.support.push_back(v);
    mu.weights.push_back(rng.positive_rational());
    total += mu.weights.back();
  }
  for (auto& w : mu.weights) w /= total;
  return mu.barycenter();
}

bool vertices_extremal(const StatePolytope& p) {
  const std::size_t m = p.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t n = p.vertices[i].size();
    linalg::Matrix a(n + 1, RationalVector(m - 1));
    RationalVector b(n + 1);
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      for (std::size_t r = 0; r < n; ++r) a[r][col] = p.vertices[j].values[r];
      a[n][col] = 1;
      ++col;
    }
    for (std::size_t r = 0; r < n; ++r) b[r] = p.vertices[i].values[r];
    b[n] = 1;
    if (m > 1 && linalg::find_nonnegative(a, b, m - 1)) return false;
  }
  return true;
}

}  // namespace pealab
