#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pealab/pea.hpp"
#include "pealab/polytope.hpp"
#include "pealab/random.hpp"
#include "pealab/state.hpp"

/// State polytopes of finite tables, their simplex classification and
/// vertex-supported representing measures.
namespace pealab {

/// One variable per element: an equality per defined sum, s(0) = 0,
/// s(1) = 1 and 0 ≤ s(a) ≤ 1.
LinearSystem build_hrep(const FiniteTable& table);

struct StatePolytope {
  bool empty = true;
  std::vector<StateVector> vertices;  // sorted lexicographically
  int affine_dim = -1;
  LinearSystem system;

  bool contains(const StateVector& s) const { return system.satisfied_by(s.values); }
  std::optional<std::size_t> vertex_index(const StateVector& s) const;
};

StatePolytope enumerate_states(const LinearSystem& system);
StatePolytope state_polytope(const FiniteTable& table);

enum class SimplexClass { Empty, Simplex, NonSimplex };
std::string to_string(SimplexClass c);  // "empty", "simplex", "non_simplex"

struct Classification {
  SimplexClass kind = SimplexClass::Empty;
  std::size_t vertex_count = 0;
  int affine_dim = -1;
  /// For a polytope the extreme set is finite hence closed, so a simplex is
  /// both Choquet and Bauer.
  bool choquet = false;
  bool bauer = false;
  std::string note;
};

Classification classify(const StatePolytope& p);

/// x ↦ coeffs·x + constant on state coordinates.
struct AffFunction {
  RationalVector coeffs;
  Rational constant;

  Rational operator()(const StateVector& s) const { return dot(coeffs, s.values) + constant; }
};

AffFunction constant_function(std::size_t variables, const Rational& c);
/// â(s) = s(a).
AffFunction evaluation_map(const FiniteTable& table, ElementId a);

/// Pointwise maximum of affine pieces.
struct ConvexPLFunction {
  std::vector<AffFunction> pieces;

  Rational operator()(const StateVector& s) const;
  bool is_affine() const noexcept { return pieces.size() == 1; }
};

ConvexPLFunction random_convex_pl(RationalRng& rng, std::size_t variables, std::size_t max_pieces = 3);

/// Finitely supported probability measure. Canonical form: zero-weight
/// atoms dropped, atoms sorted by state.
struct DiscreteMeasure {
  std::vector<StateVector> support;
  RationalVector weights;

  void canonicalize();
  StateVector barycenter() const;
  bool is_probability() const;
  template <class F>
  Rational integrate(const F& f) const {
    Rational total = 0;
    for (std::size_t i = 0; i < support.size(); ++i) total += weights[i] * f(support[i]);
    return total;
  }
  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;
};

DiscreteMeasure dirac(const StateVector& s);

/// Unique barycentric weights over the vertices of a simplex. Throws
/// NotApplicable unless p is a simplex and InvalidState if s lies outside
/// (affine hull mismatch or a negative weight).
DiscreteMeasure barycentric_decompose(const StatePolytope& p, const StateVector& s);

/// Pulling triangulation from `apex`: repeatedly push the point away from
/// the first vertex (apex first, then index order) of its minimal face.
DiscreteMeasure fan_decompose(const StatePolytope& p, const StateVector& s, std::size_t apex);

struct RepresentingMeasures {
  DiscreteMeasure primary;
  std::optional<DiscreteMeasure> second;
  /// Simplex: uniqueness is a theorem. Otherwise only "unique among fan
  /// triangulations" when no second witness was found.
  bool unique_certified = false;
  std::string note;
};

RepresentingMeasures representing_measures(const StatePolytope& p, const StateVector& s);

/// Σ wᵢ f(vᵢ) ≥ f(s). Throws NotApplicable when s is not the barycenter.
bool jensen_check(const DiscreteMeasure& m, const StateVector& s, const ConvexPLFunction& f);

/// s(a ∧ b) = min(s(a), s(b)) for all pairs. Throws NotApplicable when a
/// meet is missing.
bool extremal_min_rule(const FiniteTable& table, const StateVector& s);

struct AffStateRecord {
  bool evaluations_match = true;
  bool normalized = true;
  bool positive = true;
  std::size_t positivity_checks = 0;
  bool ok() const noexcept { return evaluations_match && normalized && positive; }
};

/// s̃(f) := f(s) on affine functions over the polytope: checks s̃(â) = s(a),
/// s̃(1) = 1 and s̃(f) ≥ 0 for random f shifted to be ≥ 0 on the vertices.
AffStateRecord aff_state_correspondence(const FiniteTable& table, const StatePolytope& p, const StateVector& s,
                                        std::uint64_t seed, std::size_t samples = 100);

/// Σ wᵢvᵢ with random positive weights over all vertices.
StateVector random_interior_state(const StatePolytope& p, RationalRng& rng);

/// No vertex is a convex combination of the others (exact LP per vertex).
bool vertices_extremal(const StatePolytope& p);

}  // namespace pealab
