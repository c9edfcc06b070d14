#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pealab/pea.hpp"
#include "pealab/rational.hpp"
#include "pealab/state.hpp"

/// Concrete partially ordered groups, strong units and their unit intervals.
namespace pealab {

using Coordinates = std::vector<std::int64_t>;

struct GroupElement {
  Coordinates coords;

  std::size_t rank() const noexcept { return coords.size(); }
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& g);

/// Integer 2×2 matrix, row-major {a, b, c, d}.
struct Matrix2 {
  std::array<std::int64_t, 4> m{1, 0, 0, 1};

  std::int64_t det() const { return m[0] * m[3] - m[1] * m[2]; }
  std::array<std::int64_t, 2> apply(std::int64_t x, std::int64_t y) const {
    return {m[0] * x + m[1] * y, m[2] * x + m[3] * y};
  }
  /// φⁿ for any integer n; requires |det| = 1 when n < 0.
  Matrix2 power(std::int64_t n) const;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct StandardCone {};
/// Lexicographic cone on ℤⁿ: the last nonzero coordinate is positive.
struct LexCone {};
/// Nonnegative integer combinations of the generator rows.
struct PolyhedralCone {
  std::vector<Coordinates> rows;
};
using FreeAbelianCone = std::variant<StandardCone, LexCone, PolyhedralCone>;

class PoGroupPresentation {
 public:
  struct FreeAbelian {
    std::size_t rank = 0;
    FreeAbelianCone cone;
  };
  /// ℤ ×lex inner, ℤ dominant. Coordinates (m, inner...).
  struct LexZ {
    std::shared_ptr<const PoGroupPresentation> inner;
  };
  /// ℤ ⋉ ℤ² with lex-ordered ℤ². Coordinates (n, x, y) and group law
  /// (m,v) + (n,w) = (m+n, φ⁻ⁿ(v) + w).
  struct Semidirect {
    Matrix2 action;
  };
  using Variant = std::variant<FreeAbelian, LexZ, Semidirect>;

  static PoGroupPresentation free_abelian(std::size_t rank, FreeAbelianCone cone,
                                          std::string label = {});
  static PoGroupPresentation lex_z(PoGroupPresentation inner, std::string label = {});
  /// Throws StructuralError unless φ is unimodular and preserves the lex cone.
  static PoGroupPresentation semidirect(Matrix2 action, std::string label = {});

  const Variant& variant() const noexcept { return variant_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Length of coordinate vectors.
  std::size_t rank() const;
  bool is_abelian() const;
  /// Free abelian with the standard cone.
  bool is_standard() const;

 private:
  PoGroupPresentation(Variant v, std::string label) : variant_(std::move(v)), label_(std::move(label)) {}

  Variant variant_;
  std::string label_;
};

enum class Membership { No, Yes, Unknown };

inline constexpr int kPolyhedralCoefficientCap = 32;
inline constexpr int kStrongUnitCap = 64;
inline constexpr std::size_t kIntervalCap = 10000;

Membership cone_membership(const PoGroupPresentation& g, const GroupElement& x);
/// Throws Undecided when a polyhedral search is inconclusive and
/// StructuralError on a rank mismatch.
bool cone_contains(const PoGroupPresentation& g, const GroupElement& x);
/// x ≤ y iff −x + y lies in the cone.
bool group_leq(const PoGroupPresentation& g, const GroupElement& x, const GroupElement& y);

GroupElement zero_element(const PoGroupPresentation& g);
GroupElement unit_vector(const PoGroupPresentation& g, std::size_t i);
GroupElement add(const PoGroupPresentation& g, const GroupElement& x, const GroupElement& y);
GroupElement neg(const PoGroupPresentation& g, const GroupElement& x);
/// −by + x + by.
GroupElement conjugate(const PoGroupPresentation& g, const GroupElement& x, const GroupElement& by);
GroupElement multiple(const PoGroupPresentation& g, const GroupElement& x, std::int64_t n);

/// Every element whose coordinates all lie in [−radius, radius].
std::vector<GroupElement> window_elements(const PoGroupPresentation& g, int radius);

struct PresentationCheck {
  bool strict = true;
  bool normal = true;
  bool directed = true;
  std::vector<std::string> problems;
  bool ok() const noexcept { return strict && normal && directed; }
};

/// Window-relative check of the cone invariants: strictness, normality under
/// conjugation, and directedness (every generator a difference of positives).
PresentationCheck check_presentation(const PoGroupPresentation& g, int radius);

struct StrongUnit {
  GroupElement unit;
  /// (generator or its negation, least n with g ≤ n·u)
  std::vector<std::pair<GroupElement, int>> bounds;
};

/// Throws NotStrongUnit when some ±generator or window element is not
/// dominated by n·u for n ≤ cap.
StrongUnit check_strong_unit(const PoGroupPresentation& g, const GroupElement& u, int window_radius = 2,
                             int cap = kStrongUnitCap);

struct FiniteRealization {
  FiniteTable table;
  std::vector<GroupElement> elements;  // element id → group element
};

struct LazyRealization {
  std::size_t explored = 0;
  std::string notice;
};

/// Γ(G,u) = [0,u] with group addition restricted to the interval.
class IntervalAlgebra {
 public:
  IntervalAlgebra(PoGroupPresentation g, GroupElement unit,
                  std::variant<FiniteRealization, LazyRealization> realization)
      : group_(std::move(g)), unit_(std::move(unit)), realization_(std::move(realization)) {}

  const PoGroupPresentation& group() const noexcept { return group_; }
  const GroupElement& unit() const noexcept { return unit_; }
  bool is_finite() const noexcept { return std::holds_alternative<FiniteRealization>(realization_); }
  const FiniteRealization& finite() const;
  const LazyRealization& lazy() const;

  /// 0 ≤ x ≤ u.
  bool contains(const GroupElement& x) const;

 private:
  PoGroupPresentation group_;
  GroupElement unit_;
  std::variant<FiniteRealization, LazyRealization> realization_;
};

/// Enumerates [0,u] by breadth-first search from 0. Falls back to a lazy
/// realization once more than `cap` elements are found. Finite tables are
/// re-validated; a failure throws ConstructionMismatch.
IntervalAlgebra gamma_interval(const PoGroupPresentation& g, const GroupElement& u,
                               std::size_t cap = kIntervalCap, int unit_window = 2);

/// A finite piece of an interval: sums that stay in the interval but leave
/// the window are "unknown", which is distinct from undefined.
struct WindowTable {
  FiniteTable table;
  std::vector<GroupElement> elements;
  std::vector<std::pair<ElementId, ElementId>> unknown;
  int radius = 0;

  bool is_unknown(ElementId a, ElementId b) const;
};

/// Interval elements with every coordinate in [−radius, radius], pruned
/// until the window is closed under both complements.
WindowTable window_table(const IntervalAlgebra& interval, int radius);

/// Homomorphism G → ℝ on an abelian presentation, given by its values on
/// the standard generators.
struct GroupState {
  RationalVector generator_values;

  Rational operator()(const GroupElement& x) const;
  friend bool operator==(const GroupState&, const GroupState&) = default;
};

/// Additive extension of a state on a finite abelian interval. Sums of
/// interval pairs that coincide in G are cross-checked; a mismatch throws
/// ConsistencyError (the group lacks RDP on the tested window).
GroupState extend_state(const IntervalAlgebra& interval, const StateVector& s);

/// Throws InvalidState if the group state is negative on a window cone
/// element or not normalized at the unit.
StateVector restrict_state(const GroupState& gs, const IntervalAlgebra& interval, int window_radius = 2);

}  // namespace pealab
