#pragma once

#include <cstddef>
#include <vector>

#include "pealab/rational.hpp"

namespace pealab {

struct LinearRow {
  RationalVector coeffs;
  Rational rhs;

  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

/// {x : E·x = e, A·x ≤ b} over ℚⁿ.
struct LinearSystem {
  std::size_t variables = 0;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;

  /// Rescales rows to a canonical multiple, drops trivial ones and removes
  /// duplicates. Order of first appearance is kept.
  void deduplicate();
  bool satisfied_by(const RationalVector& x) const;
  /// Indices of inequalities holding with equality at x.
  std::vector<std::size_t> tight(const RationalVector& x) const;
};

struct VertexEnumeration {
  bool empty = true;
  std::vector<RationalVector> vertices;  // sorted lexicographically
  int affine_dim = -1;                   // -1 when empty
};

/// Exact vertex enumeration of a bounded system by the double description
/// method: equalities are eliminated into an affine parametrization, the
/// inequalities are homogenized, and constraints are inserted in order of
/// increasing support (ties lexicographic). Throws ConsistencyError if the
/// system turns out to be unbounded.
VertexEnumeration enumerate_vertices(const LinearSystem& system);

/// Rank of {v − v₀}; -1 for an empty list.
int affine_dimension(const std::vector<RationalVector>& points);

/// Positive rescaling of v to a primitive integer vector (v ≠ 0).
RationalVector primitive(RationalVector v);

}  // namespace pealab
