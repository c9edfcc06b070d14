#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pealab/pogroup.hpp"
#include "pealab/rational.hpp"

/// Real-valued homomorphisms on concrete po-groups: positivity, positive
/// and negative parts, and pointwise sup/inf through decompositions.
namespace pealab {

/// x ↦ Σ values[i]·x[i].
struct GroupHom {
  RationalVector values;

  Rational operator()(const GroupElement& x) const;
  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

std::string to_string(const GroupHom& f);

/// Checks that the values define a homomorphism of g: for the semidirect
/// product the inner part must be invariant under the action. Throws
/// StructuralError otherwise.
GroupHom make_hom(const PoGroupPresentation& g, RationalVector values);

GroupHom operator-(const GroupHom& f, const GroupHom& g);

struct Positivity {
  bool positive = true;
  bool window_relative = false;
  std::optional<GroupElement> witness;  // cone element with negative value
};

/// Exact for the standard cone (all generator values ≥ 0); otherwise
/// checked on the cone elements of the window.
Positivity is_positive(const GroupHom& f, const PoGroupPresentation& g, int window_radius = 5);

inline constexpr int kDecompositionCap = 12;

/// Multisets of nonzero cone elements summing to x. Each part list is
/// sorted in decreasing order; lists are in lexicographic order.
struct DecompositionSet {
  GroupElement base;
  std::vector<std::vector<GroupElement>> parts;
};

/// Standard cone only. Throws NotApplicable("non-enumerable cone") for other
/// cones, StructuralError if x is not positive and CapExceeded when the
/// coordinate sum of x exceeds `cap`.
DecompositionSet enumerate_decompositions(const PoGroupPresentation& g, const GroupElement& x,
                                          int cap = kDecompositionCap);

/// Ordered n-tuples of cone elements (zeros allowed) summing to x: every
/// multiset with at most n parts, padded with zeros and permuted.
std::vector<std::vector<GroupElement>> ordered_decompositions(const PoGroupPresentation& g,
                                                              const GroupElement& x, std::size_t n,
                                                              int cap = kDecompositionCap);

/// max over x = x₁+⋯+xₙ of Σ fᵢ(xᵢ), n = fs.size().
Rational sup_homs(const PoGroupPresentation& g, const std::vector<GroupHom>& fs, const GroupElement& x,
                  int cap = kDecompositionCap);
/// min over the same decompositions.
Rational inf_homs(const PoGroupPresentation& g, const std::vector<GroupHom>& fs, const GroupElement& x,
                  int cap = kDecompositionCap);

/// sup over D(x) of Σ max(f(xᵢ), 0).
Rational positive_part_value(const PoGroupPresentation& g, const GroupHom& f, const GroupElement& x,
                             int cap = kDecompositionCap);

struct JordanParts {
  GroupHom positive;  // g
  GroupHom negative;  // h, with f = g − h
};

/// g from the positive-part construction on the generators, h = g − f.
JordanParts jordan_decompose(const GroupHom& f, const PoGroupPresentation& g);

struct LatticeOracleReport {
  bool agree = true;
  std::size_t points_checked = 0;
  GroupHom sup_oracle;
  GroupHom inf_oracle;
  std::optional<GroupElement> witness;
  std::string detail;
};

/// Compares sup/inf over decompositions with the coordinatewise max/min
/// homomorphism at every point of {0..hi}ⁿ. For two functions the sup is
/// also cross-checked as f₂ + (f₁ − f₂)⁺ through D(x).
LatticeOracleReport verify_lattice_oracle(const PoGroupPresentation& g, const std::vector<GroupHom>& fs,
                                          int hi = 4);

}  // namespace pealab
