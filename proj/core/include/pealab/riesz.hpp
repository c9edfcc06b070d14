#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pealab/pea.hpp"
#include "pealab/pogroup.hpp"

/// Riesz interpolation and decomposition properties, from RIP up to RDP₂.
namespace pealab {

enum class RieszProperty { Rip, Rdp0, Rdp, Rdp1, Rdp2 };

inline constexpr std::array<RieszProperty, 5> kRieszLadder{
    RieszProperty::Rip, RieszProperty::Rdp0, RieszProperty::Rdp, RieszProperty::Rdp1, RieszProperty::Rdp2};

std::string_view to_string(RieszProperty p);

inline constexpr std::size_t kMaxWitnesses = 8;

/// A failing instance. For the decomposition properties `tuple` is
/// (a₁, a₂, b₁, b₂) and `refinements` counts refinements that exist but
/// miss the extra condition; for RDP₀ it is (a, b₁, b₂); for RIP it is
/// (a₁, a₂, b₁, b₂) with no interpolant.
struct RieszWitness {
  std::vector<ElementId> tuple;
  std::size_t refinements = 0;
};

struct PropertyResult {
  bool holds = true;
  std::vector<RieszWitness> witnesses;  // at most kMaxWitnesses
};

struct RieszReport {
  PropertyResult rip, rdp0, rdp, rdp1, rdp2;

  const PropertyResult& get(RieszProperty p) const;
  /// rdp2 ⇒ rdp1 ⇒ rdp ⇒ rdp0 ⇒ rip.
  bool ladder_consistent() const;
  /// The weakest property that fails, if any.
  std::optional<RieszProperty> first_failure() const;
};

/// (d₁, d₂, d₃, d₄) with d₁+d₂ = a₁, d₃+d₄ = a₂, d₁+d₃ = b₁, d₂+d₄ = b₂.
using Refinement = std::array<ElementId, 4>;

/// All refinements of a₁+a₂ = b₁+b₂, lexicographic in (d₁, …, d₄).
std::vector<Refinement> refinements(const FiniteTable& table, ElementId a1, ElementId a2, ElementId b1,
                                    ElementId b2);

PropertyResult has_rip(const FiniteTable& table);
PropertyResult has_rdp0(const FiniteTable& table);
PropertyResult has_rdp(const FiniteTable& table);
PropertyResult has_rdp1(const FiniteTable& table);
PropertyResult has_rdp2(const FiniteTable& table);
PropertyResult check_property(const FiniteTable& table, RieszProperty p);

/// Runs all five checkers. Throws ConsistencyError if the results break the
/// implication ladder.
RieszReport ladder_report(const FiniteTable& table);

/// Result of a property check on a finite window of a po-group cone. It
/// says nothing about elements outside the window.
struct ConeWindowResult {
  bool holds_on_window = true;
  std::vector<std::vector<GroupElement>> witnesses;
};

/// Checks `p` for all tuples drawn from `window` (cone elements). A needed
/// difference that is positive but missing from the window throws
/// WindowTooSmall naming it.
ConeWindowResult cone_rdp(const std::vector<GroupElement>& window, const PoGroupPresentation& g,
                          RieszProperty p);

/// Cone elements of g with coordinates in [lo, hi].
std::vector<GroupElement> cone_window(const PoGroupPresentation& g, int lo, int hi);

}  // namespace pealab
