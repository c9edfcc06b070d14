#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pealab/pea.hpp"
#include "pealab/polytope.hpp"

/// Pseudo MV-algebras as total tables and their correspondence with
/// pseudo effect algebras satisfying RDP₂.
namespace pealab {

class PmvTable {
 public:
  PmvTable() = default;
  PmvTable(std::size_t size, ElementId zero, ElementId one, std::vector<std::string> labels = {},
           std::string name = {});

  std::size_t size() const noexcept { return size_; }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }

  ElementId oplus(ElementId x, ElementId y) const { return oplus_[x * size_ + y]; }
  ElementId minus(ElementId x) const { return minus_[x]; }
  ElementId tilde(ElementId x) const { return tilde_[x]; }
  /// y ⊙ x = (x⁻ ⊕ y⁻)˜, so odot(x, y) = (y⁻ ⊕ x⁻)˜.
  ElementId odot(ElementId x, ElementId y) const { return tilde(oplus(minus(y), minus(x))); }

  /// Throw StructuralError on out-of-range ids.
  void set_oplus(ElementId x, ElementId y, ElementId z);
  void set_minus(ElementId x, ElementId v);
  void set_tilde(ElementId x, ElementId v);

  const std::string& label(ElementId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const PmvTable& a, const PmvTable& b) {
    return a.size_ == b.size_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.oplus_ == b.oplus_ &&
           a.minus_ == b.minus_ && a.tilde_ == b.tilde_;
  }

 private:
  void check(ElementId x) const;

  std::size_t size_ = 0;
  ElementId zero_ = 0;
  ElementId one_ = 0;
  std::vector<ElementId> oplus_;
  std::vector<ElementId> minus_;
  std::vector<ElementId> tilde_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Exhaustive (A1)–(A8). Axiom tags are "A1".."A8". Throws StructuralError
/// when the carrier lacks distinct 0 and 1 or an id is out of range.
AxiomReport validate_pmv(const PmvTable& t, bool fail_fast = false);

/// Box [0,u] ⊂ ℤⁿ with x ⊕ y = (x+y) ∧ u and x⁻ = x˜ = u − x. Throws
/// StructuralError unless every coordinate of u is positive.
PmvTable gamma_lgroup(const std::vector<std::int64_t>& u);

/// a ⊕ b := a + (a˜ ∧ b). Throws NotApplicable without RDP₂ and
/// ConstructionMismatch if the result fails (A1)–(A8).
PmvTable pea_to_pmv(const FiniteTable& table);

/// a + b := a ⊕ b whenever a ≤ b⁻. Throws ConstructionMismatch unless the
/// result is a pseudo effect algebra with RDP₂.
FiniteTable pmv_to_pea(const PmvTable& t);

/// x ≤ y iff x ⊕ z = y for some z; cross-checked against x⁻ ⊕ y = 1
/// (ConsistencyError on disagreement).
std::vector<std::vector<bool>> pmv_order(const PmvTable& t);

/// States on the algebra itself: s(x ⊕ y) = s(x) + s(y) whenever y ⊙ x = 0.
LinearSystem pmv_state_system(const PmvTable& t);

}  // namespace pealab
