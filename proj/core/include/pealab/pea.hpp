#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/// Finite pseudo effect algebras given by a partial addition table, and the
/// order calculus derived from it.
namespace pealab {

/// Dense index into a carrier 0..n-1.
using ElementId = std::uint32_t;

/// A partial binary operation on {0..n-1} with distinguished 0 and 1.
///
/// Undefined sums are a first-class outcome: sum() returns nullopt and never
/// a default element. Labels are a side table and play no role in algebra.
class FiniteTable {
 public:
  FiniteTable() = default;
  FiniteTable(std::size_t size, ElementId zero, ElementId one,
              std::vector<std::string> labels = {}, std::string name = {});

  std::size_t size() const noexcept { return size_; }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }

  std::optional<ElementId> sum(ElementId a, ElementId b) const;
  bool defined(ElementId a, ElementId b) const { return sum(a, b).has_value(); }

  /// Throws StructuralError when an id is out of range.
  void set_sum(ElementId a, ElementId b, ElementId c);
  void clear_sum(ElementId a, ElementId b);

  /// Adds 0+x = x+0 = x for every x where the cell is still empty.
  void complete_identity_sums();

  std::size_t defined_count() const;

  const std::string& label(ElementId a) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Same carrier size, constants and partial operation. Labels and names
  /// are ignored.
  friend bool same_partial_table(const FiniteTable& x, const FiniteTable& y);

 private:
  std::size_t index(ElementId a, ElementId b) const;

  std::size_t size_ = 0;
  ElementId zero_ = 0;
  ElementId one_ = 0;
  std::vector<std::optional<ElementId>> cells_;
  std::vector<std::string> labels_;
  std::string name_;
};

bool same_partial_table(const FiniteTable& x, const FiniteTable& y);

struct AxiomViolation {
  std::string axiom;               // "i", "ii", "iii", "iv"
  std::vector<ElementId> witness;  // elements instantiating the failure
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Exhaustive check of the four pseudo effect algebra axioms over all
/// triples. Witnesses are the first failing tuples in lexicographic order.
/// Throws StructuralError when the table itself is malformed.
AxiomReport validate_axioms(const FiniteTable& table, bool fail_fast = false);

/// Throws NotApplicable when validate_axioms fails.
void require_valid(const FiniteTable& table);

/// a ≤ b iff a + c = b for some c.
class OrderRelation {
 public:
  OrderRelation() = default;
  explicit OrderRelation(std::size_t n) : n_(n), leq_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool leq(ElementId a, ElementId b) const { return leq_[a * n_ + b] != 0; }
  void set(ElementId a, ElementId b, bool value) { leq_[a * n_ + b] = value ? 1 : 0; }

  /// Elements x with x ≤ a, ascending.
  std::vector<ElementId> below(ElementId a) const;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> leq_;
};

/// Derives ≤ from right summands and checks it against the left-summand
/// characterization and the partial-order laws. Disagreement throws
/// ConsistencyError (the table is not a pseudo effect algebra).
OrderRelation derive_order(const FiniteTable& table);

/// The unique d with d + a = b. Throws UndefinedDifference if a ≰ b.
ElementId left_minus(const FiniteTable& table, ElementId a, ElementId b);
/// The unique c with a + c = b. Throws UndefinedDifference if a ≰ b.
ElementId right_minus(const FiniteTable& table, ElementId a, ElementId b);

struct Complements {
  ElementId minus;  // a⁻ with a⁻ + a = 1
  ElementId tilde;  // a˜ with a + a˜ = 1
};

Complements complements(const FiniteTable& table, ElementId a);

bool is_commutative(const FiniteTable& table);
bool is_symmetric(const FiniteTable& table);

/// First pair (a, b) with both a+b and b+a defined and different. A
/// certificate of non-commutativity that ignores cells the table leaves out.
std::optional<std::pair<ElementId, ElementId>> noncommuting_pair(const FiniteTable& table);

/// x and y commute: x+y and y+x are both defined and equal.
bool commute(const FiniteTable& table, ElementId x, ElementId y);

/// a com b: every a₁ ≤ a commutes with every b₁ ≤ b.
bool com(const FiniteTable& table, const OrderRelation& order, ElementId a, ElementId b);
bool com(const FiniteTable& table, ElementId a, ElementId b);

/// Greatest lower bound / least upper bound, if one exists.
std::optional<ElementId> partial_meet(const OrderRelation& order, ElementId a, ElementId b);
std::optional<ElementId> partial_join(const OrderRelation& order, ElementId a, ElementId b);
std::optional<ElementId> partial_meet(const FiniteTable& table, ElementId a, ElementId b);
std::optional<ElementId> partial_join(const FiniteTable& table, ElementId a, ElementId b);

/// True when every pair has both a meet and a join.
bool is_lattice(const OrderRelation& order);

}  // namespace pealab
