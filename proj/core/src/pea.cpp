#include "pealab/pea.hpp"

#include <algorithm>

#include "pealab/error.hpp"

namespace pealab {

FiniteTable::FiniteTable(std::size_t size, ElementId zero, ElementId one,
                         std::vector<std::string> labels, std::string name)
    : size_(size),
      zero_(zero),
      one_(one),
      cells_(size * size),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (labels_.empty()) {
    labels_.reserve(size);
    for (std::size_t i = 0; i < size; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != size) throw StructuralError("label count does not match carrier size");
}

std::size_t FiniteTable::index(ElementId a, ElementId b) const {
  if (a >= size_ || b >= size_) {
    throw StructuralError("element id out of range (" + std::to_string(a) + ", " +
                          std::to_string(b) + ") for carrier of size " + std::to_string(size_));
  }
  return static_cast<std::size_t>(a) * size_ + b;
}

std::optional<ElementId> FiniteTable::sum(ElementId a, ElementId b) const {
  return cells_[index(a, b)];
}

void FiniteTable::set_sum(ElementId a, ElementId b, ElementId c) {
  if (c >= size_) throw StructuralError("sum target " + std::to_string(c) + " out of range");
  cells_[index(a, b)] = c;
}

void FiniteTable::clear_sum(ElementId a, ElementId b) { cells_[index(a, b)].reset(); }

void FiniteTable::complete_identity_sums() {
  if (zero_ >= size_) throw StructuralError("zero out of range");
  for (ElementId x = 0; x < size_; ++x) {
    if (!cells_[index(zero_, x)]) cells_[index(zero_, x)] = x;
    if (!cells_[index(x, zero_)]) cells_[index(x, zero_)] = x;
  }
}

std::size_t FiniteTable::defined_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); }));
}

const std::string& FiniteTable::label(ElementId a) const {
  if (a >= size_) throw StructuralError("label id out of range");
  return labels_[a];
}

std::optional<ElementId> FiniteTable::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

bool same_partial_table(const FiniteTable& x, const FiniteTable& y) {
  return x.size_ == y.size_ && x.zero_ == y.zero_ && x.one_ == y.one_ && x.cells_ == y.cells_;
}

AxiomReport validate_axioms(const FiniteTable& t, bool fail_fast) {
  const std::size_t n = t.size();
  if (n == 0) throw StructuralError("empty carrier");
  if (t.zero() >= n) throw StructuralError("zero id " + std::to_string(t.zero()) + " out of range");
  if (t.one() >= n) throw StructuralError("one id " + std::to_string(t.one()) + " out of range");

  AxiomReport report;
  auto fail = [&](std::string axiom, std::vector<ElementId> witness, std::string detail) {
    report.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    return fail_fast;
  };
  const ElementId one = t.one();

  // (i) conditional associativity, including equal definedness domains.
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const auto ab = t.sum(a, b);
      for (ElementId c = 0; c < n; ++c) {
        const auto left = ab ? t.sum(*ab, c) : std::nullopt;
        const auto bc = t.sum(b, c);
        const auto right = bc ? t.sum(a, *bc) : std::nullopt;
        if (left.has_value() != right.has_value()) {
          if (fail("i", {a, b, c},
                   left ? "(a+b)+c defined but a+(b+c) is not" : "a+(b+c) defined but (a+b)+c is not"))
            return report;
        } else if (left && *left != *right) {
          if (fail("i", {a, b, c}, "(a+b)+c != a+(b+c)")) return report;
        }
      }
    }
  }

  // (ii) exactly one right and one left complement.
  for (ElementId a = 0; a < n; ++a) {
    std::size_t right = 0;
    std::size_t left = 0;
    for (ElementId d = 0; d < n; ++d) {
      if (t.sum(a, d) == one) ++right;
      if (t.sum(d, a) == one) ++left;
    }
    if (right != 1 || left != 1) {
      if (fail("ii", {a},
               std::to_string(right) + " right and " + std::to_string(left) + " left complements"))
        return report;
    }
  }

  // (iii) a+b = d+a = b+e.
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const auto s = t.sum(a, b);
      if (!s) continue;
      bool has_d = false;
      bool has_e = false;
      for (ElementId x = 0; x < n && !(has_d && has_e); ++x) {
        has_d = has_d || t.sum(x, a) == s;
        has_e = has_e || t.sum(b, x) == s;
      }
      if (!has_d || !has_e) {
        if (fail("iii", {a, b}, !has_d ? "no d with d+a = a+b" : "no e with b+e = a+b"))
          return report;
      }
    }
  }

  // (iv) 1+a or a+1 defined forces a = 0.
  for (ElementId a = 0; a < n; ++a) {
    if (a != t.zero() && (t.defined(one, a) || t.defined(a, one))) {
      if (fail("iv", {a}, "1 is summable with a nonzero element")) return report;
    }
  }
  return report;
}

void require_valid(const FiniteTable& table) {
  const AxiomReport r = validate_axioms(table, true);
  if (!r.passed()) {
    throw NotApplicable("table '" + table.name() + "' violates axiom (" + r.violations.front().axiom +
                        "): " + r.violations.front().detail);
  }
}

std::vector<ElementId> OrderRelation::below(ElementId a) const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < n_; ++x) {
    if (leq(x, a)) out.push_back(x);
  }
  return out;
}

OrderRelation derive_order(const FiniteTable& t) {
  const std::size_t n = t.size();
  OrderRelation right(n);
  OrderRelation left(n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId c = 0; c < n; ++c) {
      if (const auto s = t.sum(a, c)) right.set(a, *s, true);
      if (const auto s = t.sum(c, a)) left.set(a, *s, true);
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (right.leq(a, b) != left.leq(a, b)) {
        throw ConsistencyError("order characterizations disagree on (" + t.label(a) + ", " +
                               t.label(b) + ")");
      }
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    if (!right.leq(a, a)) throw ConsistencyError("order not reflexive at " + t.label(a));
    if (!right.leq(t.zero(), a) || !right.leq(a, t.one()))
      throw ConsistencyError("element " + t.label(a) + " not within [0,1]");
    for (ElementId b = 0; b < n; ++b) {
      if (a != b && right.leq(a, b) && right.leq(b, a))
        throw ConsistencyError("order not antisymmetric on " + t.label(a) + ", " + t.label(b));
      if (!right.leq(a, b)) continue;
      for (ElementId c = 0; c < n; ++c) {
        if (right.leq(b, c) && !right.leq(a, c))
          throw ConsistencyError("order not transitive through " + t.label(b));
      }
    }
  }
  return right;
}

namespace {

ElementId unique_difference(const FiniteTable& t, ElementId a, ElementId b, bool left) {
  std::optional<ElementId> found;
  for (ElementId x = 0; x < t.size(); ++x) {
    if ((left ? t.sum(x, a) : t.sum(a, x)) != b) continue;
    if (found) {
      throw ConsistencyError("difference of " + t.label(b) + " and " + t.label(a) + " is not unique");
    }
    found = x;
  }
  if (!found) throw UndefinedDifference(t.label(a) + " is not below " + t.label(b));
  return *found;
}

}  // namespace

ElementId left_minus(const FiniteTable& table, ElementId a, ElementId b) {
  return unique_difference(table, a, b, true);
}

ElementId right_minus(const FiniteTable& table, ElementId a, ElementId b) {
  return unique_difference(table, a, b, false);
}

Complements complements(const FiniteTable& table, ElementId a) {
  return {left_minus(table, a, table.one()), right_minus(table, a, table.one())};
}

bool is_commutative(const FiniteTable& t) {
  for (ElementId a = 0; a < t.size(); ++a) {
    for (ElementId b = a + 1; b < t.size(); ++b) {
      if (t.sum(a, b) != t.sum(b, a)) return false;
    }
  }
  return true;
}

bool is_symmetric(const FiniteTable& t) {
  for (ElementId a = 0; a < t.size(); ++a) {
    const Complements c = complements(t, a);
    if (c.minus != c.tilde) return false;
  }
  return true;
}

std::optional<std::pair<ElementId, ElementId>> noncommuting_pair(const FiniteTable& t) {
  for (ElementId a = 0; a < t.size(); ++a) {
    for (ElementId b = a + 1; b < t.size(); ++b) {
      const auto ab = t.sum(a, b);
      const auto ba = t.sum(b, a);
      if (ab && ba && *ab != *ba) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool commute(const FiniteTable& t, ElementId x, ElementId y) {
  const auto xy = t.sum(x, y);
  const auto yx = t.sum(y, x);
  return xy && yx && *xy == *yx;
}

bool com(const FiniteTable& t, const OrderRelation& order, ElementId a, ElementId b) {
  for (ElementId a1 : order.below(a)) {
    for (ElementId b1 : order.below(b)) {
      if (!commute(t, a1, b1)) return false;
    }
  }
  return true;
}

bool com(const FiniteTable& t, ElementId a, ElementId b) { return com(t, derive_order(t), a, b); }

std::optional<ElementId> partial_meet(const OrderRelation& order, ElementId a, ElementId b) {
  const std::size_t n = order.size();
  for (ElementId g = 0; g < n; ++g) {
    if (!order.leq(g, a) || !order.leq(g, b)) continue;
    bool greatest = true;
    for (ElementId x = 0; x < n && greatest; ++x) {
      if (order.leq(x, a) && order.leq(x, b) && !order.leq(x, g)) greatest = false;
    }
    if (greatest) return g;
  }
  return std::nullopt;
}

std::optional<ElementId> partial_join(const OrderRelation& order, ElementId a, ElementId b) {
  const std::size_t n = order.size();
  for (ElementId g = 0; g < n; ++g) {
    if (!order.leq(a, g) || !order.leq(b, g)) continue;
    bool least = true;
    for (ElementId x = 0; x < n && least; ++x) {
      if (order.leq(a, x) && order.leq(b, x) && !order.leq(g, x)) least = false;
    }
    if (least) return g;
  }
  return std::nullopt;
}

std::optional<ElementId> partial_meet(const FiniteTable& t, ElementId a, ElementId b) {
  return partial_meet(derive_order(t), a, b);
}

std::optional<ElementId> partial_join(const FiniteTable& t, ElementId a, ElementId b) {
  return partial_join(derive_order(t), a, b);
}

bool is_lattice(const OrderRelation& order) {
  for (ElementId a = 0; a < order.size(); ++a) {
    for (ElementId b = a + 1; b < order.size(); ++b) {
      if (!partial_meet(order, a, b) || !partial_join(order, a, b)) return false;
    }
  }
  return true;
}

}  // namespace pealab
