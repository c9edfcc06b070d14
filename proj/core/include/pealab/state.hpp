#pragma once

#include <optional>
#include <string>

#include "pealab/pea.hpp"
#include "pealab/rational.hpp"

namespace pealab {

/// s : E → [0,1] with s(0) = 0, s(1) = 1 and s(a+b) = s(a) + s(b).
struct StateVector {
  RationalVector values;

  const Rational& operator[](ElementId a) const { return values[a]; }
  std::size_t size() const noexcept { return values.size(); }

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

/// Description of the first violated condition, or nullopt for a state.
std::optional<std::string> state_violation(const FiniteTable& table, const StateVector& s);

/// Throws InvalidState naming the violated sum or bound.
void validate_state(const FiniteTable& table, const StateVector& s);

/// λ·x + (1−λ)·y, coordinatewise.
StateVector convex_combination(const Rational& lambda, const StateVector& x, const StateVector& y);

}  // namespace pealab
