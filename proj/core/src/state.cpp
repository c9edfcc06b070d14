#include "pealab/state.hpp"

#include "pealab/error.hpp"

namespace pealab {

std::optional<std::string> state_violation(const FiniteTable& t, const StateVector& s) {
  if (s.size() != t.size()) {
    return "state has " + std::to_string(s.size()) + " values for " + std::to_string(t.size()) +
           " elements";
  }
  if (s[t.zero()] != 0) return "s(" + t.label(t.zero()) + ") != 0";
  if (s[t.one()] != 1) return "s(" + t.label(t.one()) + ") != 1";
  for (ElementId a = 0; a < t.size(); ++a) {
    if (s[a] < 0 || s[a] > 1) return "s(" + t.label(a) + ") = " + to_string(s[a]) + " outside [0,1]";
  }
  for (ElementId a = 0; a < t.size(); ++a) {
    for (ElementId b = 0; b < t.size(); ++b) {
      const auto c = t.sum(a, b);
      if (c && s[a] + s[b] != s[*c]) {
        return "s(" + t.label(a) + ") + s(" + t.label(b) + ") != s(" + t.label(*c) + ") for " +
               t.label(a) + " + " + t.label(b) + " = " + t.label(*c);
      }
    }
  }
  return std::nullopt;
}

void validate_state(const FiniteTable& table, const StateVector& s) {
  if (auto v = state_violation(table, s)) throw InvalidState(*v);
}

StateVector convex_combination(const Rational& lambda, const StateVector& x, const StateVector& y) {
  if (x.size() != y.size()) throw StructuralError("convex_combination: size mismatch");
  StateVector out;
  out.values.reserve(x.size());
  const Rational mu = 1 - lambda;
  for (std::size_t i = 0; i < x.size(); ++i) out.values.push_back(lambda * x.values[i] + mu * y.values[i]);
  return out;
}

}  // namespace pealab
