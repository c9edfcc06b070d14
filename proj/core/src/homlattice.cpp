#include "pealab/homlattice.hpp"

#include <algorithm>
#include <functional>

#include "pealab/error.hpp"

namespace pealab {

namespace {

void require_standard(const PoGroupPresentation& g) {
  if (!g.is_standard()) throw NotApplicable("non-enumerable cone: decompositions need the standard cone");
}

void require_enumerable(const PoGroupPresentation& g, const GroupElement& x, int cap) {
  require_standard(g);
  if (x.rank() != g.rank()) throw StructuralError("rank mismatch");
  std::int64_t total = 0;
  for (auto c : x.coords) {
    if (c < 0) throw StructuralError("element " + to_string(x) + " is not in the cone");
    total += c;
  }
  if (total > cap) {
    throw CapExceeded("coordinate sum " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  }
}

// Nonzero y with 0 ≤ y ≤ rest and y ≤ bound lexicographically.
void parts_below(const Coordinates& rest, const Coordinates& bound, Coordinates& cur, std::size_t i,
                 std::vector<Coordinates>& out) {
  if (i == rest.size()) {
    if (std::any_of(cur.begin(), cur.end(), [](auto c) { return c != 0; }) && cur <= bound) out.push_back(cur);
    return;
  }
  for (std::int64_t c = rest[i]; c >= 0; --c) {
    cur[i] = c;
    parts_below(rest, bound, cur, i + 1, out);
  }
}

void partitions(const Coordinates& rest, const Coordinates& bound, std::size_t max_parts,
                std::vector<GroupElement>& prefix, std::vector<std::vector<GroupElement>>& out) {
  if (std::all_of(rest.begin(), rest.end(), [](auto c) { return c == 0; })) {
    out.push_back(prefix);
    return;
  }
  if (prefix.size() == max_parts) return;
  std::vector<Coordinates> candidates;
  Coordinates cur(rest.size());
  parts_below(rest, bound, cur, 0, candidates);
  for (const auto& y : candidates) {
    Coordinates next = rest;
    for (std::size_t i = 0; i < next.size(); ++i) next[i] -= y[i];
    prefix.push_back(GroupElement{y});
    partitions(next, y, max_parts, prefix, out);
    prefix.pop_back();
  }
}

template <class Better>
Rational extremum(const PoGroupPresentation& g, const std::vector<GroupHom>& fs, const GroupElement& x, int cap,
                  Better better) {
  if (fs.empty()) throw NotApplicable("need at least one homomorphism");
  std::optional<Rational> best;
  for (const auto& tuple : ordered_decompositions(g, x, fs.size(), cap)) {
    Rational v = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) v += fs[i](tuple[i]);
    if (!best || better(v, *best)) best = v;
  }
  return *best;
}

}  // namespace

Rational GroupHom::operator()(const GroupElement& x) const {
  if (x.rank() != values.size()) throw StructuralError("rank mismatch");
  Rational v = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (x.coords[i] != 0) v += values[i] * static_cast<long>(x.coords[i]);
  }
  return v;
}

std::string to_string(const GroupHom& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.values.size(); ++i) s += (i ? "," : "") + to_string(f.values[i]);
  return s + ")";
}

GroupHom make_hom(const PoGroupPresentation& g, RationalVector values) {
  if (values.size() != g.rank()) throw StructuralError("homomorphism needs one value per coordinate");
  if (const auto* sd = std::get_if<PoGroupPresentation::Semidirect>(&g.variant())) {
    const auto& m = sd->action.m;
    // (b, c)·φ = (b, c)
    const Rational& b = values[1];
    const Rational& c = values[2];
    if (b * static_cast<long>(m[0]) + c * static_cast<long>(m[2]) != b ||
        b * static_cast<long>(m[1]) + c * static_cast<long>(m[3]) != c) {
      throw StructuralError("inner values are not invariant under the action");
    }
  }
  return GroupHom{std::move(values)};
}

GroupHom operator-(const GroupHom& f, const GroupHom& g) {
  if (f.values.size() != g.values.size()) throw StructuralError("rank mismatch");
  GroupHom d = f;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= g.values[i];
  return d;
}

Positivity is_positive(const GroupHom& f, const PoGroupPresentation& g, int window_radius) {
  Positivity p;
  if (g.is_standard()) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      if (sgn(f.values[i]) < 0) {
        p.positive = false;
        p.witness = unit_vector(g, i);
        return p;
      }
    }
    return p;
  }
  p.window_relative = true;
  for (const auto& x : window_elements(g, window_radius)) {
    if (cone_membership(g, x) != Membership::Yes) continue;
    if (sgn(f(x)) < 0) {
      p.positive = false;
      p.witness = x;
      return p;
    }
  }
  return p;
}

DecompositionSet enumerate_decompositions(const PoGroupPresentation& g, const GroupElement& x, int cap) {
  require_enumerable(g, x, cap);
  DecompositionSet d{x, {}};
  std::vector<GroupElement> prefix;
  partitions(x.coords, x.coords, static_cast<std::size_t>(-1), prefix, d.parts);
  std::sort(d.parts.begin(), d.parts.end());
  return d;
}

std::vector<std::vector<GroupElement>> ordered_decompositions(const PoGroupPresentation& g, const GroupElement& x,
                                                              std::size_t n, int cap) {
  require_enumerable(g, x, cap);
  DecompositionSet multisets{x, {}};
  std::vector<GroupElement> prefix;
  partitions(x.coords, x.coords, n, prefix, multisets.parts);
  const GroupElement zero = zero_element(g);
  std::vector<std::vector<GroupElement>> out;
  auto emit = [&](std::vector<GroupElement> tuple) {
    std::sort(tuple.begin(), tuple.end());
    do {
      out.push_back(tuple);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  };
  if (multisets.parts.empty() || multisets.parts.front().empty()) {
    // x = 0: the single all-zero tuple.
    out.emplace_back(n, zero);
    return out;
  }
  for (const auto& parts : multisets.parts) {
    if (parts.size() > n) continue;
    auto tuple = parts;
    tuple.resize(n, zero);
    emit(std::move(tuple));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational sup_homs(const PoGroupPresentation& g, const std::vector<GroupHom>& fs, const GroupElement& x, int cap) {
  return extremum(g, fs, x, cap, std::greater<Rational>{});
}

Rational inf_homs(const PoGroupPresentation& g, const std::vector<GroupHom>& fs, const GroupElement& x, int cap) {
  return extremum(g, fs, x, cap, std::less<Rational>{});
}

Rational positive_part_value(const PoGroupPresentation& g, const GroupHom& f, const GroupElement& x, int cap) {
  const auto d = enumerate_decompositions(g, x, cap);
  Rational best = 0;  // x = 0 has only the empty decomposition
  for (const auto& parts : d.parts) {
    Rational v = 0;
    for (const auto& p : parts) v += std::max(f(p), Rational(0));
    best = std::max(best, v);
  }
  return best;
}

JordanParts jordan_decompose(const GroupHom& f, const PoGroupPresentation& g) {
  require_standard(g);
  if (f.values.size() != g.rank()) throw StructuralError("rank mismatch");
  GroupHom pos{zeros(g.rank())};
  for (std::size_t i = 0; i < g.rank(); ++i) pos.values[i] = positive_part_value(g, f, unit_vector(g, i));
  return {pos, pos - f};
}

LatticeOracleReport verify_lattice_oracle(const PoGroupPresentation& g, const std::vector<GroupHom>& fs, int hi) {
  require_standard(g);
  if (fs.empty()) throw NotApplicable("need at least one homomorphism");
  const std::size_t n = g.rank();
  LatticeOracleReport r;
  r.sup_oracle.values = fs.front().values;
  r.inf_oracle.values = fs.front().values;
  for (const auto& f : fs) {
    if (f.values.size() != n) throw StructuralError("rank mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      r.sup_oracle.values[i] = std::max(r.sup_oracle.values[i], f.values[i]);
      r.inf_oracle.values[i] = std::min(r.inf_oracle.values[i], f.values[i]);
    }
  }
  Coordinates x(n, 0);
  for (;;) {
    const GroupElement p{x};
    ++r.points_checked;
    const Rational s = sup_homs(g, fs, p);
    const Rational m = inf_homs(g, fs, p);
    if (s != r.sup_oracle(p) || m != r.inf_oracle(p)) {
      r.agree = false;
      r.witness = p;
      r.detail = "sup " + to_string(s) + " / inf " + to_string(m) + " against oracle " +
                 to_string(r.sup_oracle(p)) + " / " + to_string(r.inf_oracle(p));
      return r;
    }
    if (fs.size() == 2) {
      const Rational via_parts = fs[1](p) + positive_part_value(g, fs[0] - fs[1], p);
      if (via_parts != s) {
        r.agree = false;
        r.witness = p;
        r.detail = "f2 + (f1 - f2)+ gives " + to_string(via_parts) + ", decompositions give " + to_string(s);
        return r;
      }
    }
    std::size_t i = 0;
    while (i < n && x[i] == hi) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return r;
}

}  // namespace pealab
