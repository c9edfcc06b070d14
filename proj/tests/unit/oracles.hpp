#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code paths with the library beyond the table lookup.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "pealab/pea.hpp"
#include "pealab/rational.hpp"

namespace oracle {

using pealab::ElementId;
using pealab::FiniteTable;
using pealab::Rational;
using Vec = std::vector<Rational>;

inline std::vector<std::vector<bool>> order(const FiniteTable& t) {
  const auto n = t.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElementId a = 0; a < n; ++a)
    for (ElementId c = 0; c < n; ++c)
      if (auto s = t.sum(a, c)) leq[a][*s] = true;
  return leq;
}

inline std::optional<ElementId> meet(const FiniteTable& t, ElementId a, ElementId b) {
  const auto leq = order(t);
  std::vector<ElementId> lower;
  for (ElementId x = 0; x < t.size(); ++x)
    if (leq[x][a] && leq[x][b]) lower.push_back(x);
  for (auto m : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](ElementId y) { return leq[y][m]; })) return m;
  }
  return std::nullopt;
}

inline std::optional<ElementId> join(const FiniteTable& t, ElementId a, ElementId b) {
  const auto leq = order(t);
  std::vector<ElementId> upper;
  for (ElementId x = 0; x < t.size(); ++x)
    if (leq[a][x] && leq[b][x]) upper.push_back(x);
  for (auto m : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](ElementId y) { return leq[m][y]; })) return m;
  }
  return std::nullopt;
}

inline bool commute(const FiniteTable& t, ElementId x, ElementId y) {
  auto a = t.sum(x, y);
  auto b = t.sum(y, x);
  return a && b && *a == *b;
}

// Does some (d1..d4) refine a1+a2 = b1+b2 and satisfy `extra(d2, d3)`?
inline bool refinable(const FiniteTable& t, ElementId a1, ElementId a2, ElementId b1, ElementId b2,
                      const std::function<bool(ElementId, ElementId)>& extra) {
  const auto n = static_cast<ElementId>(t.size());
  for (ElementId d1 = 0; d1 < n; ++d1)
    for (ElementId d2 = 0; d2 < n; ++d2) {
      if (t.sum(d1, d2) != std::optional<ElementId>(a1)) continue;
      for (ElementId d3 = 0; d3 < n; ++d3) {
        if (t.sum(d1, d3) != std::optional<ElementId>(b1)) continue;
        for (ElementId d4 = 0; d4 < n; ++d4) {
          if (t.sum(d3, d4) == std::optional<ElementId>(a2) && t.sum(d2, d4) == std::optional<ElementId>(b2) &&
              extra(d2, d3))
            return true;
        }
      }
    }
  return false;
}

// RDP-type property by brute force; extra = nullptr means plain RDP.
inline bool rdp_like(const FiniteTable& t, const std::function<bool(ElementId, ElementId)>& extra) {
  const auto n = static_cast<ElementId>(t.size());
  for (ElementId a1 = 0; a1 < n; ++a1)
    for (ElementId a2 = 0; a2 < n; ++a2) {
      auto s = t.sum(a1, a2);
      if (!s) continue;
      for (ElementId b1 = 0; b1 < n; ++b1)
        for (ElementId b2 = 0; b2 < n; ++b2)
          if (t.sum(b1, b2) == s && !refinable(t, a1, a2, b1, b2, extra)) return false;
    }
  return true;
}

inline bool rip(const FiniteTable& t) {
  const auto leq = order(t);
  const auto n = t.size();
  for (ElementId a1 = 0; a1 < n; ++a1)
    for (ElementId a2 = 0; a2 < n; ++a2)
      for (ElementId b1 = 0; b1 < n; ++b1)
        for (ElementId b2 = 0; b2 < n; ++b2) {
          if (!(leq[a1][b1] && leq[a1][b2] && leq[a2][b1] && leq[a2][b2])) continue;
          bool found = false;
          for (ElementId c = 0; c < n && !found; ++c)
            found = leq[a1][c] && leq[a2][c] && leq[c][b1] && leq[c][b2];
          if (!found) return false;
        }
  return true;
}

inline bool rdp0(const FiniteTable& t) {
  const auto leq = order(t);
  const auto n = static_cast<ElementId>(t.size());
  for (ElementId b1 = 0; b1 < n; ++b1)
    for (ElementId b2 = 0; b2 < n; ++b2) {
      auto s = t.sum(b1, b2);
      if (!s) continue;
      for (ElementId a = 0; a < n; ++a) {
        if (!leq[a][*s]) continue;
        bool found = false;
        for (ElementId d1 = 0; d1 < n && !found; ++d1)
          for (ElementId d2 = 0; d2 < n && !found; ++d2)
            found = leq[d1][b1] && leq[d2][b2] && t.sum(d1, d2) == std::optional<ElementId>(a);
        if (!found) return false;
      }
    }
  return true;
}

// Solves the square-or-tall system m·x = rhs. Returns the unique solution,
// or nullopt when inconsistent or underdetermined.
inline std::optional<Vec> unique_solution(std::vector<Vec> m, Vec rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  if (r < cols) return std::nullopt;
  Vec x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / m[i][pivot_col[i]];
  return x;
}

// Extreme states by brute force: each variable is pinned to 0, pinned to 1
// or left free; a pinning whose equation system has a unique feasible
// solution is a basic solution, hence a vertex. 3ⁿ pinnings.
inline std::vector<Vec> extreme_states(const FiniteTable& t) {
  const auto n = t.size();
  std::vector<Vec> base;
  Vec base_rhs;
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (auto c = t.sum(a, b)) {
        Vec row(n, 0);
        row[a] += 1;
        row[b] += 1;
        row[*c] -= 1;
        base.push_back(row);
        base_rhs.push_back(0);
      }
  Vec one(n, 0);
  one[t.one()] = 1;
  base.push_back(one);
  base_rhs.push_back(1);
  std::set<Vec> out;
  std::vector<int> pin(n, 0);  // 0 free, 1 → 0, 2 → 1
  for (;;) {
    auto m = base;
    auto rhs = base_rhs;
    for (std::size_t i = 0; i < n; ++i) {
      if (pin[i] == 0) continue;
      Vec row(n, 0);
      row[i] = 1;
      m.push_back(row);
      rhs.push_back(pin[i] == 1 ? 0 : 1);
    }
    if (auto x = unique_solution(m, rhs)) {
      if (std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0 && q <= 1; })) out.insert(*x);
    }
    std::size_t i = 0;
    while (i < n && pin[i] == 2) pin[i++] = 0;
    if (i == n) break;
    ++pin[i];
  }
  return {out.begin(), out.end()};
}

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace oracle
