#include "pealab/linalg.hpp"

#include <utility>

#include "pealab/error.hpp"

namespace pealab::linalg {

RowEchelon rref(Matrix m, std::size_t columns) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        if (sgn(m[row][c]) != 0) m[r][c] -= factor * m[row][c];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).pivots.size();
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const RationalVector& b,
                                           std::size_t variables) {
  if (a.size() != b.size()) throw StructuralError("solve_affine: row count mismatch");
  Matrix augmented;
  augmented.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != variables) throw StructuralError("solve_affine: ragged matrix");
    RationalVector row = a[i];
    row.push_back(b[i]);
    augmented.push_back(std::move(row));
  }
  const RowEchelon ech = rref(std::move(augmented), variables + 1);
  for (std::size_t p : ech.pivots) {
    if (p == variables) return std::nullopt;  // 0 = nonzero
  }

  AffineSolution sol;
  sol.particular = zeros(variables);
  std::vector<bool> is_pivot(variables, false);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    is_pivot[ech.pivots[r]] = true;
    sol.particular[ech.pivots[r]] = ech.rows[r][variables];
  }
  for (std::size_t f = 0; f < variables; ++f) {
    if (is_pivot[f]) continue;
    sol.free_variables.push_back(f);
    RationalVector k = zeros(variables);
    k[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) k[ech.pivots[r]] = -ech.rows[r][f];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<RationalVector> find_nonnegative(const Matrix& a, const RationalVector& b,
                                               std::size_t variables) {
  const std::size_t m = a.size();
  if (b.size() != m) throw StructuralError("find_nonnegative: row count mismatch");
  const std::size_t n = variables;
  const std::size_t width = n + m + 1;  // x, artificials, rhs

  Matrix tab(m, zeros(width));
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = sign * a[i][j];
    tab[i][n + i] = 1;
    tab[i][width - 1] = sign * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-1 objective Σ artificials.
  RationalVector cost = zeros(width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= tab[i][j];
    cost[width - 1] -= tab[i][width - 1];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      const Rational ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase 1

    const Rational inv = 1 / tab[leave][enter];
    for (auto& x : tab[leave]) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(tab[leave][j]) != 0) tab[i][j] -= f * tab[leave][j];
      }
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(tab[leave][j]) != 0) cost[j] -= f * tab[leave][j];
      }
    }
    basis[leave] = enter;
  }

  if (sgn(cost[width - 1]) != 0) return std::nullopt;  // optimum Σ artificials > 0
  RationalVector x = zeros(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = tab[i][width - 1];
  }
  return x;
}

}  // namespace pealab::linalg
