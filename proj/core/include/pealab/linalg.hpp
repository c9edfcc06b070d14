#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pealab/rational.hpp"

/// Dense exact linear algebra over the rationals. Sizes here are tiny
/// (tens of rows), so everything is plain Gaussian elimination.
namespace pealab::linalg {

using Matrix = std::vector<RationalVector>;

struct RowEchelon {
  Matrix rows;                       // nonzero rows of the reduced form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form. `columns` is the row width; every row must have
/// it. Zero rows are dropped.
RowEchelon rref(Matrix m, std::size_t columns);

std::size_t rank(const Matrix& m);

/// Solution set of a·x = b as x = particular + Σ t_k·kernel[k].
struct AffineSolution {
  RationalVector particular;
  Matrix kernel;                     // basis vectors of the null space
  std::vector<std::size_t> free_variables;
};

/// nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const RationalVector& b,
                                           std::size_t variables);

/// Some x ≥ 0 with a·x = b, or nullopt. Exact phase-1 simplex, Bland's rule.
std::optional<RationalVector> find_nonnegative(const Matrix& a, const RationalVector& b,
                                               std::size_t variables);

}  // namespace pealab::linalg
