#pragma once

#include <string>
#include <vector>

#include "pealab/pea.hpp"
#include "pealab/pmv.hpp"
#include "pealab/pogroup.hpp"
#include "pealab/textio.hpp"

/// The curated fixture set: small tables with known structure, their pseudo
/// MV images and a few group presentations.
namespace pealab::corpus {

/// Γ(ℤ,n): {0..n}, k + m = k+m when k+m ≤ n.
FiniteTable chain(int n);
/// Boolean algebra 2ᵏ (k ≤ 3), disjoint union as the partial sum.
FiniteTable boolean(int k);
/// Horizontal sum of n four-element Boolean blocks: 0, a, a', b, b', …, 1.
FiniteTable mo(int n);
/// Γ(ℤ,2) glued with a 2² block at 0 and 1.
FiniteTable horizontal_sum();

/// The lex-semidirect presentation ℤ ×lex (ℤ ⋉ ℤ²), action [[1,1],[0,1]],
/// unit (1,0,0,0).
GroupSpec lex_semidirect();
/// Radius-r window of Γ for lex_semidirect().
WindowTable noncommutative_window(int radius = 2);

/// Every .pea fixture, named after its file stem.
std::vector<FiniteTable> tables();
std::vector<GroupSpec> groups();
std::vector<PmvTable> pmv_images();

struct File {
  std::string name;  // file name with extension
  std::string content;
};

std::vector<File> files();

/// Writes files() into dir (created if needed). Returns written paths.
std::vector<std::string> write(const std::string& dir);

}  // namespace pealab::corpus
