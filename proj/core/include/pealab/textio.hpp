#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pealab/pea.hpp"
#include "pealab/pmv.hpp"
#include "pealab/pogroup.hpp"
#include "pealab/state.hpp"

/// Plain-text formats. Tokens are whitespace separated and '#' starts a
/// comment. Every parser throws ParseError with a 1-based line and column.
namespace pealab {

/// .pea
///   name: chain3          (optional, rest of line)
///   elements: 0 1 2 3
///   zero: 0
///   one: 3
///   1 + 2 = 3
/// Sums with 0 may be omitted; they are completed.
FiniteTable parse_pea(std::string_view text);
std::string write_pea(const FiniteTable& table, const std::vector<std::string>& header = {});

/// .pmv: header as .pea, then one row per element
///   x : (x⊕e0) (x⊕e1) ... | x⁻ x˜
PmvTable parse_pmv(std::string_view text);
std::string write_pmv(const PmvTable& t, const std::vector<std::string>& header = {});

struct GroupSpec {
  PoGroupPresentation group;
  GroupElement unit;
};

/// .grp
///   variant: free-abelian | lex-z | semidirect
///   inner: free-abelian | semidirect      (lex-z only)
///   rank: 2                               (free-abelian, also as inner)
///   cone: standard | lex | polyhedral
///   rows: 1 0 ; 1 1                       (polyhedral)
///   action: 1 1 0 1                       (semidirect, row-major)
///   unit: 1 0 0
GroupSpec parse_grp(std::string_view text);
std::string write_grp(const PoGroupPresentation& g, const GroupElement& unit);

/// .state: label=value pairs, any whitespace between pairs. The zero
/// element defaults to 0; every other element is required.
StateVector parse_state(std::string_view text, const FiniteTable& table);
std::string write_state(const FiniteTable& table, const StateVector& s);

/// .wtab: a .pea body plus "radius: r" and "unknown: a + b" lines.
struct ParsedWindow {
  FiniteTable table;
  std::vector<std::pair<ElementId, ElementId>> unknown;
  int radius = 0;
};
ParsedWindow parse_wtab(std::string_view text);
std::string write_wtab(const WindowTable& w, const std::vector<std::string>& header = {});

enum class FileKind { Pea, Pmv, Grp, State, Wtab, Unknown };
FileKind file_kind(std::string_view path);

/// Throws Error on IO failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace pealab
