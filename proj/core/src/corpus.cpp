#include "pealab/corpus.hpp"

#include <filesystem>

#include "pealab/error.hpp"

namespace pealab::corpus {

FiniteTable chain(int n) {
  if (n < 1) throw StructuralError("chain needs n ≥ 1");
  std::vector<std::string> labels;
  for (int k = 0; k <= n; ++k) labels.push_back(std::to_string(k));
  FiniteTable t(static_cast<std::size_t>(n) + 1, 0, static_cast<ElementId>(n), labels, "chain" + std::to_string(n));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      t.set_sum(static_cast<ElementId>(a), static_cast<ElementId>(b), static_cast<ElementId>(a + b));
    }
  }
  return t;
}

FiniteTable boolean(int k) {
  if (k < 1 || k > 3) throw StructuralError("boolean fixtures cover 2¹..2³");
  const unsigned full = (1U << k) - 1;
  // Elements ordered by popcount, then mask.
  std::vector<unsigned> masks;
  for (int pc = 0; pc <= k; ++pc) {
    for (unsigned m = 0; m <= full; ++m) {
      if (static_cast<int>(__builtin_popcount(m)) == pc) masks.push_back(m);
    }
  }
  std::vector<std::string> labels;
  for (auto m : masks) {
    if (m == 0) {
      labels.push_back("0");
    } else if (m == full) {
      labels.push_back("1");
    } else {
      std::string s;
      for (int i = 0; i < k; ++i) {
        if (m & (1U << i)) s += static_cast<char>('a' + i);
      }
      labels.push_back(s);
    }
  }
  std::vector<ElementId> id(full + 1);
  for (std::size_t i = 0; i < masks.size(); ++i) id[masks[i]] = static_cast<ElementId>(i);
  FiniteTable t(masks.size(), id[0], id[full], labels, "bool" + std::to_string(full + 1));
  for (auto x : masks) {
    for (auto y : masks) {
      if ((x & y) == 0) t.set_sum(id[x], id[y], id[x | y]);
    }
  }
  return t;
}

FiniteTable mo(int n) {
  if (n < 1 || n > 13) throw StructuralError("mo needs 1 ≤ n ≤ 13");
  std::vector<std::string> labels{"0"};
  for (int i = 0; i < n; ++i) {
    const std::string a(1, static_cast<char>('a' + i));
    labels.push_back(a);
    labels.push_back(a + "'");
  }
  labels.push_back("1");
  const auto one = static_cast<ElementId>(labels.size() - 1);
  FiniteTable t(labels.size(), 0, one, labels, "mo" + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    const auto a = static_cast<ElementId>(2 * i + 1);
    t.set_sum(a, a + 1, one);
    t.set_sum(a + 1, a, one);
  }
  t.complete_identity_sums();
  return t;
}

FiniteTable horizontal_sum() {
  // 0, h, a, a', 1 with h + h = 1 and a + a' = a' + a = 1
  FiniteTable t(5, 0, 4, {"0", "h", "a", "a'", "1"}, "hsum");
  t.set_sum(1, 1, 4);
  t.set_sum(2, 3, 4);
  t.set_sum(3, 2, 4);
  t.complete_identity_sums();
  return t;
}

GroupSpec lex_semidirect() {
  auto inner = PoGroupPresentation::semidirect(Matrix2{{1, 1, 0, 1}}, "Z semidirect Z2");
  auto g = PoGroupPresentation::lex_z(std::move(inner), "Z lex (Z semidirect Z2)");
  return {std::move(g), GroupElement{{1, 0, 0, 0}}};
}

WindowTable noncommutative_window(int radius) {
  const auto gs = lex_semidirect();
  const auto interval = gamma_interval(gs.group, gs.unit);
  auto w = window_table(interval, radius);
  w.table.set_name("lex-semidirect-window");
  return w;
}

namespace {

FiniteTable renamed(FiniteTable t, std::string name) {
  t.set_name(std::move(name));
  return t;
}

GroupSpec named(PoGroupPresentation g, GroupElement u, std::string name) {
  g.set_label(std::move(name));
  return {std::move(g), std::move(u)};
}

}  // namespace

std::vector<GroupSpec> groups() {
  std::vector<GroupSpec> out;
  out.push_back(named(PoGroupPresentation::free_abelian(1, StandardCone{}), {{3}}, "z1-u3"));
  out.push_back(named(PoGroupPresentation::free_abelian(2, StandardCone{}), {{1, 1}}, "z2-std-u11"));
  out.push_back(named(PoGroupPresentation::free_abelian(2, StandardCone{}), {{2, 1}}, "z2-std-u21"));
  out.push_back(named(PoGroupPresentation::free_abelian(2, LexCone{}), {{0, 1}}, "z2-lex-u01"));
  out.push_back(named(PoGroupPresentation::free_abelian(2, PolyhedralCone{{{1, 0}, {1, 1}}}), {{2, 1}}, "z2-poly"));
  out.push_back(named(PoGroupPresentation::semidirect(Matrix2{{1, 1, 0, 1}}), {{1, 0, 0}}, "semidirect"));
  auto ls = lex_semidirect();
  out.push_back(named(std::move(ls.group), std::move(ls.unit), "lex-semidirect"));
  return out;
}

std::vector<FiniteTable> tables() {
  std::vector<FiniteTable> out;
  for (int n = 1; n <= 5; ++n) out.push_back(chain(n));
  for (int k = 1; k <= 3; ++k) out.push_back(boolean(k));
  out.push_back(mo(2));
  out.push_back(mo(3));
  out.push_back(horizontal_sum());
  const auto std2 = PoGroupPresentation::free_abelian(2, StandardCone{});
  out.push_back(renamed(gamma_interval(std2, {{1, 1}}).finite().table, "z2-u11"));
  out.push_back(renamed(gamma_interval(std2, {{2, 1}}).finite().table, "z2-u21"));
  const auto poly = PoGroupPresentation::free_abelian(2, PolyhedralCone{{{1, 0}, {1, 1}}});
  out.push_back(renamed(gamma_interval(poly, {{2, 1}}).finite().table, "z2-poly-u21"));
  for (const auto& p : pmv_images()) out.push_back(renamed(pmv_to_pea(p), p.name() + "-pea"));
  return out;
}

std::vector<PmvTable> pmv_images() {
  auto a = gamma_lgroup({2});
  a.set_name("pmv-chain3");
  auto b = gamma_lgroup({1, 2});
  b.set_name("pmv-box12");
  return {a, b};
}

std::vector<File> files() {
  std::vector<File> out;
  for (const auto& t : tables()) out.push_back({t.name() + ".pea", write_pea(t)});
  for (const auto& p : pmv_images()) out.push_back({p.name() + ".pmv", write_pmv(p)});
  for (const auto& g : groups()) out.push_back({g.group.label() + ".grp", write_grp(g.group, g.unit)});
  const auto w = noncommutative_window(2);
  out.push_back({"lex-semidirect-window.wtab", write_wtab(w, {"window of the lex-semidirect interval"})});
  return out;
}

std::vector<std::string> write(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  std::vector<std::string> paths;
  for (const auto& f : files()) {
    const auto path = (std::filesystem::path(dir) / f.name).string();
    write_file(path, f.content);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace pealab::corpus
