#include "pealab/textio.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "pealab/error.hpp"

namespace pealab {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
  std::string rest_after(std::size_t i) const {
    std::string s;
    for (std::size_t k = i; k < tokens.size(); ++k) s += (k > i ? " " : "") + tokens[k].text;
    return s;
  }
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& msg, const Line& line, std::size_t token) {
  const int col = token < line.tokens.size() ? line.tokens[token].column
                                              : (line.tokens.empty() ? 1 : line.tokens.back().column);
  throw ParseError(msg, line.number, col);
}

std::int64_t parse_int(const Line& line, std::size_t token) {
  const auto& t = line.tokens[token].text;
  std::int64_t v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) fail("expected an integer, got '" + t + "'", line, token);
  return v;
}

bool is_key(const Line& line, std::string_view key) {
  return !line.tokens.empty() && line.tokens[0].text.size() == key.size() + 1 &&
         line.tokens[0].text.compare(0, key.size(), key) == 0 && line.tokens[0].text.back() == ':';
}

// Shared name/elements/zero/one header.
class Header {
 public:
  bool consume(const Line& line) {
    if (is_key(line, "name")) {
      name_ = line.rest_after(1);
      return true;
    }
    if (is_key(line, "elements")) {
      if (!labels_.empty()) fail("duplicate elements line", line, 0);
      if (line.tokens.size() < 2) fail("empty element list", line, 0);
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& t = line.tokens[i].text;
        if (index_.count(t)) fail("duplicate element '" + t + "'", line, i);
        index_[t] = static_cast<ElementId>(labels_.size());
        labels_.push_back(t);
      }
      return true;
    }
    if (is_key(line, "zero") || is_key(line, "one")) {
      if (line.tokens.size() != 2) fail("expected one element", line, 1);
      auto& slot = is_key(line, "zero") ? zero_ : one_;
      if (slot) fail("duplicate " + line.tokens[0].text + " line", line, 0);
      slot = id(line, 1);
      return true;
    }
    return false;
  }

  ElementId id(const Line& line, std::size_t token) const {
    if (labels_.empty()) fail("elements line must come first", line, token);
    if (token >= line.tokens.size()) fail("missing element", line, token);
    const auto it = index_.find(line.tokens[token].text);
    if (it == index_.end()) fail("unknown element '" + line.tokens[token].text + "'", line, token);
    return it->second;
  }

  void require_complete(int last_line) const {
    if (labels_.empty()) throw ParseError("missing elements line", last_line, 1);
    if (!zero_) throw ParseError("missing zero line", last_line, 1);
    if (!one_) throw ParseError("missing one line", last_line, 1);
  }

  const std::vector<std::string>& labels() const { return labels_; }
  ElementId zero() const { return *zero_; }
  ElementId one() const { return *one_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, ElementId> index_;
  std::optional<ElementId> zero_;
  std::optional<ElementId> one_;
  std::string name_;
};

void write_header(std::ostringstream& out, const std::vector<std::string>& header, const std::string& name,
                  const std::vector<std::string>& labels, const std::string& zero, const std::string& one) {
  for (const auto& h : header) out << "# " << h << "\n";
  if (!name.empty()) out << "name: " << name << "\n";
  out << "elements:";
  for (const auto& l : labels) out << ' ' << l;
  out << "\nzero: " << zero << "\none: " << one << "\n";
}

// Parses a .pea-like body; extra keys go to `extra`.
template <class Extra>
FiniteTable parse_table(std::string_view text, Extra extra) {
  const auto lines = tokenize(text);
  Header header;
  std::vector<std::pair<const Line*, std::array<ElementId, 3>>> sums;
  std::vector<const Line*> deferred;
  for (const auto& line : lines) {
    if (header.consume(line)) continue;
    if (line.tokens[0].text.back() == ':') {
      deferred.push_back(&line);
      continue;
    }
    if (line.tokens.size() != 5 || line.tokens[1].text != "+" || line.tokens[3].text != "=") {
      fail("expected 'a + b = c'", line, 0);
    }
    sums.push_back({&line, {header.id(line, 0), header.id(line, 2), header.id(line, 4)}});
  }
  header.require_complete(lines.empty() ? 1 : lines.back().number);
  if (header.zero() == header.one() && header.labels().size() > 1) {
    throw ParseError("zero and one coincide", lines.back().number, 1);
  }
  FiniteTable table(header.labels().size(), header.zero(), header.one(), header.labels(), header.name());
  for (const auto& [line, s] : sums) {
    const auto existing = table.sum(s[0], s[1]);
    if (existing && *existing != s[2]) fail("conflicting sum", *line, 0);
    table.set_sum(s[0], s[1], s[2]);
  }
  table.complete_identity_sums();
  for (const Line* line : deferred) extra(*line, header, table);
  return table;
}

void write_sums(std::ostringstream& out, const FiniteTable& table) {
  for (ElementId a = 0; a < table.size(); ++a) {
    if (a == table.zero()) continue;
    for (ElementId b = 0; b < table.size(); ++b) {
      if (b == table.zero()) continue;
      if (const auto c = table.sum(a, b)) {
        out << table.label(a) << " + " << table.label(b) << " = " << table.label(*c) << "\n";
      }
    }
  }
}

std::vector<std::int64_t> int_list(const Line& line, std::size_t from) {
  std::vector<std::int64_t> v;
  for (std::size_t i = from; i < line.tokens.size(); ++i) v.push_back(parse_int(line, i));
  return v;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

FiniteTable parse_pea(std::string_view text) {
  return parse_table(text, [](const Line& line, const Header&, FiniteTable&) {
    fail("unknown key '" + line.tokens[0].text + "'", line, 0);
  });
}

std::string write_pea(const FiniteTable& table, const std::vector<std::string>& header) {
  std::ostringstream out;
  write_header(out, header, table.name(), table.labels(), table.label(table.zero()), table.label(table.one()));
  write_sums(out, table);
  return out.str();
}

PmvTable parse_pmv(std::string_view text) {
  const auto lines = tokenize(text);
  Header header;
  std::vector<const Line*> rows;
  for (const auto& line : lines) {
    if (header.consume(line)) continue;
    rows.push_back(&line);
  }
  header.require_complete(lines.empty() ? 1 : lines.back().number);
  const std::size_t n = header.labels().size();
  if (header.zero() == header.one()) throw ParseError("zero and one coincide", lines.back().number, 1);
  PmvTable t(n, header.zero(), header.one(), header.labels(), header.name());
  std::vector<bool> seen(n, false);
  for (const Line* line : rows) {
    // x : s0 .. s(n-1) | m t
    if (line->tokens.size() != n + 5 || line->tokens[1].text != ":" || line->tokens[n + 2].text != "|") {
      fail("expected 'x : " + std::to_string(n) + " sums | minus tilde'", *line, 0);
    }
    const ElementId x = header.id(*line, 0);
    if (seen[x]) fail("duplicate row", *line, 0);
    seen[x] = true;
    for (std::size_t j = 0; j < n; ++j) t.set_oplus(x, static_cast<ElementId>(j), header.id(*line, j + 2));
    t.set_minus(x, header.id(*line, n + 3));
    t.set_tilde(x, header.id(*line, n + 4));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x]) throw ParseError("missing row for '" + header.labels()[x] + "'", lines.back().number, 1);
  }
  return t;
}

std::string write_pmv(const PmvTable& t, const std::vector<std::string>& header) {
  std::ostringstream out;
  write_header(out, header, t.name(), t.labels(), t.label(t.zero()), t.label(t.one()));
  for (ElementId x = 0; x < t.size(); ++x) {
    out << t.label(x) << " :";
    for (ElementId y = 0; y < t.size(); ++y) out << ' ' << t.label(t.oplus(x, y));
    out << " | " << t.label(t.minus(x)) << ' ' << t.label(t.tilde(x)) << "\n";
  }
  return out.str();
}

GroupSpec parse_grp(std::string_view text) {
  const auto lines = tokenize(text);
  std::map<std::string, const Line*> keys;
  for (const auto& line : lines) {
    const auto& k = line.tokens[0].text;
    if (k.back() != ':') fail("expected 'key: value'", line, 0);
    const std::string key = k.substr(0, k.size() - 1);
    static const char* known[] = {"name", "variant", "inner", "rank", "cone", "rows", "action", "unit"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) fail("unknown key '" + key + "'", line, 0);
    if (keys.count(key)) fail("duplicate key '" + key + "'", line, 0);
    keys[key] = &line;
  }
  const int last = lines.empty() ? 1 : lines.back().number;
  auto need = [&](const std::string& key) -> const Line& {
    const auto it = keys.find(key);
    if (it == keys.end()) throw ParseError("missing key '" + key + "'", last, 1);
    if (it->second->tokens.size() < 2) fail("empty value", *it->second, 0);
    return *it->second;
  };
  auto word = [&](const std::string& key) { return need(key).tokens[1].text; };

  auto free_abelian = [&]() {
    const Line& rank_line = need("rank");
    const auto rank = parse_int(rank_line, 1);
    if (rank < 1) fail("rank must be positive", rank_line, 1);
    const std::string cone = word("cone");
    if (cone == "standard") return PoGroupPresentation::free_abelian(static_cast<std::size_t>(rank), StandardCone{});
    if (cone == "lex") return PoGroupPresentation::free_abelian(static_cast<std::size_t>(rank), LexCone{});
    if (cone != "polyhedral") fail("unknown cone '" + cone + "'", need("cone"), 1);
    const Line& rows_line = need("rows");
    PolyhedralCone pc;
    Coordinates cur;
    for (std::size_t i = 1; i < rows_line.tokens.size(); ++i) {
      std::string t = rows_line.tokens[i].text;
      const bool ends = !t.empty() && t.back() == ';';
      if (ends) t.pop_back();
      if (!t.empty()) {
        Line single{rows_line.number, {{t, rows_line.tokens[i].column}}};
        cur.push_back(parse_int(single, 0));
      }
      if (ends || i + 1 == rows_line.tokens.size()) {
        if (static_cast<std::int64_t>(cur.size()) != rank) fail("row length must equal rank", rows_line, i);
        pc.rows.push_back(cur);
        cur.clear();
      }
    }
    return PoGroupPresentation::free_abelian(static_cast<std::size_t>(rank), std::move(pc));
  };
  auto semidirect = [&]() {
    const Line& a = need("action");
    const auto v = int_list(a, 1);
    if (v.size() != 4) fail("action needs 4 integers", a, 1);
    try {
      return PoGroupPresentation::semidirect(Matrix2{{v[0], v[1], v[2], v[3]}});
    } catch (const StructuralError& e) {
      fail(e.what(), a, 1);
    }
  };

  const std::string variant = word("variant");
  std::optional<PoGroupPresentation> g;
  if (variant == "free-abelian") {
    g = free_abelian();
  } else if (variant == "semidirect") {
    g = semidirect();
  } else if (variant == "lex-z") {
    const std::string inner = word("inner");
    if (inner == "free-abelian") {
      g = PoGroupPresentation::lex_z(free_abelian());
    } else if (inner == "semidirect") {
      g = PoGroupPresentation::lex_z(semidirect());
    } else {
      fail("unknown inner variant '" + inner + "'", need("inner"), 1);
    }
  } else {
    fail("unknown variant '" + variant + "'", need("variant"), 1);
  }
  if (keys.count("name")) g->set_label(keys["name"]->rest_after(1));
  const Line& unit_line = need("unit");
  GroupElement unit{int_list(unit_line, 1)};
  if (unit.rank() != g->rank()) fail("unit has " + std::to_string(unit.rank()) + " coordinates, expected " +
                                         std::to_string(g->rank()), unit_line, 1);
  return {std::move(*g), std::move(unit)};
}

std::string write_grp(const PoGroupPresentation& g, const GroupElement& unit) {
  std::ostringstream out;
  if (!g.label().empty()) out << "name: " << g.label() << "\n";
  auto body = [&](const PoGroupPresentation& p) {
    std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, PoGroupPresentation::FreeAbelian>) {
            out << "rank: " << v.rank << "\n";
            if (std::holds_alternative<StandardCone>(v.cone)) {
              out << "cone: standard\n";
            } else if (std::holds_alternative<LexCone>(v.cone)) {
              out << "cone: lex\n";
            } else {
              out << "cone: polyhedral\nrows:";
              const auto& rows = std::get<PolyhedralCone>(v.cone).rows;
              for (std::size_t r = 0; r < rows.size(); ++r) out << (r ? " ; " : " ") << join_ints(rows[r]);
              out << "\n";
            }
          } else if constexpr (std::is_same_v<V, PoGroupPresentation::Semidirect>) {
            out << "action: " << join_ints({v.action.m.begin(), v.action.m.end()}) << "\n";
          }
        },
        p.variant());
  };
  auto variant_name = [](const PoGroupPresentation& p) -> std::string {
    switch (p.variant().index()) {
      case 0:
        return "free-abelian";
      case 1:
        return "lex-z";
      default:
        return "semidirect";
    }
  };
  out << "variant: " << variant_name(g) << "\n";
  if (const auto* lz = std::get_if<PoGroupPresentation::LexZ>(&g.variant())) {
    if (lz->inner->variant().index() == 1) throw StructuralError(".grp supports one lex-z level");
    out << "inner: " << variant_name(*lz->inner) << "\n";
    body(*lz->inner);
  } else {
    body(g);
  }
  out << "unit: " << join_ints(unit.coords) << "\n";
  return out.str();
}

StateVector parse_state(std::string_view text, const FiniteTable& table) {
  const auto lines = tokenize(text);
  StateVector s{zeros(table.size())};
  std::vector<bool> seen(table.size(), false);
  for (const auto& line : lines) {
    for (std::size_t i = 0; i < line.tokens.size(); ++i) {
      const auto& t = line.tokens[i].text;
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == t.size()) fail("expected 'element=value'", line, i);
      const auto id = table.find(t.substr(0, eq));
      if (!id) fail("unknown element '" + t.substr(0, eq) + "'", line, i);
      if (seen[*id]) fail("duplicate value for '" + t.substr(0, eq) + "'", line, i);
      seen[*id] = true;
      try {
        s.values[*id] = parse_rational(t.substr(eq + 1));
      } catch (const Error& e) {
        fail(e.what(), line, i);
      }
    }
  }
  seen[table.zero()] = true;
  for (ElementId a = 0; a < table.size(); ++a) {
    if (!seen[a]) {
      throw ParseError("missing value for '" + table.label(a) + "'", lines.empty() ? 1 : lines.back().number, 1);
    }
  }
  return s;
}

std::string write_state(const FiniteTable& table, const StateVector& s) {
  std::ostringstream out;
  for (ElementId a = 0; a < table.size(); ++a) out << table.label(a) << '=' << to_string(s[a]) << "\n";
  return out.str();
}

ParsedWindow parse_wtab(std::string_view text) {
  ParsedWindow w;
  std::vector<std::pair<const Line*, std::pair<ElementId, ElementId>>> unknown;
  w.table = parse_table(text, [&](const Line& line, const Header& header, FiniteTable& table) {
    if (is_key(line, "radius")) {
      if (line.tokens.size() != 2) fail("expected one integer", line, 1);
      w.radius = static_cast<int>(parse_int(line, 1));
      return;
    }
    if (is_key(line, "unknown")) {
      if (line.tokens.size() != 4 || line.tokens[2].text != "+") fail("expected 'unknown: a + b'", line, 0);
      const ElementId a = header.id(line, 1);
      const ElementId b = header.id(line, 3);
      if (table.defined(a, b)) fail("unknown sum is also defined", line, 1);
      w.unknown.emplace_back(a, b);
      return;
    }
    fail("unknown key '" + line.tokens[0].text + "'", line, 0);
  });
  return w;
}

std::string write_wtab(const WindowTable& w, const std::vector<std::string>& header) {
  std::ostringstream out;
  const auto& t = w.table;
  write_header(out, header, t.name(), t.labels(), t.label(t.zero()), t.label(t.one()));
  out << "radius: " << w.radius << "\n";
  write_sums(out, t);
  for (const auto& [a, b] : w.unknown) out << "unknown: " << t.label(a) << " + " << t.label(b) << "\n";
  return out.str();
}

FileKind file_kind(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return FileKind::Unknown;
  const auto ext = path.substr(dot + 1);
  if (ext == "pea") return FileKind::Pea;
  if (ext == "pmv") return FileKind::Pmv;
  if (ext == "grp") return FileKind::Grp;
  if (ext == "state") return FileKind::State;
  if (ext == "wtab") return FileKind::Wtab;
  return FileKind::Unknown;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace pealab
