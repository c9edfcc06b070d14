#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "pealab/corpus.hpp"
#include "pealab/error.hpp"
#include "pealab/homlattice.hpp"
#include "pealab/pmv.hpp"
#include "pealab/pogroup.hpp"
#include "pealab/riesz.hpp"
#include "pealab/statespace.hpp"
#include "pealab/textio.hpp"
#include "report.hpp"

namespace pealab::cli {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
};

json base_document(const std::string& command) {
  return {{"tool", {{"name", "pealab"}, {"version", std::string(version())}}}, {"command", command}};
}

json describe_input(const std::string& path, const std::string& content) {
  return {{"file", std::filesystem::path(path).filename().string()}, {"hash", input_hash(content)}};
}

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on) {}
  template <class F>
  auto time(const std::string& key, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (on_) {
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
      timings_[key] = us.count();
    }
    return result;
  }
  bool on() const { return on_; }
  const json& timings() const { return timings_; }

 private:
  bool on_;
  json timings_ = json::object();
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string text_vector(const json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + ")";
}

// --- validate ---------------------------------------------------------------

int validate_window(const ParsedWindow& w, json& doc, std::ostream& text) {
  const auto& t = w.table;
  json win = {{"elements", t.size()}, {"radius", w.radius}, {"unknown", w.unknown.size()},
              {"symmetric", is_symmetric(t)}, {"commutative", is_commutative(t)}};
  text << "window: " << t.size() << " elements, radius " << w.radius << ", " << w.unknown.size()
       << " unknown sums\nsymmetric: " << yes_no(is_symmetric(t)) << "\ncommutative: " << yes_no(is_commutative(t))
       << "\n";
  if (const auto p = noncommuting_pair(t)) {
    const auto ab = *t.sum(p->first, p->second);
    const auto ba = *t.sum(p->second, p->first);
    win["witness"] = {{"a", t.label(p->first)}, {"b", t.label(p->second)}, {"a+b", t.label(ab)}, {"b+a", t.label(ba)}};
    text << "witness: " << t.label(p->first) << " + " << t.label(p->second) << " = " << t.label(ab) << " but "
         << t.label(p->second) << " + " << t.label(p->first) << " = " << t.label(ba) << "\n";
  } else {
    win["witness"] = nullptr;
  }
  doc["window"] = win;
  return kOk;
}

int cmd_validate(const std::string& path, json& doc, std::ostream& text) {
  const std::string content = read_file(path);
  doc["input"] = describe_input(path, content);
  switch (file_kind(path)) {
    case FileKind::Pea: {
      const auto t = parse_pea(content);
      const auto r = validate_axioms(t);
      doc["axioms"] = report::axioms(t, r);
      doc["elements"] = t.size();
      text << t.name() << ": " << t.size() << " elements, axioms " << (r.passed() ? "pass" : "FAIL") << "\n";
      for (const auto& v : r.violations) {
        text << "  (" << v.axiom << ")";
        for (auto id : v.witness) text << ' ' << t.label(id);
        text << ": " << v.detail << "\n";
      }
      return r.passed() ? kOk : kAxiomViolation;
    }
    case FileKind::Pmv: {
      const auto t = parse_pmv(content);
      const auto r = validate_pmv(t);
      doc["axioms"] = report::pmv_axioms(t, r);
      doc["elements"] = t.size();
      text << t.name() << ": " << t.size() << " elements, A1-A8 " << (r.passed() ? "pass" : "FAIL") << "\n";
      for (const auto& v : r.violations) text << "  " << v.axiom << ": " << v.detail << "\n";
      return r.passed() ? kOk : kAxiomViolation;
    }
    case FileKind::Grp: {
      const auto gs = parse_grp(content);
      const auto check = check_presentation(gs.group, 2);
      doc["presentation"] = {{"strict", check.strict}, {"normal", check.normal}, {"directed", check.directed},
                             {"problems", check.problems}, {"window_radius", 2}};
      text << gs.group.label() << ": strict " << yes_no(check.strict) << ", normal " << yes_no(check.normal)
           << ", directed " << yes_no(check.directed) << " (window radius 2)\n";
      for (const auto& p : check.problems) text << "  " << p << "\n";
      if (!check.ok()) return kAxiomViolation;
      const auto su = check_strong_unit(gs.group, gs.unit);
      json bounds = json::array();
      for (const auto& [g, n] : su.bounds) bounds.push_back({{"element", report::group_element(g)}, {"n", n}});
      doc["strong_unit"] = {{"unit", report::group_element(su.unit)}, {"bounds", bounds}};
      text << "strong unit " << to_string(su.unit) << " verified\n";
      return kOk;
    }
    case FileKind::Wtab:
      return validate_window(parse_wtab(content), doc, text);
    default:
      throw UsageError("validate expects a .pea, .pmv, .grp or .wtab file");
  }
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeFlags {
  bool riesz = false;
  bool states = false;
  bool pmv = false;
  bool timing = false;
  std::string decompose;
};

void analyze_pmv_roundtrip(const FiniteTable& table, const PmvTable* original, json& doc, std::ostream& text,
                           Stopwatch& clock) {
  json out;
  if (original) {
    const auto back = pea_to_pmv(table);
    out["round_trip"] = back == *original;
    const auto a = enumerate_states(pmv_state_system(*original));
    const auto b = state_polytope(table);
    out["states_coincide"] = a.vertices == b.vertices;
    out["applicable"] = true;
  } else {
    const bool rdp2 = clock.time("rdp2", [&] { return has_rdp2(table).holds; });
    out["applicable"] = rdp2;
    if (rdp2) {
      const auto m = pea_to_pmv(table);
      out["valid"] = validate_pmv(m).passed();
      out["round_trip"] = same_partial_table(pmv_to_pea(m), table);
      const auto a = enumerate_states(pmv_state_system(m));
      const auto b = state_polytope(table);
      out["states_coincide"] = a.vertices == b.vertices;
    }
  }
  text << "pmv: ";
  if (!out["applicable"].get<bool>()) {
    text << "not applicable (no RDP2)\n";
  } else {
    text << "round trip " << yes_no(out["round_trip"].get<bool>()) << ", states coincide "
         << yes_no(out["states_coincide"].get<bool>()) << "\n";
  }
  doc["pmv"] = out;
}

int cmd_analyze(const std::string& path, AnalyzeFlags flags, const Options& opt, json& doc, std::ostream& text) {
  const std::string content = read_file(path);
  doc["input"] = describe_input(path, content);
  if (!flags.riesz && !flags.states && !flags.pmv && flags.decompose.empty()) flags.riesz = flags.states = true;
  Stopwatch clock(flags.timing);

  FiniteTable table;
  std::optional<PmvTable> pmv;
  switch (file_kind(path)) {
    case FileKind::Pea: {
      table = parse_pea(content);
      const auto r = clock.time("axioms", [&] { return validate_axioms(table); });
      doc["axioms"] = report::axioms(table, r);
      if (!r.passed()) {
        text << table.name() << ": axioms FAIL\n";
        return kAxiomViolation;
      }
      break;
    }
    case FileKind::Pmv: {
      pmv = parse_pmv(content);
      const auto r = clock.time("axioms", [&] { return validate_pmv(*pmv); });
      doc["axioms"] = report::pmv_axioms(*pmv, r);
      if (!r.passed()) {
        text << pmv->name() << ": A1-A8 FAIL\n";
        return kAxiomViolation;
      }
      table = pmv_to_pea(*pmv);
      break;
    }
    default:
      throw UsageError("analyze expects a .pea or .pmv file");
  }
  doc["elements"] = json(table.labels());
  doc["commutative"] = is_commutative(table);
  doc["symmetric"] = is_symmetric(table);
  text << (table.name().empty() ? std::filesystem::path(path).stem().string() : table.name()) << ": "
       << table.size() << " elements, commutative " << yes_no(is_commutative(table)) << ", symmetric "
       << yes_no(is_symmetric(table)) << "\n";

  if (flags.riesz) {
    const auto r = clock.time("riesz", [&] { return ladder_report(table); });
    doc["riesz"] = report::riesz(table, r);
    text << "riesz:";
    for (auto p : kRieszLadder) text << ' ' << to_string(p) << '=' << (r.get(p).holds ? 'T' : 'F');
    text << "\n";
  }

  std::optional<StatePolytope> polytope;
  auto need_polytope = [&]() -> const StatePolytope& {
    if (!polytope) polytope = clock.time("states", [&] { return state_polytope(table); });
    return *polytope;
  };
  if (flags.states) {
    const auto& p = need_polytope();
    const auto c = classify(p);
    doc["state_space"] = report::state_space(p);
    doc["classification"] = {{"vertex_count", c.vertex_count}, {"choquet", c.choquet}, {"bauer", c.bauer},
                             {"note", c.note}};
    text << "state space: " << to_string(c.kind) << ", " << p.vertices.size() << " vertices, dim " << p.affine_dim
         << "\n";
    for (const auto& v : p.vertices) text << "  " << text_vector(report::rational_vector(v.values)) << "\n";
  }
  if (!flags.decompose.empty()) {
    const auto s = parse_state(read_file(flags.decompose), table);
    validate_state(table, s);
    const auto& p = need_polytope();
    const auto rm = clock.time("decompose", [&] { return representing_measures(p, s); });
    const auto aff = aff_state_correspondence(table, p, s, opt.seed);
    json d = report::representing(rm);
    d["state"] = report::rational_vector(s.values);
    d["affine_functional"] = {{"evaluations_match", aff.evaluations_match}, {"normalized", aff.normalized},
                              {"positive", aff.positive}, {"positivity_checks", aff.positivity_checks},
                              {"seed", opt.seed}};
    doc["decomposition"] = d;
    text << "representing measure (" << rm.note << "):\n";
    for (std::size_t i = 0; i < rm.primary.support.size(); ++i) {
      text << "  " << to_string(rm.primary.weights[i]) << " at "
           << text_vector(report::rational_vector(rm.primary.support[i].values)) << "\n";
    }
    if (rm.second) {
      text << "second measure:\n";
      for (std::size_t i = 0; i < rm.second->support.size(); ++i) {
        text << "  " << to_string(rm.second->weights[i]) << " at "
             << text_vector(report::rational_vector(rm.second->support[i].values)) << "\n";
      }
    }
  }
  if (flags.pmv) analyze_pmv_roundtrip(table, pmv ? &*pmv : nullptr, doc, text, clock);
  if (clock.on()) doc["timing_us"] = clock.timings();
  return kOk;
}

// --- gamma ------------------------------------------------------------------

int cmd_gamma(const std::string& path, int radius, const std::string& out_path, json& doc, std::ostream& text) {
  const std::string content = read_file(path);
  doc["input"] = describe_input(path, content);
  const auto gs = parse_grp(content);
  const auto interval = gamma_interval(gs.group, gs.unit);
  const std::string label = gs.group.label().empty() ? "G" : gs.group.label();
  const std::vector<std::string> header{"interval [0," + to_string(gs.unit) + "] of " + label,
                                        "generated by pealab " + std::string(version())};
  std::string body;
  if (interval.is_finite()) {
    const auto& t = interval.finite().table;
    body = write_pea(t, header);
    doc["realization"] = "finite";
    doc["elements"] = t.size();
  } else {
    const auto w = window_table(interval, radius);
    auto h = header;
    h.push_back(interval.lazy().notice);
    body = write_wtab(w, h);
    doc["realization"] = "lazy";
    doc["notice"] = interval.lazy().notice;
    std::ostringstream ignored;
    validate_window(ParsedWindow{w.table, w.unknown, w.radius}, doc, ignored);
  }
  doc["table"] = body;
  if (!out_path.empty()) {
    write_file(out_path, body);
    doc["written"] = out_path;
    text << (interval.is_finite() ? "finite" : "lazy") << " interval written to " << out_path << "\n";
  } else {
    text << body;
  }
  return kOk;
}

// --- corpus -----------------------------------------------------------------

int cmd_corpus(const std::string& dir, json& doc, std::ostream& text) {
  const auto paths = corpus::write(dir);
  json names = json::array();
  for (const auto& p : paths) {
    names.push_back(std::filesystem::path(p).filename().string());
    text << p << "\n";
  }
  doc["files"] = names;
  doc["count"] = paths.size();
  return kOk;
}

// --- hom --------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<RationalVector> parse_gens(const std::string& s) {
  std::vector<RationalVector> out;
  for (const auto& h : split(s, ';')) {
    RationalVector v;
    for (const auto& x : split(h, ',')) {
      try {
        v.push_back(parse_rational(x));
      } catch (const Error& e) {
        throw UsageError("--gens: " + std::string(e.what()));
      }
    }
    if (!out.empty() && v.size() != out.front().size()) throw UsageError("--gens: homomorphisms differ in length");
    out.push_back(std::move(v));
  }
  return out;
}

GroupElement parse_point(const std::string& s) {
  GroupElement g;
  for (const auto& x : split(s, ',')) {
    try {
      std::size_t used = 0;
      g.coords.push_back(std::stoll(x, &used));
      if (used != x.size()) throw std::invalid_argument(x);
    } catch (const std::exception&) {
      throw UsageError("--at: expected integers, got '" + x + "'");
    }
  }
  return g;
}

int cmd_hom(const std::string& op, const std::string& gens, const std::string& at, const std::string& grp, json& doc,
            std::ostream& text) {
  const auto values = parse_gens(gens);
  std::optional<PoGroupPresentation> g;
  if (!grp.empty()) {
    const std::string content = read_file(grp);
    doc["input"] = describe_input(grp, content);
    g = parse_grp(content).group;
  } else {
    g = PoGroupPresentation::free_abelian(values.front().size(), StandardCone{});
  }
  std::vector<GroupHom> fs;
  json fj = json::array();
  for (const auto& v : values) {
    fs.push_back(make_hom(*g, v));
    fj.push_back(report::rational_vector(v));
  }
  doc["operation"] = op;
  doc["homomorphisms"] = fj;
  std::optional<GroupElement> x;
  if (!at.empty()) {
    x = parse_point(at);
    doc["at"] = report::group_element(*x);
  }
  if (op == "jordan") {
    if (fs.size() != 1) throw UsageError("jordan takes exactly one homomorphism");
    const auto parts = jordan_decompose(fs.front(), *g);
    doc["positive"] = report::rational_vector(parts.positive.values);
    doc["negative"] = report::rational_vector(parts.negative.values);
    text << "positive part " << to_string(parts.positive) << "\nnegative part " << to_string(parts.negative) << "\n";
    if (x) {
      doc["values"] = {{"f", to_string(fs.front()(*x))}, {"positive", to_string(parts.positive(*x))},
                       {"negative", to_string(parts.negative(*x))}};
      text << "at " << to_string(*x) << ": " << to_string(parts.positive(*x)) << " - "
           << to_string(parts.negative(*x)) << " = " << to_string(fs.front()(*x)) << "\n";
    }
    return kOk;
  }
  const bool sup = op == "sup";
  auto eval = [&](const GroupElement& p) { return sup ? sup_homs(*g, fs, p) : inf_homs(*g, fs, p); };
  RationalVector gen_values;
  for (std::size_t i = 0; i < g->rank(); ++i) gen_values.push_back(eval(unit_vector(*g, i)));
  doc["generators"] = report::rational_vector(gen_values);
  text << op << " on generators " << to_string(GroupHom{gen_values}) << "\n";
  if (x) {
    const Rational v = eval(*x);
    doc["value"] = to_string(v);
    text << op << " at " << to_string(*x) << " = " << to_string(v) << "\n";
  }
  return kOk;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const IoError*>(&e)) return "io";
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  if (dynamic_cast<const InvalidState*>(&e)) return "invalid_state";
  if (dynamic_cast<const NotStrongUnit*>(&e)) return "not_strong_unit";
  if (dynamic_cast<const NotApplicable*>(&e)) return "not_applicable";
  if (dynamic_cast<const CapExceeded*>(&e)) return "cap_exceeded";
  if (dynamic_cast<const StructuralError*>(&e)) return "structural";
  return "domain";
}

}  // namespace

std::string_view version() { return PEALAB_VERSION; }

std::string input_hash(std::string_view content) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : content) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "fnv1a64:" + std::string(buf);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pealab: finite pseudo effect algebras, Riesz properties and state spaces"};
  app.set_version_flag("--version", "pealab " + std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON report");
  app.add_option("--seed", opt.seed, "Seed for randomized spot checks");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Parse and validate a .pea/.pmv/.grp/.wtab file");
  validate->add_option("file", file, "Input file")->required();

  AnalyzeFlags flags;
  auto* analyze = app.add_subcommand("analyze", "Riesz properties, state space, decompositions");
  analyze->add_option("file", file, "Input .pea or .pmv file")->required();
  analyze->add_flag("--riesz", flags.riesz, "Check the five Riesz properties");
  analyze->add_flag("--states", flags.states, "Enumerate and classify the state space");
  analyze->add_option("--decompose", flags.decompose, "State file to decompose over extreme states");
  analyze->add_flag("--pmv", flags.pmv, "Pseudo MV conversion and round trip");
  analyze->add_flag("--timing", flags.timing, "Include timings (makes reports run-dependent)");

  int radius = 2;
  std::string out_path;
  auto* gamma = app.add_subcommand("gamma", "Build the unit interval of a .grp presentation");
  gamma->add_option("file", file, "Input .grp file")->required();
  gamma->add_option("--radius", radius, "Window radius for infinite intervals");
  gamma->add_option("--out", out_path, "Write the table here instead of stdout");

  std::string dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Write the fixture corpus");
  corpus_cmd->add_option("outdir", dir, "Output directory")->required();

  std::string op, gens, at, grp;
  auto* hom = app.add_subcommand("hom", "sup/inf/jordan of homomorphisms into the reals");
  hom->add_option("op", op, "sup, inf or jordan")->required()->check(CLI::IsMember({"sup", "inf", "jordan"}));
  hom->add_option("--gens", gens, "Generator values, e.g. \"1,0;0,1\"")->required();
  hom->add_option("--at", at, "Evaluate at this cone element, e.g. \"1,1\"");
  hom->add_option("--grp", grp, "Presentation file (default: standard cone)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json doc = base_document(command);
  std::ostringstream text;
  int code = kOk;
  try {
    if (command == "validate") {
      code = cmd_validate(file, doc, text);
    } else if (command == "analyze") {
      code = cmd_analyze(file, flags, opt, doc, text);
    } else if (command == "gamma") {
      code = cmd_gamma(file, radius, out_path, doc, text);
    } else if (command == "corpus") {
      code = cmd_corpus(dir, doc, text);
    } else {
      code = cmd_hom(op, gens, at, grp, doc, text);
    }
  } catch (const std::exception& e) {
    const bool input = dynamic_cast<const ParseError*>(&e) || dynamic_cast<const IoError*>(&e) ||
                       dynamic_cast<const UsageError*>(&e);
    code = input ? kInputError : kDomainError;
    json error = {{"kind", error_kind(e)}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      error["line"] = pe->line();
      error["column"] = pe->column();
    }
    doc["error"] = error;
    err << "pealab " << command << ": " << e.what() << "\n";
  }
  doc["exit_code"] = code;
  if (opt.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return code;
}

}  // namespace pealab::cli
