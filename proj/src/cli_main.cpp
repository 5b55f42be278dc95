// Command-line front end: reports on the character catalog, the Hecke
// algebra, the encoded decomposition matrices, the derived bounds and the
// smallest-nontrivial-degree verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ree2f4/bounds.hpp"
#include "ree2f4/degrees.hpp"
#include "ree2f4/factors.hpp"

using json = nlohmann::ordered_json;
using namespace ree2f4;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct Options {
  std::string format = "text";
  std::string out;
  std::string data_dir = "data";
};

/// Rows-of-cells rendering shared by the text and csv formats.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_text(const Grid& g) {
  std::vector<size_t> width(g.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (size_t j = 0; j < row.size(); ++j)
      width[j] = std::max(width[j], row[j].size());
  };
  widen(g.header);
  for (const auto& row : g.rows) widen(row);
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << "  ";
      os << row[j];
      if (j + 1 < row.size())
        os << std::string(width[j] - row[j].size(), ' ');
    }
    os << "\n";
  };
  emit(g.header);
  for (const auto& row : g.rows) emit(row);
  return os.str();
}

std::string render_csv(const Grid& g) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      os << row[j];
    }
    os << "\n";
  };
  emit(g.header);
  for (const auto& row : g.rows) emit(row);
  return os.str();
}

/// A command's result: a json document plus a tabular view. "notes" precede
/// the table in text output.
struct Report {
  json doc;
  Grid grid;
  std::vector<std::string> notes;

  std::string render(const std::string& format) const {
    if (format == "json") return doc.dump(2) + "\n";
    if (format == "csv") return render_csv(grid);
    std::string text;
    for (const std::string& n : notes) text += n + "\n";
    text += render_text(grid);
    return text;
  }
};

void write_report(const Report& rep, const Options& opt) {
  std::string text = rep.render(opt.format);
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + opt.out);
  f << text;
}

std::string cell_str(const Cell& c) {
  if (c.star) return "*";
  if (c.value.is_zero()) return ".";
  return c.value.str();
}

std::string sym_str(const SymPoly& p) { return p.is_zero() ? "." : p.str(); }

PrimeCase parse_case(const std::string& name) {
  auto c = case_from_name(name);
  if (!c || (*c != PrimeCase::Linear && *c != PrimeCase::Phi4 &&
             *c != PrimeCase::Phi8p && *c != PrimeCase::Phi8m &&
             *c != PrimeCase::Ell3))
    throw CLI::ValidationError("--case",
                               "expected linear|phi4|phi8p|phi8m|ell3");
  return *c;
}

Int parse_ell(const std::string& text) {
  try {
    Int v(text);
    if (v < 0) throw std::invalid_argument("negative");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--ell", "expected a non-negative integer");
  }
}

// ---------------------------------------------------------------------------

Report cmd_order(int n) {
  Report rep;
  QPoly order = group_order();
  rep.doc["command"] = "order";
  rep.doc["n"] = n;
  rep.doc["q_squared"] = (Int(1) << (2 * n + 1)).str();
  rep.doc["order_polynomial"] = order.str();
  rep.doc["order"] = order.eval_int(n).str();
  json f = json::object();
  struct {
    const char* name;
    QPoly p;
    int e;
  } parts[] = {{"q^24", QPoly::q().pow(24), 1},
               {"phi1*phi2", factors::phi1t(), 2}, {"phi4", factors::phi4(), 2},
               {"phi8p", factors::phi8p(), 1}, {"phi8m", factors::phi8m(), 1},
               {"phi12", factors::phi12(), 1}, {"phi24p", factors::phi24p(), 1},
               {"phi24m", factors::phi24m(), 1}};
  rep.grid.header = {"factor", "polynomial", "exponent", "value"};
  for (const auto& part : parts) {
    f[part.name] = {{"polynomial", part.p.str()},
                    {"exponent", part.e},
                    {"value", part.p.eval_int(n).str()}};
    rep.grid.rows.push_back({part.name, part.p.str(), std::to_string(part.e),
                             part.p.eval_int(n).str()});
  }
  rep.doc["factors"] = std::move(f);
  rep.notes.push_back("group order at n=" + std::to_string(n) + ": " +
                      order.eval_int(n).str());
  return rep;
}

Report cmd_degrees(const Catalog& cat, int n, bool with_series) {
  Report rep;
  rep.doc["command"] = "degrees";
  rep.doc["n"] = n;
  rep.grid.header = {"label", "family", "series", "degree", "value"};
  json unip = json::array();
  for (const CharRecord& r : cat.unipotent_all()) {
    unip.push_back({{"label", r.label},
                    {"family", r.family},
                    {"series", r.series},
                    {"degree", r.degree.str()},
                    {"value", r.degree.eval_int(n).str()}});
    rep.grid.rows.push_back({r.label, std::to_string(r.family), r.series,
                             r.degree.str(), r.degree.eval_int(n).str()});
  }
  rep.doc["unipotent"] = std::move(unip);
  if (with_series) {
    json series = json::array();
    for (const SeriesType& t : cat.series_types()) {
      json members = json::array();
      for (const SeriesMember& m : t.members) {
        members.push_back({{"sublabel", m.sublabel},
                           {"degree", m.degree.str()},
                           {"value", m.degree.eval_int(n).str()}});
        rep.grid.rows.push_back({t.id + "/" + m.sublabel, "-", "-",
                                 m.degree.str(), m.degree.eval_int(n).str()});
      }
      series.push_back({{"id", t.id},
                        {"count", t.count.str()},
                        {"count_value", t.count.eval_int(n).str()},
                        {"members", std::move(members)}});
    }
    rep.doc["series_types"] = std::move(series);
  }
  return rep;
}

Report cmd_classify(int n, const Int& ell) {
  Report rep;
  PrimeInfo info = classify_prime(n, ell);
  rep.doc["command"] = "classify";
  rep.doc["n"] = n;
  rep.doc["ell"] = ell.str();
  rep.doc["case"] = case_name(info.cs);
  rep.doc["f"] = info.f;
  rep.doc["factor_value"] = info.factor_value.str();
  rep.doc["ell_pow_f"] = info.ell_pow_f.str();
  rep.grid.header = {"case", "f", "factor_value", "ell_pow_f"};
  rep.grid.rows.push_back({case_name(info.cs), std::to_string(info.f),
                           info.factor_value.str(), info.ell_pow_f.str()});
  rep.notes.push_back(case_name(info.cs) + " f=" + std::to_string(info.f));
  return rep;
}

Report cmd_hecke(int n, const Int& ell) {
  Report rep;
  HeckeDecompMatrix m = hecke_decomposition(n, ell);
  rep.doc["command"] = "hecke";
  rep.doc["n"] = n;
  rep.doc["ell"] = ell.str();
  rep.doc["case"] = case_name(classify_prime(n, ell).cs);
  rep.doc["columns"] = m.cols;
  json rows = json::array();
  rep.grid.header = {"rep"};
  for (const std::string& c : m.cols) rep.grid.header.push_back(c);
  for (size_t i = 0; i < m.rows.size(); ++i) {
    json row = {{"rep", m.rows[i]}, {"entries", m.entries[i]}};
    rows.push_back(std::move(row));
    std::vector<std::string> line = {m.rows[i]};
    for (int e : m.entries[i]) line.push_back(std::to_string(e));
    rep.grid.rows.push_back(std::move(line));
  }
  rep.doc["rows"] = std::move(rows);
  return rep;
}

Report cmd_matrix(const BlockData& data, PrimeCase c, int n, const Int& ell,
                  bool expand) {
  Report rep;
  const DecompMatrixData& m = data.matrix(c);
  rep.doc["command"] = "matrix";
  rep.doc["case"] = case_name(c);
  if (n > 0) {
    rep.doc["n"] = n;
    rep.doc["ell"] = ell.str();
  }
  rep.doc["columns"] = m.cols;
  rep.doc["series_tags"] = m.series_tags;
  rep.grid.header = {"character"};
  for (const std::string& col : m.cols) rep.grid.header.push_back(col);
  rep.grid.header.push_back("count");

  auto count_str = [&](const SymPoly& count) -> std::string {
    if (n > 0 && ell > 0)
      return relation_count_at(count, classify_prime(n, ell)).str();
    return sym_str(count);
  };

  json rows = json::array();
  for (const MatrixRow& row : m.rows) {
    json cells = json::array();
    std::vector<std::string> line = {row.label};
    for (const Cell& cell : row.entries) {
      cells.push_back(cell_str(cell));
      line.push_back(cell_str(cell));
    }
    rows.push_back({{"character", row.label},
                    {"basic", row.basic},
                    {"entries", std::move(cells)},
                    {"count", count_str(row.count)}});
    line.push_back(count_str(row.count));
    rep.grid.rows.push_back(std::move(line));
  }
  rep.doc["rows"] = std::move(rows);

  if (expand) {
    json ex = json::array();
    for (const ExpandedRow& row : expand_relations(m, data.relations(c))) {
      json cells = json::array();
      std::vector<std::string> line = {row.label};
      for (const SymPoly& e : row.entries) {
        cells.push_back(sym_str(e));
        line.push_back(sym_str(e));
      }
      ex.push_back({{"character", row.label},
                    {"entries", std::move(cells)},
                    {"count", count_str(row.count)}});
      line.push_back(count_str(row.count));
      rep.grid.rows.push_back(std::move(line));
    }
    rep.doc["expanded_relations"] = std::move(ex);
  }
  return rep;
}

Report cmd_bounds(const BlockData& data, const Catalog& cat, PrimeCase c,
                  int n, const Int& ell) {
  Report rep;
  rep.doc["command"] = "bounds";
  rep.doc["case"] = case_name(c);
  rep.doc["n"] = n;
  rep.doc["ell"] = ell.str();
  rep.grid.header = {"unknown", "lower", "upper", "rule", "projective"};
  json rows = json::array();
  if (c == PrimeCase::Linear) {
    rep.notes.push_back(
        "all decomposition numbers of this case are determined");
    rep.doc["bounds"] = std::move(rows);
    return rep;
  }
  BoundEngine eng(data, cat);
  auto lowers = (ell == 0) ? eng.lowers_generic(c) : eng.lowers_at(c, n, ell);
  auto uppers = eng.derive_uppers(c);
  for (const BoundRow& br : data.bounds(c).rows) {
    Int lo = lowers.count(br.unknown) ? lowers.at(br.unknown) : Int(0);
    std::string rule = "-";
    std::string proj = "-";
    for (const UpperDerivation& d : uppers)
      if (d.unknown == br.unknown) {
        rule = d.rule;
        proj = d.projective;
      }
    std::string up =
        (n > 0) ? br.upper.eval(n).str() : br.upper.str();
    rows.push_back({{"unknown", br.unknown},
                    {"lower", lo.str()},
                    {"upper", up},
                    {"upper_polynomial", br.upper.str()},
                    {"rule", rule},
                    {"projective", proj}});
    rep.grid.rows.push_back({br.unknown, lo.str(), up, rule, proj});
  }
  rep.doc["bounds"] = std::move(rows);
  return rep;
}

Report cmd_pins(const BlockData& data, const Catalog& cat, PrimeCase c, int n,
                const Int& ell) {
  Report rep;
  rep.doc["command"] = "pins";
  rep.doc["case"] = case_name(c);
  rep.doc["n"] = n;
  rep.doc["ell"] = ell.str();
  rep.grid.header = {"unknown", "value"};
  json rows = json::array();
  if (c != PrimeCase::Linear) {
    BoundEngine eng(data, cat);
    for (const auto& [unknown, value] : eng.corollary_pins(c, n, ell)) {
      rows.push_back({{"unknown", unknown}, {"value", value.str()}});
      rep.grid.rows.push_back({unknown, value.str()});
    }
  }
  rep.doc["pins"] = std::move(rows);
  return rep;
}

Report cmd_verify(const BlockData& data, const Catalog& cat, PrimeCase c,
                  int n, const Int& ell, int* exit_code) {
  Report rep;
  DegreeEngine eng(data, cat);
  DegreeReport dr = eng.verify_theorem(c, n, ell);
  rep.doc["command"] = "verify-smallest-degree";
  rep.doc["case"] = case_name(c);
  rep.doc["n"] = n;
  rep.doc["ell"] = ell.str();
  rep.doc["d0"] = dr.d0.str();
  rep.doc["holds"] = dr.holds;
  rep.doc["partial"] = dr.partial;
  rep.doc["unresolved"] = dr.unresolved;
  json entries = json::array();
  rep.grid.header = {"label", "kind", "value", "status", "method"};
  for (const DegreeStatus& st : dr.entries) {
    std::string status = st.equals_d0    ? "equals_d0"
                         : st.exceeds_d0 ? "exceeds_d0"
                         : st.exact      ? "below_d0"
                                         : "unresolved";
    entries.push_back({{"label", st.label},
                       {"exact", st.exact},
                       {"value", st.value.str()},
                       {"status", status},
                       {"method", st.method}});
    rep.grid.rows.push_back({st.label, st.exact ? "exact" : "lower_bound",
                             st.value.str(), status, st.method});
  }
  rep.doc["entries"] = std::move(entries);
  rep.doc["trace"] = dr.trace;
  rep.notes.push_back("d0 = " + dr.d0.str());
  rep.notes.push_back(std::string("holds: ") + (dr.holds ? "yes" : "no") +
                      (dr.partial ? " (partial: bounds too weak at ell=3)"
                                  : ""));
  for (const std::string& u : dr.unresolved)
    rep.notes.push_back("unresolved: " + u);
  for (const std::string& t : dr.trace) rep.notes.push_back("  " + t);
  if (!dr.holds && !dr.partial) *exit_code = kExitVerification;
  return rep;
}

Report cmd_validate(const Manifest& manifest, const BlockData& data,
                    const Catalog& cat, int* exit_code) {
  Report rep;
  rep.doc["command"] = "validate-tables";
  rep.grid.header = {"check", "result"};
  json checks = json::array();
  int failures = 0;
  auto check = [&](const std::string& name,
                   const std::vector<std::string>& problems) {
    bool ok = problems.empty();
    if (!ok) ++failures;
    checks.push_back(
        {{"check", name}, {"ok", ok}, {"problems", problems}});
    rep.grid.rows.push_back({name, ok ? "ok" : "FAIL"});
    for (const std::string& p : problems) rep.notes.push_back(name + ": " + p);
  };

  check("manifest ids load with matching checksums", [&] {
    std::vector<std::string> problems;
    for (const std::string& id : manifest.ids()) {
      try {
        manifest.load(id);
      } catch (const std::exception& e) {
        problems.push_back(e.what());
      }
    }
    return problems;
  }());

  for (PrimeCase c : BlockData::encoded_cases()) {
    const DecompMatrixData& m = data.matrix(c);
    std::vector<std::string> problems;
    if (!check_unitriangular(m)) problems.push_back("not unitriangular");
    check("matrix " + case_name(c) + " unitriangular", problems);
    check("matrix " + case_name(c) + " relation expansion",
          check_relation_expansion(m, data.relations(c)));
  }
  rep.doc["checks"] = std::move(checks);
  rep.doc["ok"] = (failures == 0);
  if (failures) *exit_code = kExitVerification;
  return rep;
}

Report cmd_selfcheck(const Manifest& manifest, const BlockData& data,
                     const Catalog& cat, int* exit_code) {
  Report rep;
  rep.doc["command"] = "selfcheck";
  rep.grid.header = {"check", "result"};
  json checks = json::array();
  int failures = 0;
  auto run = [&](const std::string& name, auto&& fn) {
    std::string problem;
    try {
      if (!fn()) problem = "failed";
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (!problem.empty()) ++failures;
    checks.push_back({{"check", name},
                      {"ok", problem.empty()},
                      {"problem", problem}});
    rep.grid.rows.push_back({name, problem.empty() ? "ok" : "FAIL"});
    if (!problem.empty()) rep.notes.push_back(name + ": " + problem);
  };

  run("manifest checksums", [&] {
    for (const std::string& id : manifest.ids()) manifest.load(id);
    return true;
  });
  run("square-sum of all character degrees equals the group order",
      [&] { return cat.sum_of_squares() == group_order(); });
  run("Hecke algebra relations for all seven representations", [&] {
    for (const std::string& name : hecke_row_order())
      if (!check_hecke_relations(build_rep(name))) return false;
    return true;
  });
  run("matrices unitriangular", [&] {
    for (PrimeCase c : BlockData::encoded_cases())
      if (!check_unitriangular(data.matrix(c))) return false;
    return true;
  });
  run("family block structure (good primes)", [&] {
    for (PrimeCase c : BlockData::encoded_cases()) {
      if (c == PrimeCase::Ell3) continue;
      if (!check_family_blocks(data.matrix(c), cat)) return false;
    }
    return true;
  });
  run("relation rows expand to the encoded continued rows", [&] {
    for (PrimeCase c : BlockData::encoded_cases()) {
      auto problems = check_relation_expansion(data.matrix(c),
                                               data.relations(c));
      if (!problems.empty()) return false;
    }
    return true;
  });
  run("principal-series submatrices match the Hecke decomposition", [&] {
    struct P {
      PrimeCase c;
      int n;
      long long ell;
    };
    for (const P& p : std::vector<P>{{PrimeCase::Linear, 1, 7},
                                     {PrimeCase::Phi4, 2, 11},
                                     {PrimeCase::Phi8p, 1, 13},
                                     {PrimeCase::Phi8m, 1, 5},
                                     {PrimeCase::Ell3, 1, 3}})
      if (!check_ps_embedding(data.matrix(p.c), p.n, Int(p.ell)))
        return false;
    return true;
  });
  run("derived bounds reproduce the encoded bound tables", [&] {
    BoundEngine eng(data, cat);
    for (PrimeCase c : BlockData::encoded_cases()) {
      if (c == PrimeCase::Linear) continue;
      if (!eng.validate_case(c, 60, 1000).empty()) return false;
    }
    return true;
  });
  run("rewrite rules reproduce the encoded inequality table", [&] {
    DegreeEngine eng(data, cat);
    auto derived = eng.derive_slot_rules(PrimeCase::Phi8p);
    const auto& encoded = data.slot_rules();
    if (derived.size() != encoded.size()) return false;
    for (size_t i = 0; i < derived.size(); ++i)
      if (derived[i].unknown != encoded[i].unknown ||
          derived[i].gamma != encoded[i].gamma ||
          derived[i].source != encoded[i].source ||
          derived[i].rhs != encoded[i].rhs)
        return false;
    return true;
  });
  run("smallest nontrivial degree verified at desk scale", [&] {
    DegreeEngine eng(data, cat);
    struct P {
      PrimeCase c;
      int n;
      long long ell;
    };
    for (const P& p : std::vector<P>{{PrimeCase::Linear, 1, 7},
                                     {PrimeCase::Phi4, 2, 11},
                                     {PrimeCase::Phi8p, 1, 13},
                                     {PrimeCase::Phi8m, 1, 5}})
      if (!eng.verify_theorem(p.c, p.n, Int(p.ell)).holds) return false;
    return true;
  });

  rep.doc["checks"] = std::move(checks);
  rep.doc["ok"] = (failures == 0);
  if (failures) *exit_code = kExitVerification;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2F4 modular decomposition matrix toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("REE2F4_DATA")) opt.data_dir = env;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write the report to this file");
  app.add_option("--data", opt.data_dir, "Data directory")
      ->capture_default_str();

  int n = 1;
  std::string ell_text = "0";
  std::string case_text;
  bool with_series = false;
  bool expand = false;

  auto* order = app.add_subcommand("order", "Group order and its factors");
  order->add_option("--n", n, "Exponent parameter (q^2 = 2^(2n+1))")
      ->required()
      ->check(CLI::Range(1, 64));

  auto* degrees =
      app.add_subcommand("degrees", "Ordinary character degree catalog");
  degrees->add_option("--n", n, "Exponent parameter")->required()
      ->check(CLI::Range(1, 64));
  degrees->add_flag("--series", with_series,
                    "Include the non-unipotent series types");

  auto* classify =
      app.add_subcommand("classify", "Prime case of (n, ell)");
  classify->add_option("--n", n, "Exponent parameter")->required()
      ->check(CLI::Range(1, 64));
  classify->add_option("--ell", ell_text, "Odd prime")->required();

  auto* hecke = app.add_subcommand(
      "hecke", "Modular decomposition of the Hecke algebra");
  hecke->add_option("--n", n, "Exponent parameter")->required()
      ->check(CLI::Range(1, 64));
  hecke->add_option("--ell", ell_text, "Odd prime")->required();

  auto* matrix =
      app.add_subcommand("matrix", "Encoded decomposition matrix of a case");
  matrix->add_option("--case", case_text, "Prime case")->required();
  matrix->add_option("--n", n, "Exponent parameter")
      ->check(CLI::Range(1, 64));
  matrix->add_option("--ell", ell_text, "Odd prime");
  matrix->add_flag("--expand-relations", expand,
                   "Append the recomputed relation-row expansions");

  auto* bounds = app.add_subcommand(
      "bounds", "Bounds on the unknown decomposition numbers");
  bounds->add_option("--case", case_text, "Prime case")->required();
  bounds->add_option("--n", n, "Exponent parameter")->required()
      ->check(CLI::Range(1, 64));
  bounds->add_option("--ell", ell_text, "Odd prime (0 = generic)")
      ->required();

  auto* pins = app.add_subcommand(
      "pins", "Unknowns pinned to a single value at (n, ell)");
  pins->add_option("--case", case_text, "Prime case")->required();
  pins->add_option("--n", n, "Exponent parameter")->required()
      ->check(CLI::Range(1, 64));
  pins->add_option("--ell", ell_text, "Odd prime")->required();

  auto* verify = app.add_subcommand(
      "verify-smallest-degree",
      "Verify that only two nontrivial Brauer characters attain the "
      "smallest nontrivial ordinary degree");
  verify->add_option("--case", case_text, "Prime case")->required();
  verify->add_option("--n", n, "Exponent parameter")->required()
      ->check(CLI::Range(1, 3));
  verify->add_option("--ell", ell_text, "Odd prime (0 = generic)")
      ->required();

  auto* validate = app.add_subcommand(
      "validate-tables", "Checksum and structural validation of the data");
  auto* selfcheck =
      app.add_subcommand("selfcheck", "Run the full invariant suite");

  // Let --format/--out/--data appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  int exit_code = kExitOk;
  try {
    Report rep;
    if (order->parsed()) {
      rep = cmd_order(n);
    } else if (classify->parsed()) {
      rep = cmd_classify(n, parse_ell(ell_text));
    } else if (hecke->parsed()) {
      rep = cmd_hecke(n, parse_ell(ell_text));
    } else {
      Manifest manifest(opt.data_dir);
      Catalog cat(manifest);
      if (degrees->parsed()) {
        rep = cmd_degrees(cat, n, with_series);
      } else {
        BlockData data(manifest);
        if (matrix->parsed())
          rep = cmd_matrix(data, parse_case(case_text), matrix->count("--n") ? n : 0,
                           parse_ell(ell_text), expand);
        else if (bounds->parsed())
          rep = cmd_bounds(data, cat, parse_case(case_text), n,
                           parse_ell(ell_text));
        else if (pins->parsed())
          rep = cmd_pins(data, cat, parse_case(case_text), n,
                         parse_ell(ell_text));
        else if (verify->parsed())
          rep = cmd_verify(data, cat, parse_case(case_text), n,
                           parse_ell(ell_text), &exit_code);
        else if (validate->parsed())
          rep = cmd_validate(manifest, data, cat, &exit_code);
        else if (selfcheck->parsed())
          rep = cmd_selfcheck(manifest, data, cat, &exit_code);
      }
    }
    write_report(rep, opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  }
  return exit_code;
}
