#include "ree2f4/blockdata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ree2f4/expr.hpp"

namespace ree2f4 {

namespace {

std::string case_key(PrimeCase c) { return case_name(c); }

Cell parse_data_cell(const RawTable& t, const RawTable::Row& row,
                     const std::string& row_label,
                     const std::string& col_label, const std::string& text) {
  if (text == ".") return Cell::zero();
  if (text == "*") return Cell::fresh_star("_" + row_label + "_" + col_label);
  try {
    return Cell{false, parse_cell(text)};
  } catch (const std::exception& e) {
    t.fail(row.line, "bad cell '" + text + "': " + e.what());
  }
}

SymPoly parse_count(const RawTable& t, const RawTable::Row& row,
                    const std::string& text) {
  if (text == "-") return SymPoly(1);
  try {
    return parse_cell(text);
  } catch (const std::exception& e) {
    t.fail(row.line, "bad count '" + text + "': " + e.what());
  }
}

QS2 parse_int_coeff(const RawTable& t, const RawTable::Row& row,
                    const std::string& text) {
  if (text == ".") return QS2(0);
  SymPoly p = parse_cell(text);
  if (!p.is_constant() || p.constant().degree() > 0 || p.constant().low() < 0)
    t.fail(row.line, "expected integer coefficient, got '" + text + "'");
  QS2 v = p.constant().coeff(0);
  if (v.irr() != 0 || denominator(v.rat()) != 1)
    t.fail(row.line, "expected integer coefficient, got '" + text + "'");
  return v;
}

QPoly parse_bound_cell(const RawTable& t, const RawTable::Row& row,
                       const std::string& text) {
  SymPoly p = parse_cell(text);
  if (!p.is_constant())
    t.fail(row.line, "bound must not contain unknowns: '" + text + "'");
  return p.constant();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

/// "c5_1" -> "chi5_1"; "p21" -> "chi21".
std::string chi_of_column(const std::string& col) {
  return "chi" + col.substr(1);
}

ScalarTable load_scalar(const RawTable& t, PrimeCase c) {
  ScalarTable s;
  s.cse = c;
  if (t.columns.empty() || t.columns[0] != "chi")
    throw std::runtime_error(t.id + ": expected leading 'chi' column");
  s.psis.assign(t.columns.begin() + 1, t.columns.end());
  for (const auto& row : t.rows) {
    if (row.cells.size() != t.columns.size())
      t.fail(row.line, "cell count mismatch");
    s.chis.push_back(row.cells[0]);
    std::vector<Cell> line;
    for (size_t j = 1; j < row.cells.size(); ++j)
      line.push_back(
          parse_data_cell(t, row, row.cells[0], s.psis[j - 1], row.cells[j]));
    s.cells.push_back(std::move(line));
  }
  return s;
}

RelationTable load_relations(const RawTable& t, PrimeCase c) {
  RelationTable r;
  r.cse = c;
  if (t.columns.size() < 3 || t.columns.front() != "label" ||
      t.columns.back() != "count")
    throw std::runtime_error(t.id + ": expected label/c.../count columns");
  for (size_t j = 1; j + 1 < t.columns.size(); ++j)
    r.basis.push_back(chi_of_column(t.columns[j]));
  for (const auto& row : t.rows) {
    if (row.cells.size() != t.columns.size())
      t.fail(row.line, "cell count mismatch");
    RelationRow rr;
    rr.label = row.cells[0];
    for (size_t j = 1; j + 1 < row.cells.size(); ++j)
      rr.coeffs.push_back(parse_int_coeff(t, row, row.cells[j]));
    rr.count = parse_count(t, row, row.cells.back());
    r.rows.push_back(std::move(rr));
  }
  return r;
}

DecompMatrixData load_matrix(const RawTable& t, PrimeCase c) {
  DecompMatrixData m;
  m.cse = c;
  if (t.columns.size() < 3 || t.columns.front() != "label" ||
      t.columns.back() != "count")
    throw std::runtime_error(t.id + ": expected label/p.../count columns");
  m.cols.assign(t.columns.begin() + 1, t.columns.end() - 1);
  bool in_basic = true;
  for (const auto& row : t.rows) {
    if (row.cells.size() != t.columns.size())
      t.fail(row.line, "cell count mismatch");
    if (row.cells[0] == "series") {
      m.series_tags.assign(row.cells.begin() + 1, row.cells.end() - 1);
      continue;
    }
    MatrixRow mr;
    mr.label = row.cells[0];
    for (size_t j = 1; j + 1 < row.cells.size(); ++j)
      mr.entries.push_back(
          parse_data_cell(t, row, mr.label, m.cols[j - 1], row.cells[j]));
    mr.count = parse_count(t, row, row.cells.back());
    mr.basic = in_basic;
    if (mr.label == "chi21") in_basic = false;  // last basic-set row
    m.rows.push_back(std::move(mr));
  }
  if (m.series_tags.size() != m.cols.size())
    throw std::runtime_error(t.id + ": missing or malformed series row");
  size_t n_basic = 0;
  for (const auto& r : m.rows) n_basic += r.basic ? 1 : 0;
  if (n_basic != m.cols.size())
    throw std::runtime_error(t.id + ": basic block is not square");
  return m;
}

BoundsTable load_bounds(const RawTable& t, PrimeCase c) {
  BoundsTable b;
  b.cse = c;
  for (const auto& row : t.rows) {
    if (row.cells.size() != 7) t.fail(row.line, "expected 7 cells");
    BoundRow br;
    br.unknown = row.cells[0];
    br.lower = parse_bound_cell(t, row, row.cells[1]);
    br.upper = parse_bound_cell(t, row, row.cells[2]);
    for (int k = 0; k < 2; ++k) {
      const std::string& ctext = row.cells[3 + 2 * k];
      const std::string& vtext = row.cells[4 + 2 * k];
      auto cond = Condition::parse(ctext);
      if (!cond) {
        if (vtext != "-") t.fail(row.line, "bound without condition");
        continue;
      }
      br.cond_lowers.push_back({*cond, parse_bound_cell(t, row, vtext)});
    }
    b.rows.push_back(std::move(br));
  }
  return b;
}

std::vector<ExtraProjective> load_extra(const RawTable& t) {
  std::vector<ExtraProjective> out;
  if (t.columns.size() < 3 || t.columns.front() != "label" ||
      t.columns.back() != "def")
    throw std::runtime_error(t.id + ": expected label/chi.../def columns");
  for (const auto& row : t.rows) {
    if (row.cells.size() != t.columns.size())
      t.fail(row.line, "cell count mismatch");
    ExtraProjective p;
    p.label = row.cells[0];
    p.construction = row.cells.back();
    for (size_t j = 1; j + 1 < row.cells.size(); ++j)
      p.products[t.columns[j]] =
          parse_data_cell(t, row, p.label, t.columns[j], row.cells[j]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SlotRule> load_slots(const RawTable& t) {
  std::vector<SlotRule> out;
  for (const auto& row : t.rows) {
    if (row.cells.size() != 4) t.fail(row.line, "expected 4 cells");
    SlotRule s;
    s.unknown = row.cells[0];
    SymPoly g = parse_cell(row.cells[1]);
    if (!g.is_constant() || g.constant().degree() != 0)
      t.fail(row.line, "gamma must be a constant");
    s.gamma = g.constant().coeff(0);
    s.source = row.cells[2];
    s.rhs = parse_cell(row.cells[3]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PinRow> load_pins(const RawTable& t) {
  std::vector<PinRow> out;
  for (const auto& row : t.rows) {
    if (row.cells.size() != 5) t.fail(row.line, "expected 5 cells");
    PinRow p;
    auto c = case_from_name(row.cells[0]);
    if (!c) t.fail(row.line, "unknown case '" + row.cells[0] + "'");
    p.cse = *c;
    p.n = std::stoi(row.cells[1]);
    p.ell = Int(row.cells[2]);
    p.unknown = row.cells[3];
    p.value = Int(row.cells[4]);
    out.push_back(std::move(p));
  }
  return out;
}

BlockFamily load_family(const RawTable& t, const std::string& id) {
  BlockFamily f;
  f.id = id;
  if (id == "rest") {
    for (const auto& ty : split(t.attr("types"), ',')) f.types.push_back(ty);
  } else {
    f.types.push_back(id);
  }
  bool has_count = t.columns.back() == "count";
  f.n_cols = static_cast<int>(t.columns.size()) - 2 - (has_count ? 1 : 0);
  for (const auto& row : t.rows) {
    if (row.cells.size() != t.columns.size())
      t.fail(row.line, "cell count mismatch");
    BlockFamilyRow fr;
    fr.variant = row.cells[0];
    fr.sublabel = row.cells[1];
    for (int j = 0; j < f.n_cols; ++j)
      fr.entries.push_back(parse_data_cell(t, row, fr.sublabel,
                                           t.columns[2 + j], row.cells[2 + j]));
    fr.count =
        has_count ? parse_count(t, row, row.cells.back()) : SymPoly(1);
    f.rows.push_back(std::move(fr));
  }
  return f;
}

std::vector<ProjConstruction> load_proj(const RawTable& t) {
  std::vector<ProjConstruction> out;
  for (const auto& row : t.rows) {
    if (row.cells.size() != 3) t.fail(row.line, "expected 3 cells");
    out.push_back({row.cells[0], row.cells[1], row.cells[2]});
  }
  return out;
}

G5Scalars load_g5(const RawTable& t) {
  G5Scalars g;
  g.basis = {"chi5_1", "chi5_reg", "chi5_St"};
  for (const auto& row : t.rows) {
    if (row.cells.size() != 5) t.fail(row.line, "expected 5 cells");
    if (row.cells[0] == "sc") {
      size_t i = g.sc.size();
      if (i >= g.basis.size() || row.cells[1] != g.basis[i])
        t.fail(row.line, "unexpected basic-set row order");
      std::vector<Cell> line;
      for (int j = 0; j < 3; ++j)
        line.push_back(parse_data_cell(t, row, row.cells[1],
                                       "u" + std::to_string(j + 1),
                                       row.cells[2 + j]));
      g.sc.push_back(std::move(line));
    } else if (row.cells[0] == "rel") {
      RelationRow rr;
      rr.label = row.cells[1];
      for (int j = 0; j < 3; ++j)
        rr.coeffs.push_back(parse_int_coeff(t, row, row.cells[2 + j]));
      rr.count = SymPoly(1);
      g.rels.push_back(std::move(rr));
    } else {
      t.fail(row.line, "unknown row kind '" + row.cells[0] + "'");
    }
  }
  if (g.sc.size() != 3) throw std::runtime_error(t.id + ": need 3 sc rows");
  return g;
}

}  // namespace

// ---------------------------------------------------------------- Condition

std::optional<Condition> Condition::parse(const std::string& text) {
  if (text.empty() || text == "-") return std::nullopt;
  Condition c;
  for (const auto& alt : split(text, '|')) {
    Atom a;
    if (alt.rfind("ell!=", 0) == 0) {
      a.is_ell = true;
      a.ell_ne = Int(alt.substr(5));
    } else if (alt.rfind("n=", 0) == 0) {
      auto mpos = alt.find('m');
      if (mpos == std::string::npos)
        throw std::invalid_argument("condition atom needs modulus: " + alt);
      for (const auto& r : split(alt.substr(2, mpos - 2), ','))
        a.residues.push_back(std::stoi(r));
      a.mod = std::stoi(alt.substr(mpos + 1));
      if (a.mod <= 0) throw std::invalid_argument("bad modulus in " + alt);
    } else {
      throw std::invalid_argument("bad condition atom: " + alt);
    }
    c.alternatives.push_back(std::move(a));
  }
  return c;
}

bool Condition::holds(int n, const Int& ell) const {
  if (ell == 0) return false;  // generic prime: nothing certified
  for (const auto& a : alternatives) {
    if (a.is_ell) {
      if (ell != a.ell_ne) return true;
    } else {
      int r = n % a.mod;
      if (std::find(a.residues.begin(), a.residues.end(), r) !=
          a.residues.end())
        return true;
    }
  }
  return false;
}

std::string Condition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < alternatives.size(); ++i) {
    if (i) os << "|";
    const Atom& a = alternatives[i];
    if (a.is_ell) {
      os << "ell!=" << a.ell_ne;
    } else {
      os << "n=";
      for (size_t j = 0; j < a.residues.size(); ++j)
        os << (j ? "," : "") << a.residues[j];
      os << "m" << a.mod;
    }
  }
  return os.str();
}

// --------------------------------------------------------------- BoundsTable

const BoundRow* BoundsTable::find(const std::string& unknown) const {
  for (const auto& r : rows)
    if (r.unknown == unknown) return &r;
  return nullptr;
}

QPoly BoundsTable::lower_at(const std::string& unknown, int n,
                            const Int& ell) const {
  const BoundRow* r = find(unknown);
  if (!r) throw std::invalid_argument("no bounds for unknown " + unknown);
  QPoly best = r->lower;
  for (const auto& cl : r->cond_lowers)
    if (cl.cond.holds(n, ell) && (cl.lower - best).eval(n).sign() > 0)
      best = cl.lower;
  return best;
}

// --------------------------------------------------------------- ScalarTable

int ScalarTable::chi_index(const std::string& label) const {
  auto it = std::find(chis.begin(), chis.end(), label);
  if (it == chis.end())
    throw std::invalid_argument("no scalar row " + label);
  return static_cast<int>(it - chis.begin());
}

int ScalarTable::psi_index(const std::string& label) const {
  auto it = std::find(psis.begin(), psis.end(), label);
  if (it == psis.end())
    throw std::invalid_argument("no scalar column " + label);
  return static_cast<int>(it - psis.begin());
}

const Cell& ScalarTable::at(const std::string& chi,
                            const std::string& psi) const {
  return cells[chi_index(chi)][psi_index(psi)];
}

Cell ExtraProjective::product(const std::string& chi) const {
  auto it = products.find(chi);
  return it == products.end() ? Cell::zero() : it->second;
}

// ------------------------------------------------------------ RelationTable

const RelationRow* RelationTable::find(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

Int relation_count_at(const SymPoly& count, const PrimeInfo& info) {
  SymPoly v = count.substituted("L", SymPoly(QPoly(QS2(Rat(info.ell_pow_f)))));
  if (!v.is_constant())
    throw std::runtime_error("count with unexpected unknowns: " + count.str());
  QPoly p = v.constant();
  if (p.degree() > 0 || p.low() < 0)
    throw std::runtime_error("count depends on q: " + count.str());
  QS2 c = p.coeff(0);
  if (c.irr() != 0 || denominator(c.rat()) != 1)
    throw std::runtime_error("count not an integer at L=" +
                             info.ell_pow_f.str() + ": " + count.str());
  return numerator(c.rat());
}

bool relation_exists(const RelationRow& row, int n, const Int& ell) {
  PrimeInfo info = classify_prime(n, ell);
  return relation_count_at(row.count, info) > 0;
}

// --------------------------------------------------------- DecompMatrixData

int DecompMatrixData::col_index(const std::string& label) const {
  auto it = std::find(cols.begin(), cols.end(), label);
  if (it == cols.end())
    throw std::invalid_argument("no matrix column " + label);
  return static_cast<int>(it - cols.begin());
}

const MatrixRow* DecompMatrixData::row(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

std::vector<const MatrixRow*> DecompMatrixData::basic_rows() const {
  std::vector<const MatrixRow*> out;
  for (const auto& r : rows)
    if (r.basic) out.push_back(&r);
  return out;
}

std::vector<int> DecompMatrixData::ps_columns() const {
  std::vector<int> out;
  for (size_t j = 0; j < series_tags.size(); ++j)
    if (series_tags[j] == "ps") out.push_back(static_cast<int>(j));
  return out;
}

std::string DecompMatrixData::basic_label(int i) const {
  return chi_of_column(cols[i]);
}

// --------------------------------------------------------------- BlockFamily

std::vector<const BlockFamilyRow*> BlockFamily::variant_rows(
    const std::string& v) const {
  std::vector<const BlockFamilyRow*> out;
  for (const auto& r : rows)
    if (r.variant == v) out.push_back(&r);
  return out;
}

// ----------------------------------------------------------------- BlockData

const std::vector<PrimeCase>& BlockData::encoded_cases() {
  static const std::vector<PrimeCase> cases = {
      PrimeCase::Linear, PrimeCase::Phi4, PrimeCase::Phi8p, PrimeCase::Phi8m,
      PrimeCase::Ell3};
  return cases;
}

BlockData::BlockData(const Manifest& manifest) {
  for (PrimeCase c : encoded_cases()) {
    const std::string key = case_key(c);
    matrices_[c] = load_matrix(manifest.load("matrix." + key), c);
    relations_[c] = load_relations(manifest.load("rels." + key), c);
    if (c != PrimeCase::Linear) {
      // The linear case needs no scalar-product or bound data: its basic
      // block is the identity matrix.
      scalars_[c] = load_scalar(manifest.load("scalar." + key), c);
      bounds_[c] = load_bounds(manifest.load("bounds." + key), c);
      proj_[c] = load_proj(manifest.load("proj." + key));
    }
  }
  extra_[PrimeCase::Phi8p] = load_extra(manifest.load("scalar_extra.phi8p"));
  extra_[PrimeCase::Phi8m] = load_extra(manifest.load("scalar_extra.phi8m"));
  slots_ = load_slots(manifest.load("ineq.phi8p"));
  pins_ = load_pins(manifest.load("pins.exact"));
  for (const std::string& id : {"g2", "g3", "g5", "g6", "g8", "g10", "rest"})
    families_.push_back(load_family(manifest.load("blocks." + id), id));
  g5_ = load_g5(manifest.load("scalar.phi4_g5"));

  for (const auto& [c, m] : matrices_) {
    const RelationTable& r = relations_.at(c);
    std::vector<std::string> basic;
    for (const auto* row : m.basic_rows()) basic.push_back(row->label);
    if (r.basis != basic)
      throw std::runtime_error("relation basis mismatch for case " +
                               case_name(c));
  }
}

const DecompMatrixData& BlockData::matrix(PrimeCase c) const {
  auto it = matrices_.find(c);
  if (it == matrices_.end())
    throw std::invalid_argument("no matrix for case " + case_name(c));
  return it->second;
}

const ScalarTable& BlockData::scalars(PrimeCase c) const {
  auto it = scalars_.find(c);
  if (it == scalars_.end())
    throw std::invalid_argument("no scalars for case " + case_name(c));
  return it->second;
}

const RelationTable& BlockData::relations(PrimeCase c) const {
  auto it = relations_.find(c);
  if (it == relations_.end())
    throw std::invalid_argument("no relations for case " + case_name(c));
  return it->second;
}

const BoundsTable& BlockData::bounds(PrimeCase c) const {
  auto it = bounds_.find(c);
  if (it == bounds_.end())
    throw std::invalid_argument("no bounds for case " + case_name(c));
  return it->second;
}

const std::vector<ExtraProjective>& BlockData::extra_projectives(
    PrimeCase c) const {
  static const std::vector<ExtraProjective> none;
  auto it = extra_.find(c);
  return it == extra_.end() ? none : it->second;
}

const BlockFamily& BlockData::block_family(const std::string& id) const {
  for (const auto& f : families_)
    if (f.id == id) return f;
  throw std::invalid_argument("no block family " + id);
}

const std::vector<ProjConstruction>& BlockData::projectives(
    PrimeCase c) const {
  static const std::vector<ProjConstruction> none;
  auto it = proj_.find(c);
  return it == proj_.end() ? none : it->second;
}

}  // namespace ree2f4
