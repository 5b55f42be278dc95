#include "ree2f4/decomp.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace ree2f4 {

namespace {

const SymPoly& basic_entry(const MatrixRow& row, int j) {
  const Cell& c = row.entries[j];
  if (c.star)
    throw std::runtime_error("basic row " + row.label +
                             " has an undetermined entry");
  return c.value;
}

int cell_int(const SymPoly& v, const std::string& where) {
  if (!v.is_constant())
    throw std::runtime_error(where + ": entry is not constant: " + v.str());
  QPoly p = v.constant();
  if (p.degree() > 0 || p.low() < 0)
    throw std::runtime_error(where + ": entry depends on q: " + v.str());
  QS2 c = p.coeff(0);
  if (c.irr() != 0 || denominator(c.rat()) != 1)
    throw std::runtime_error(where + ": entry is not an integer: " + v.str());
  return static_cast<int>(numerator(c.rat()));
}

int family_of(const Catalog& catalog, const std::string& label) {
  for (const auto& rec : catalog.unipotent_all())
    if (rec.label == label) return rec.family;
  throw std::runtime_error("not a unipotent character: " + label);
}

}  // namespace

std::vector<ExpandedRow> expand_relations(const DecompMatrixData& m,
                                          const RelationTable& rels) {
  auto basic = m.basic_rows();
  std::vector<ExpandedRow> out;
  for (const auto& rr : rels.rows) {
    if (rr.coeffs.size() != basic.size())
      throw std::runtime_error("relation " + rr.label + " has wrong arity");
    ExpandedRow er;
    er.label = rr.label;
    er.count = rr.count;
    er.entries.assign(m.cols.size(), SymPoly());
    for (size_t i = 0; i < basic.size(); ++i) {
      if (rr.coeffs[i].is_zero()) continue;
      QPoly c{rr.coeffs[i]};
      for (size_t j = 0; j < m.cols.size(); ++j)
        er.entries[j] += basic_entry(*basic[i], static_cast<int>(j)).scaled(c);
    }
    out.push_back(std::move(er));
  }
  return out;
}

bool check_unitriangular(const DecompMatrixData& m) {
  auto basic = m.basic_rows();
  for (size_t i = 0; i < basic.size(); ++i) {
    for (size_t j = 0; j < m.cols.size(); ++j) {
      const Cell& c = basic[i]->entries[j];
      if (j == i) {
        if (c.star || c.value != SymPoly(1)) return false;
      } else if (j > i) {
        if (c.star || !c.value.is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<int> family_block_sizes(const DecompMatrixData& m,
                                    const Catalog& catalog) {
  auto basic = m.basic_rows();
  std::vector<int> sizes;
  int prev = 0;
  for (const auto* row : basic) {
    int fam = family_of(catalog, row->label);
    if (fam < prev)
      throw std::runtime_error("rows not ordered by family at " + row->label);
    if (fam == prev) {
      ++sizes.back();
    } else {
      sizes.push_back(1);
      prev = fam;
    }
  }
  return sizes;
}

bool check_family_blocks(const DecompMatrixData& m, const Catalog& catalog) {
  if (m.cse == PrimeCase::Ell3)
    throw std::runtime_error("corollary requires good prime");
  auto basic = m.basic_rows();
  std::vector<int> fam(basic.size());
  for (size_t i = 0; i < basic.size(); ++i)
    fam[i] = family_of(catalog, basic[i]->label);
  for (size_t i = 1; i < fam.size(); ++i)
    if (fam[i] < fam[i - 1]) return false;
  // Column j inherits the family of the basic row carrying its diagonal 1.
  for (size_t i = 0; i < basic.size(); ++i) {
    for (size_t j = 0; j < m.cols.size(); ++j) {
      const Cell& c = basic[i]->entries[j];
      if (fam[i] == fam[j]) {
        const SymPoly want = (i == j) ? SymPoly(1) : SymPoly();
        if (c.star || c.value != want) return false;
      } else if (fam[i] < fam[j]) {
        if (c.star || !c.value.is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> check_relation_expansion(const DecompMatrixData& m,
                                                 const RelationTable& rels) {
  std::vector<std::string> issues;
  auto expanded = expand_relations(m, rels);
  std::set<std::string> continued_labels;
  for (const auto& row : m.rows)
    if (!row.basic) continued_labels.insert(row.label);
  std::set<std::string> expanded_labels;
  for (const auto& er : expanded) expanded_labels.insert(er.label);
  if (continued_labels != expanded_labels)
    issues.push_back("continued rows and relation rows cover different labels");

  for (const auto& er : expanded) {
    const MatrixRow* enc = m.row(er.label);
    if (!enc || enc->basic) continue;
    if (enc->count != er.count)
      issues.push_back(er.label + ": count mismatch: encoded " +
                       enc->count.str() + " vs relation " + er.count.str());
    for (size_t j = 0; j < m.cols.size(); ++j) {
      const Cell& c = enc->entries[j];
      if (c.star) continue;  // wildcard
      if (c.value != er.entries[j]) {
        std::ostringstream os;
        os << er.label << " / " << m.cols[j] << ": encoded " << c.value.str()
           << " vs expanded " << er.entries[j].str();
        issues.push_back(os.str());
      }
    }
  }
  return issues;
}

std::map<std::string, SymPoly> brauer_degrees(const DecompMatrixData& m,
                                              const Catalog& catalog) {
  if (!check_unitriangular(m))
    throw std::runtime_error("matrix is not unitriangular");
  auto basic = m.basic_rows();
  std::vector<SymPoly> deg(basic.size());
  std::map<std::string, SymPoly> out;
  for (size_t i = 0; i < basic.size(); ++i) {
    SymPoly d{catalog.degree_of(basic[i]->label)};
    for (size_t k = 0; k < i; ++k)
      d -= basic_entry(*basic[i], static_cast<int>(k)) * deg[k];
    deg[i] = d;
    out[m.cols[i]] = std::move(d);
  }
  return out;
}

std::vector<std::vector<int>> ps_submatrix(const DecompMatrixData& m) {
  std::vector<int> cols = m.ps_columns();
  std::vector<std::vector<int>> out;
  for (const std::string& rep : hecke_row_order()) {
    const std::string& chi = fitting_labels().at(rep);
    const MatrixRow* row = m.row(chi);
    if (!row) throw std::runtime_error("missing matrix row " + chi);
    std::vector<int> line;
    for (int j : cols) {
      const Cell& c = row->entries[j];
      if (c.star)
        throw std::runtime_error("undetermined ps entry at " + chi);
      line.push_back(cell_int(c.value, chi + "/" + m.cols[j]));
    }
    out.push_back(std::move(line));
  }
  return out;
}

bool check_ps_embedding(const DecompMatrixData& m, int n, const Int& ell) {
  return hecke_decomposition(n, ell).entries == ps_submatrix(m);
}

}  // namespace ree2f4
