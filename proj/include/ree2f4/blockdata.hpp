#ifndef REE2F4_BLOCKDATA_HPP
#define REE2F4_BLOCKDATA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ree2f4/catalog.hpp"
#include "ree2f4/sympoly.hpp"
#include "ree2f4/tables.hpp"

namespace ree2f4 {

/// One cell of a decomposition-number or scalar-product table. "*" cells
/// (undetermined in the source) are materialized as fresh unknowns whose
/// only a-priori constraint is non-negativity; the star flag is kept so
/// consistency checks can treat them as wildcards.
struct Cell {
  bool star = false;
  SymPoly value;

  static Cell zero() { return Cell{false, SymPoly()}; }
  static Cell fresh_star(const std::string& name) {
    return Cell{true, SymPoly::unknown(name)};
  }
};

/// "cond1" grammar of the bounds tables: alternatives joined by "|", atoms
/// "ell!=K" or "n=r1,r2,...mM" (n congruent to one of the residues mod M).
struct Condition {
  struct Atom {
    bool is_ell = false;  // true: ell != ell_ne;  false: n in residues mod mod
    Int ell_ne;
    std::vector<int> residues;
    int mod = 0;
  };
  std::vector<Atom> alternatives;

  /// Parses the grammar above; "-" (or empty) yields nullopt.
  static std::optional<Condition> parse(const std::string& text);

  /// ell == 0 encodes "a generic prime of the case": no condition can be
  /// certified, so holds() is false.
  bool holds(int n, const Int& ell) const;
  std::string str() const;
};

struct BoundRow {
  std::string unknown;
  QPoly lower;  // unconditional lower bound (an integer constant)
  QPoly upper;
  struct CondLower {
    Condition cond;
    QPoly lower;
  };
  std::vector<CondLower> cond_lowers;
};

struct BoundsTable {
  PrimeCase cse = PrimeCase::NotDividing;
  std::vector<BoundRow> rows;

  const BoundRow* find(const std::string& unknown) const;
  /// Strongest lower bound applicable at (n, ell); ell == 0 means generic.
  QPoly lower_at(const std::string& unknown, int n, const Int& ell) const;
};

/// Scalar products of ordinary characters (rows) with projective characters
/// (columns), one table per prime case.
struct ScalarTable {
  PrimeCase cse = PrimeCase::NotDividing;
  std::vector<std::string> chis;  // row labels, e.g. "chi18", "chi5_1"
  std::vector<std::string> psis;  // column labels, e.g. "psi13", "psi5_1"
  std::vector<std::vector<Cell>> cells;

  int chi_index(const std::string& label) const;
  int psi_index(const std::string& label) const;
  const Cell& at(const std::string& chi, const std::string& psi) const;
};

/// An additional projective character given by its scalar products with the
/// ordinary characters (all unlisted characters pair to 0).
struct ExtraProjective {
  std::string label;        // e.g. "psi13x"
  std::string construction; // e.g. "tensor(3,8)"
  std::map<std::string, Cell> products;  // chi label -> scalar product

  Cell product(const std::string& chi) const;  // zero if unlisted
};

/// One row of a relation table: a non-basic-set ordinary character written
/// as an integer combination of the basic set, with the number of such
/// characters as a polynomial in L = ell^f.
struct RelationRow {
  std::string label;
  std::vector<QS2> coeffs;  // over the basic set, integer values
  SymPoly count;            // polynomial in the unknown "L"
};

struct RelationTable {
  PrimeCase cse = PrimeCase::NotDividing;
  std::vector<std::string> basis;  // chi labels of the basic set
  std::vector<RelationRow> rows;

  const RelationRow* find(const std::string& label) const;
};

/// Number of ordinary characters a relation row accounts for, at concrete
/// (n, ell): its count polynomial evaluated at L = ell^f.
Int relation_count_at(const SymPoly& count, const PrimeInfo& info);
/// relation_count_at > 0.
bool relation_exists(const RelationRow& row, int n, const Int& ell);

/// A decomposition matrix over one prime case: basic-set rows (square,
/// lower unitriangular against the Brauer columns) followed by continued
/// rows for the remaining ordinary characters / character families.
struct MatrixRow {
  std::string label;
  std::vector<Cell> entries;
  SymPoly count;  // polynomial in "L"; 1 for basic rows
  bool basic = false;
};

struct DecompMatrixData {
  PrimeCase cse = PrimeCase::NotDividing;
  std::vector<std::string> cols;         // Brauer labels "p1", "p5_1", ...
  std::vector<std::string> series_tags;  // per column: ps / A1 / 2B2a / ... / c
  std::vector<MatrixRow> rows;

  int col_index(const std::string& label) const;
  const MatrixRow* row(const std::string& label) const;
  std::vector<const MatrixRow*> basic_rows() const;
  /// Indices of the principal-series columns (tag "ps").
  std::vector<int> ps_columns() const;
  /// Ordinary character label of basic row i ("chi" + suffix of cols[i]).
  std::string basic_label(int i) const;
};

/// Rewrite rule for one bold-face term of the phi21 degree polynomial:
/// gamma * unknown is bounded below by rhs (a polynomial in q and the other
/// unknowns), derived from the projective named in source.
struct SlotRule {
  std::string unknown;
  QS2 gamma;
  std::string source;
  SymPoly rhs;
};

struct PinRow {
  PrimeCase cse = PrimeCase::NotDividing;
  int n = 0;
  Int ell;
  std::string unknown;
  Int value;
};

/// Decomposition numbers of the characters over one semisimple element type,
/// with case-dependent variants.
struct BlockFamilyRow {
  std::string variant;   // phi8p / phi8m / linear / phi4 / phi12 / other / any
  std::string sublabel;  // "1", "a", "b", "St", "5_1", ...
  std::vector<Cell> entries;
  SymPoly count;  // polynomial in "L" (1 when the table has no count column)
};

struct BlockFamily {
  std::string id;                  // g2, g3, g5, g6, g8, g10, rest
  std::vector<std::string> types;  // series types covered (rest covers many)
  int n_cols = 0;
  std::vector<BlockFamilyRow> rows;

  std::vector<const BlockFamilyRow*> variant_rows(const std::string& v) const;
};

/// Construction provenance of the projectives psi1..psiN of one case.
struct ProjConstruction {
  std::string label;
  std::string construction;
  std::string note;
};

/// The g5 family in the non-cyclic case: scalar products of the three
/// basic-set characters with three projectives, plus the relation rows of
/// the remaining characters over the basic set.
struct G5Scalars {
  std::vector<std::string> basis;       // chi5_1, chi5_reg, chi5_St
  std::vector<std::vector<Cell>> sc;    // 3 x 3 scalar products
  std::vector<RelationRow> rels;        // chi6_1, chi6_St, chi15_1
};

/// Typed, validated view of all block-theoretic tables in the data
/// directory. Load-once, immutable afterwards.
class BlockData {
 public:
  explicit BlockData(const Manifest& manifest);

  /// The five encoded cases: Linear, Phi4, Phi8p, Phi8m, Ell3.
  static const std::vector<PrimeCase>& encoded_cases();

  const DecompMatrixData& matrix(PrimeCase c) const;
  const ScalarTable& scalars(PrimeCase c) const;
  const RelationTable& relations(PrimeCase c) const;
  const BoundsTable& bounds(PrimeCase c) const;  // not for Linear
  /// Additional projectives (cases Phi8p, Phi8m; empty otherwise).
  const std::vector<ExtraProjective>& extra_projectives(PrimeCase c) const;
  /// The five bold-face rewrite rules (case Phi8p).
  const std::vector<SlotRule>& slot_rules() const { return slots_; }
  const std::vector<PinRow>& pins() const { return pins_; }
  const BlockFamily& block_family(const std::string& id) const;
  const std::vector<BlockFamily>& block_families() const { return families_; }
  const std::vector<ProjConstruction>& projectives(PrimeCase c) const;
  const G5Scalars& g5_scalars() const { return g5_; }

 private:
  std::map<PrimeCase, DecompMatrixData> matrices_;
  std::map<PrimeCase, ScalarTable> scalars_;
  std::map<PrimeCase, RelationTable> relations_;
  std::map<PrimeCase, BoundsTable> bounds_;
  std::map<PrimeCase, std::vector<ExtraProjective>> extra_;
  std::vector<SlotRule> slots_;
  std::vector<PinRow> pins_;
  std::vector<BlockFamily> families_;
  std::map<PrimeCase, std::vector<ProjConstruction>> proj_;
  G5Scalars g5_;
};

}  // namespace ree2f4

#endif  // REE2F4_BLOCKDATA_HPP
