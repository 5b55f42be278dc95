#ifndef REE2F4_DECOMP_HPP
#define REE2F4_DECOMP_HPP

#include <map>
#include <string>
#include <vector>

#include "ree2f4/blockdata.hpp"
#include "ree2f4/hecke.hpp"

namespace ree2f4 {

/// A non-basic-set ordinary character expressed on the Brauer columns by
/// expanding its relation-row coefficients through the basic block.
struct ExpandedRow {
  std::string label;
  std::vector<SymPoly> entries;  // one per Brauer column
  SymPoly count;                 // polynomial in "L"
};

/// Expands every relation row: row(chi) = sum_j a_{chi,j} * basic_row(j).
/// Throws if a referenced basic row contains a star entry (none do).
std::vector<ExpandedRow> expand_relations(const DecompMatrixData& m,
                                          const RelationTable& rels);

/// True iff the basic-set block is lower triangular with unit diagonal.
bool check_unitriangular(const DecompMatrixData& m);

/// Checks the family-block structure (good primes): ordering rows and
/// columns by the seven unipotent character families, diagonal blocks are
/// identity matrices and blocks above the diagonal vanish. Throws
/// "corollary requires good prime" for the ell = 3 matrix.
bool check_family_blocks(const DecompMatrixData& m, const Catalog& catalog);

/// The seven family sizes (1, 2, 1, 13, 1, 2, 1) as realized by m's rows.
std::vector<int> family_block_sizes(const DecompMatrixData& m,
                                    const Catalog& catalog);

/// Compares the encoded continued rows against the recomputed expansions,
/// symbol for symbol ("*" in the encoded row matches anything). Returns the
/// list of mismatch descriptions (empty = pass). Also demands that the
/// continued rows and the relation rows cover the same labels with equal
/// count polynomials.
std::vector<std::string> check_relation_expansion(const DecompMatrixData& m,
                                                  const RelationTable& rels);

/// Symbolic Brauer-character degrees by forward substitution through the
/// unitriangular basic block:
///   deg(phi_j) = chi_j(1) - sum_{k<j} entry(chi_j, phi_k) * deg(phi_k).
/// Keyed by column label ("p1".."p21", "p5_1"); products of unknowns arise.
std::map<std::string, SymPoly> brauer_degrees(const DecompMatrixData& m,
                                              const Catalog& catalog);

/// The principal-series rows/columns of the decomposition matrix, arranged
/// like the Hecke-algebra decomposition matrix: rows are the seven Hecke
/// representations (via the Fitting correspondence), columns the ps-tagged
/// Brauer columns in matrix order. Entries must be constant integers.
std::vector<std::vector<int>> ps_submatrix(const DecompMatrixData& m);

/// True iff ps_submatrix(m) equals the entry grid of the Hecke-algebra
/// decomposition matrix computed at (n, ell).
bool check_ps_embedding(const DecompMatrixData& m, int n, const Int& ell);

}  // namespace ree2f4

#endif  // REE2F4_DECOMP_HPP
