#ifndef REE2F4_BOUNDS_HPP
#define REE2F4_BOUNDS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ree2f4/decomp.hpp"

namespace ree2f4 {

/// Multiplicities of the PIMs in a projective character, recovered from its
/// scalar products with the basic-set characters by forward substitution
/// through the unitriangular basic block:
///   m_k = (chi_k, Psi) - sum_{j<k} m_j * entry(chi_k, p_j).
/// Entries that depend on an undetermined ("*") scalar product are marked
/// unavailable; they still denote non-negative quantities and may be
/// discarded from lower-bound estimates.
struct MultVector {
  std::vector<bool> known;
  std::vector<SymPoly> m;
};

MultVector pim_multiplicities(
    const DecompMatrixData& m,
    const std::function<Cell(const std::string& chi)>& scalar);

/// Scalar-product accessor for a named projective: a psi column of the
/// case's scalar table, or an additional projective. Unlisted characters
/// pair to zero.
std::function<Cell(const std::string&)> projective_column(
    const BlockData& data, PrimeCase c, const std::string& label);

/// Replaces every unknown monomial by interval endpoints chosen by the sign
/// of its q-coefficient (positive -> lower bounds, negative -> upper bounds),
/// yielding a certified lower bound for the expression. Bounds come from the
/// case's encoded table; star unknowns are not allowed.
QPoly lower_substitute(const SymPoly& expr, const BoundsTable& bounds,
                       int n, const Int& ell);

/// Proves p(q) > 0 at q = 2^n sqrt(2) for every n >= n0: checks n0..9
/// exactly, then a leading-term domination argument covering all n >= 10.
bool positive_for_all_n(const QPoly& p, int n0 = 1);

/// Provenance record for one derived upper bound.
struct UpperDerivation {
  std::string unknown;
  std::string chi;         // character row supplying the scalar product
  std::string projective;  // psi column or additional projective
  std::string rule;        // "R1" (multiplicity 1), "R2" (scaled column),
                           // "R3" (multiplicity bounded through other bounds)
  QPoly multiplicity_lo;   // certified lower bound for the PIM multiplicity
  QPoly scalar;            // the scalar product used
  QPoly encoded;           // the encoded upper bound that was certified
};

/// Derives and certifies bounds on the unknown decomposition numbers of one
/// prime case from the non-negativity of decomposition numbers and the
/// encoded scalar-product columns.
class BoundEngine {
 public:
  BoundEngine(const BlockData& data, const Catalog& catalog);

  /// Lower bounds with every relation family assumed present (resp. only
  /// the families present for all (n, ell) of the case).
  std::map<std::string, Int> lowers_all_relations(PrimeCase c) const;
  std::map<std::string, Int> lowers_generic(PrimeCase c) const;
  /// Lower bounds at concrete (n, ell): relation families filtered by
  /// count positivity.
  std::map<std::string, Int> lowers_at(PrimeCase c, int n,
                                       const Int& ell) const;

  /// Certifies the encoded upper bound of every unknown of the case via the
  /// scalar-product columns; throws if any unknown cannot be certified.
  std::vector<UpperDerivation> derive_uppers(PrimeCase c) const;

  /// Unknowns whose lower and upper bounds coincide at (n, ell).
  std::map<std::string, Int> corollary_pins(PrimeCase c, int n,
                                            const Int& ell) const;

  /// Cross-validates the encoded bound tables: encoded unconditional lowers
  /// equal the generic derivation, encoded conditional lowers equal the
  /// concrete derivation for every n <= n_max and odd prime ell <= ell_max
  /// of the case, and every encoded upper is certified. Returns mismatch
  /// descriptions (empty = pass).
  std::vector<std::string> validate_case(PrimeCase c, int n_max = 200,
                                         int ell_max = 1000) const;

 private:
  struct EntryRow {
    std::string label;
    std::vector<SymPoly> entries;
    std::vector<bool> usable;  // undetermined entries are skipped
    SymPoly count;
    bool always = false;  // count positive for every attainable L
  };

  const std::vector<EntryRow>& case_rows(PrimeCase c) const;
  std::map<std::string, Int> fixpoint(PrimeCase c,
                                      const std::vector<bool>& active) const;
  std::map<std::string, Int> lowers_filtered(PrimeCase c,
                                             const PrimeInfo* info) const;

  const BlockData& data_;
  const Catalog& catalog_;
  mutable std::map<PrimeCase, std::vector<EntryRow>> rows_;
};

}  // namespace ree2f4

#endif  // REE2F4_BOUNDS_HPP
