#ifndef REE2F4_DEGREES_HPP
#define REE2F4_DEGREES_HPP

#include <map>
#include <string>
#include <vector>

#include "ree2f4/bounds.hpp"

namespace ree2f4 {

/// Exact numeric lower bound for a symbolic expression at concrete n:
/// every monomial coefficient is evaluated at q = 2^n sqrt(2) and, by its
/// sign, the unknowns are replaced by the evaluated lower (positive) or
/// upper (negative) bound of the case table. Sharper than the symbolic
/// per-q-power variant because whole coefficients cancel before the sign
/// is taken.
QS2 lower_value_at(const SymPoly& expr, const BoundsTable& bounds, int n,
                   const Int& ell);

/// Status of one irreducible Brauer character in the smallest-degree scan.
struct DegreeStatus {
  std::string label;  // Brauer column ("p21") or block entry ("g5/5_St")
  bool exact = false;
  QS2 value;          // exact degree, or certified lower bound, at n
  bool equals_d0 = false;
  bool exceeds_d0 = false;
  std::string method;  // "exact" / "interval" / "rewrite"
};

struct DegreeReport {
  PrimeCase cse = PrimeCase::NotDividing;
  int n = 0;
  Int ell;  // 0 = generic prime of the case (unconditional bounds only)
  Int d0;
  std::vector<DegreeStatus> entries;
  bool holds = false;    // exactly two characters at d0, all others above
  bool partial = false;  // ell = 3: bounds too weak for a full proof
  std::vector<std::string> unresolved;  // labels not proven to exceed d0
  std::vector<std::string> trace;       // rewrite/substitution log
};

/// Proves that every nontrivial irreducible Brauer character degree other
/// than the two smallest strictly exceeds the smallest nontrivial ordinary
/// degree, by interval substitution and, for the Steinberg column of the
/// two difficult cases, by projective-character rewrite rules.
class DegreeEngine {
 public:
  DegreeEngine(const BlockData& data, const Catalog& catalog);

  /// The five rewrite rules gamma * z >= rhs bounding the top negative
  /// unknown terms of the phi21 degree polynomial from below, derived from
  /// the projective-character columns (cases Phi8p and Phi8m only).
  std::vector<SlotRule> derive_slot_rules(PrimeCase c) const;

  /// Symbolic phi21 degree with each rule's leading term gamma*q^p*z
  /// replaced by q^p*rhs: a valid symbolic lower bound for deg(phi21).
  SymPoly rewritten_phi21(PrimeCase c) const;

  /// Certified lower bound for one Brauer-character degree at (n, ell);
  /// exact value when the column is unknown-free. ell = 0 restricts to the
  /// unconditional bounds. Appends human-readable steps to *trace if given.
  QS2 lower_bound_deg(const std::string& label, PrimeCase c, int n,
                      const Int& ell,
                      std::vector<std::string>* trace = nullptr) const;

  /// Full smallest-degree scan over the unipotent columns and all
  /// non-unipotent block families.
  DegreeReport verify_theorem(PrimeCase c, int n, const Int& ell) const;

 private:
  const std::map<std::string, SymPoly>& degrees(PrimeCase c) const;

  const BlockData& data_;
  const Catalog& catalog_;
  mutable std::map<PrimeCase, std::map<std::string, SymPoly>> degs_;
  mutable std::map<PrimeCase, std::vector<SlotRule>> slots_;
};

}  // namespace ree2f4

#endif  // REE2F4_DEGREES_HPP
