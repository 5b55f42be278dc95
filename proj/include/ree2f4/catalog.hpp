#ifndef REE2F4_CATALOG_HPP
#define REE2F4_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "ree2f4/poly.hpp"
#include "ree2f4/tables.hpp"

namespace ree2f4 {

/// Which of the coprime factor classes of |G| an odd prime divides.
enum class PrimeCase {
  Linear,        // ell | q^2 - 1
  Phi4,          // ell | q^2 + 1, ell > 3
  Phi8p,         // ell | q^2 + sqrt2 q + 1
  Phi8m,         // ell | q^2 - sqrt2 q + 1
  Ell3,          // ell = 3 (always divides q^2 + 1)
  CyclicDefect,  // ell | phi12 phi24p phi24m, ell > 3
  NotDividing,
};

std::string case_name(PrimeCase c);
/// Parses "linear", "phi4", "phi8p", "phi8m", "ell3", ... (case-insensitive).
std::optional<PrimeCase> case_from_name(const std::string& name);

struct PrimeInfo {
  PrimeCase cs = PrimeCase::NotDividing;
  int f = 0;          // ell-adic valuation of the divided factor
  Int factor_value;   // that factor, evaluated at n
  Int ell_pow_f;      // ell^f
};

/// Evaluates the coprime factors at n and tests divisibility by ell.
PrimeInfo classify_prime(int n, const Int& ell);

/// One ordinary irreducible character record.
struct CharRecord {
  std::string label;
  QPoly degree;
  int family = 0;            // 1..7, unipotent only
  std::string series;        // ps / 2B2a / 2B2b / c / n/a
  std::string conj_partner;  // empty if self-paired
  bool cuspidal = false;
  std::string meta;          // opaque disambiguation note
};

struct SeriesMember {
  std::string sublabel;  // "1", "a", "b", "qq", "St"
  QPoly degree;
};

struct SeriesType {
  std::string id;  // g2..g18
  QPoly count;     // number of Lusztig series of this type
  std::vector<SeriesMember> members;
};

/// The character catalog (unipotent + non-unipotent types), loaded from the
/// data directory and immutable afterwards.
class Catalog {
 public:
  explicit Catalog(const Manifest& manifest);

  const CharRecord& unipotent(int i) const;  // 1..21
  const std::vector<CharRecord>& unipotent_all() const { return unip_; }
  const std::vector<SeriesType>& series_types() const { return series_; }
  const SeriesType& series_type(const std::string& id) const;

  /// Degree of a non-unipotent character "chi<k>_<sub>", e.g. "chi5_1".
  const QPoly& nonunipotent_degree(const std::string& label) const;
  /// Degree polynomial for any catalog label (unipotent or non-unipotent).
  const QPoly& degree_of(const std::string& label) const;

  /// Sum over all irreducibles of degree^2, as an exact polynomial; equals
  /// group_order() iff the catalog transcription is consistent.
  QPoly sum_of_squares() const;

  /// Smallest degree of a nontrivial irreducible character, evaluated at n:
  /// the chi2/chi3 degree.
  Int d0(int n) const;
  const QPoly& d0_poly() const;

 private:
  std::vector<CharRecord> unip_;
  std::vector<SeriesType> series_;
};

}  // namespace ree2f4

#endif  // REE2F4_CATALOG_HPP
