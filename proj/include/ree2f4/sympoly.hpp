#ifndef REE2F4_SYMPOLY_HPP
#define REE2F4_SYMPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "ree2f4/poly.hpp"

namespace ree2f4 {

/// Monomial in named unknowns, e.g. {x:1, j:1} for x*j. Empty = constant.
using Monomial = std::map<std::string, int>;

std::string monomial_str(const Monomial& m);

/// Polynomial in named unknowns with QPoly (q, sqrt2) coefficients.
/// Houses symbolic Brauer-character degrees (products of unknowns arise)
/// and scalar-product bookkeeping.
class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(QPoly c) { if (!c.is_zero()) terms_[{}] = std::move(c); }  // NOLINT
  SymPoly(long long c) : SymPoly(QPoly(c)) {}                        // NOLINT

  static SymPoly unknown(const std::string& name) {
    SymPoly p;
    p.terms_[{{name, 1}}] = QPoly(1);
    return p;
  }

  const std::map<Monomial, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  /// The coefficient of the empty monomial.
  QPoly constant() const;
  /// Coefficient of a given monomial.
  QPoly coeff(const Monomial& m) const;
  /// All unknown names that occur.
  std::vector<std::string> unknowns() const;
  /// Max total degree in the unknowns.
  int unknown_degree() const;

  SymPoly operator-() const;
  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
  SymPoly& operator-=(const SymPoly& o) { return *this = *this - o; }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
  bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  SymPoly scaled(const QPoly& s) const;
  /// Exact division of every coefficient by a QPoly (Laurent-exact).
  SymPoly exactdiv(const QPoly& divisor) const;

  /// Substitute one unknown by a SymPoly value.
  SymPoly substituted(const std::string& name, const SymPoly& value) const;
  /// Substitute every unknown using the map; unknowns absent from the map
  /// are kept.
  SymPoly substituted(const std::map<std::string, SymPoly>& values) const;

  /// Collect the coefficient of q^k across monomials: a SymPoly whose QPoly
  /// coefficients are constants.
  SymPoly q_coefficient(int k) const;

  /// Canonical string: monomials in map order, coefficients parenthesized
  /// when composite.
  std::string str() const;

 private:
  void prune();
  std::map<Monomial, QPoly> terms_;
};

std::ostream& operator<<(std::ostream& os, const SymPoly& p);

}  // namespace ree2f4

#endif  // REE2F4_SYMPOLY_HPP
