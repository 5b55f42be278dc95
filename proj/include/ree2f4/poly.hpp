#ifndef REE2F4_POLY_HPP
#define REE2F4_POLY_HPP

#include <string>
#include <vector>

#include "ree2f4/qs2.hpp"

namespace ree2f4 {

/// Polynomial in the indeterminate q over Q(sqrt(2)).
///
/// Internally a Laurent polynomial: a dense coefficient block starting at
/// exponent low(). Negative exponents occur only in intermediate bound
/// expressions (e.g. a term sqrt(2)*x/q); all table data and degrees are
/// genuine polynomials (low() >= 0).
class QPoly {
 public:
  QPoly() = default;
  QPoly(const QS2& c) { if (!c.is_zero()) { low_ = 0; c_ = {c}; } }  // NOLINT
  QPoly(long long c) : QPoly(QS2(c)) {}                              // NOLINT

  /// c * q^k (k may be negative).
  static QPoly term(const QS2& c, int k);
  /// The indeterminate q.
  static QPoly q() { return term(QS2(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_polynomial() const { return c_.empty() || low_ >= 0; }
  /// Nonzero term count.
  int n_terms() const;
  /// Degree of the zero polynomial is INT_MIN; otherwise top exponent.
  int degree() const;
  int low() const { return c_.empty() ? 0 : low_; }
  /// Coefficient of q^k.
  QS2 coeff(int k) const;
  QS2 leading() const { return c_.empty() ? QS2(0) : c_.back(); }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  bool operator==(const QPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }
  bool operator<(const QPoly& o) const;  // arbitrary total order for maps

  QPoly scaled(const QS2& s) const;
  QPoly pow(int e) const;

  /// Quotient, throwing (and naming the remainder) unless division is exact.
  QPoly exactdiv(const QPoly& divisor) const;
  /// Quotient + remainder by standard long division (divisor != 0).
  void divmod(const QPoly& divisor, QPoly* quot, QPoly* rem) const;

  /// Value at q = 2^n * sqrt(2) (so q^2 = 2^(2n+1)); exact.
  QS2 eval(int n) const;
  /// eval(), demanding a rational result.
  Rat eval_rat(int n) const;
  /// eval(), demanding an integer result.
  Int eval_int(int n) const;

  /// True if eval(n) is a (rational) integer for all n in [1, upto].
  bool integer_valued(int upto = 10) const;

  /// Canonical string over tokens q and r2, highest power first,
  /// e.g. "q^2+r2*q+1" or "1/4*q^4-1/2*r2*q".
  std::string str() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<QS2> c_;  // c_[i] is the coefficient of q^(low_ + i)
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace ree2f4

#endif  // REE2F4_POLY_HPP
