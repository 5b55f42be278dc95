#ifndef REE2F4_QS2_HPP
#define REE2F4_QS2_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace ree2f4 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// An element of the real quadratic field Q(sqrt(2)), kept exact:
/// value = rat + irr * sqrt(2).
class QS2 {
 public:
  QS2() = default;
  QS2(Rat rational, Rat irrational)
      : rat_(std::move(rational)), irr_(std::move(irrational)) {}
  QS2(long long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  explicit QS2(Rat rational) : rat_(std::move(rational)) {}

  static QS2 sqrt2() { return QS2(Rat(0), Rat(1)); }

  const Rat& rat() const { return rat_; }
  const Rat& irr() const { return irr_; }

  bool is_zero() const { return rat_ == 0 && irr_ == 0; }
  bool is_rational() const { return irr_ == 0; }

  QS2 operator-() const { return QS2(-rat_, -irr_); }
  QS2 operator+(const QS2& o) const { return QS2(rat_ + o.rat_, irr_ + o.irr_); }
  QS2 operator-(const QS2& o) const { return QS2(rat_ - o.rat_, irr_ - o.irr_); }
  QS2 operator*(const QS2& o) const {
    return QS2(rat_ * o.rat_ + 2 * irr_ * o.irr_,
               rat_ * o.irr_ + irr_ * o.rat_);
  }
  QS2 operator/(const QS2& o) const;

  QS2& operator+=(const QS2& o) { return *this = *this + o; }
  QS2& operator-=(const QS2& o) { return *this = *this - o; }
  QS2& operator*=(const QS2& o) { return *this = *this * o; }
  QS2& operator/=(const QS2& o) { return *this = *this / o; }

  bool operator==(const QS2& o) const { return rat_ == o.rat_ && irr_ == o.irr_; }
  bool operator!=(const QS2& o) const { return !(*this == o); }

  /// Exact sign of rat + irr*sqrt(2): -1, 0 or +1. No floating point.
  int sign() const;

  bool operator<(const QS2& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QS2& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QS2& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QS2& o) const { return (*this - o).sign() >= 0; }

  /// Field conjugate a - b*sqrt(2).
  QS2 conj() const { return QS2(rat_, -irr_); }

  /// Rational lower/upper enclosures of the exact value, using the
  /// convergents 140/99 < sqrt(2) < 99/70. Used for symbolic-n sign
  /// thresholds; never for equality decisions.
  Rat enclose_lo() const;
  Rat enclose_hi() const;

  /// |rat| + |irr|*sqrt2 upper-estimated rationally; a valid bound for |value|.
  Rat abs_upper() const;

  std::string str() const;

 private:
  Rat rat_{0};
  Rat irr_{0};
};

std::ostream& operator<<(std::ostream& os, const QS2& v);

/// Parses a decimal integer or p/d rational. Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

}  // namespace ree2f4

#endif  // REE2F4_QS2_HPP
