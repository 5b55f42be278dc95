#include "ree2f4/qs2.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ree2f4 {

namespace {

int rat_sign(const Rat& r) {
  if (r == 0) return 0;
  return r < 0 ? -1 : 1;
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace

QS2 QS2::operator/(const QS2& o) const {
  if (o.is_zero()) throw std::domain_error("QS2: division by zero");
  // Multiply by the conjugate; the norm a^2 - 2 b^2 is a nonzero rational.
  const Rat norm = o.rat_ * o.rat_ - 2 * o.irr_ * o.irr_;
  const QS2 num = *this * o.conj();
  return QS2(num.rat_ / norm, num.irr_ / norm);
}

int QS2::sign() const {
  const int sr = rat_sign(rat_);
  const int si = rat_sign(irr_);
  if (si == 0) return sr;
  if (sr == 0) return si;
  if (sr == si) return sr;
  // Opposite signs: compare |rat| with |irr|*sqrt(2) via squares.
  const Rat d = rat_ * rat_ - 2 * irr_ * irr_;
  if (d == 0) throw std::logic_error("QS2: sqrt(2) cannot be rational");
  // |rat| > |irr|*sqrt2  iff  d > 0; then the rational part dominates.
  return d > 0 ? sr : si;
}

// Convergent enclosure: 140/99 < sqrt(2) < 99/70.
Rat QS2::enclose_lo() const {
  static const Rat kLo(140, 99), kHi(99, 70);
  return rat_ + irr_ * (irr_ >= 0 ? kLo : kHi);
}

Rat QS2::enclose_hi() const {
  static const Rat kLo(140, 99), kHi(99, 70);
  return rat_ + irr_ * (irr_ >= 0 ? kHi : kLo);
}

Rat QS2::abs_upper() const {
  static const Rat kHi(99, 70);
  return rat_abs(rat_) + rat_abs(irr_) * kHi;
}

std::string QS2::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QS2& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  if (v.rat() != 0) {
    os << v.rat();
    first = false;
  }
  if (v.irr() != 0) {
    if (!first && v.irr() > 0) os << "+";
    if (v.irr() == -1) {
      os << "-";
    } else if (v.irr() != 1) {
      os << v.irr() << "*";
    }
    os << "r2";
  }
  return os;
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: " + text);
  }
}

}  // namespace ree2f4
