#include "ree2f4/poly.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ree2f4 {

void QPoly::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  size_t top = c_.size();
  while (top > lead && c_[top - 1].is_zero()) --top;
  if (lead == top) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0 || top < c_.size()) {
    c_ = std::vector<QS2>(c_.begin() + static_cast<long>(lead),
                          c_.begin() + static_cast<long>(top));
    low_ += static_cast<int>(lead);
  }
}

QPoly QPoly::term(const QS2& c, int k) {
  QPoly p;
  if (!c.is_zero()) {
    p.low_ = k;
    p.c_ = {c};
  }
  return p;
}

int QPoly::n_terms() const {
  int n = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

int QPoly::degree() const {
  if (c_.empty()) return INT_MIN;
  return low_ + static_cast<int>(c_.size()) - 1;
}

QS2 QPoly::coeff(int k) const {
  if (c_.empty() || k < low_ || k > degree()) return QS2(0);
  return c_[static_cast<size_t>(k - low_)];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(degree(), o.degree());
  QPoly r;
  r.low_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo + 1), QS2(0));
  for (int k = lo; k <= hi; ++k)
    r.c_[static_cast<size_t>(k - lo)] = coeff(k) + o.coeff(k);
  r.normalize();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.low_ = low_ + o.low_;
  r.c_.assign(c_.size() + o.c_.size() - 1, QS2(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.normalize();
  return r;
}

bool QPoly::operator<(const QPoly& o) const {
  if (low_ != o.low_) return low_ < o.low_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = 0; i < c_.size(); ++i) {
    const QS2 d = c_[i] - o.c_[i];
    if (d.sign() != 0) return d.sign() < 0;
  }
  return false;
}

QPoly QPoly::scaled(const QS2& s) const {
  if (s.is_zero()) return QPoly();
  QPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

QPoly QPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("QPoly::pow: negative exponent");
  QPoly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

void QPoly::divmod(const QPoly& divisor, QPoly* quot, QPoly* rem) const {
  if (divisor.is_zero()) throw std::domain_error("QPoly: division by zero");
  QPoly q;
  QPoly r = *this;
  const int ddeg = divisor.degree();
  const QS2 dlead = divisor.leading();
  while (!r.is_zero() && r.degree() >= ddeg) {
    const QPoly t = QPoly::term(r.leading() / dlead, r.degree() - ddeg);
    q += t;
    r -= t * divisor;
  }
  *quot = q;
  *rem = r;
}

QPoly QPoly::exactdiv(const QPoly& divisor) const {
  if (is_zero()) return QPoly();
  // An exact quotient has low() - divisor.low(); shift the numerator up so
  // plain long division can reach it, then shift back (Laurent quotients).
  const int shift = std::max(0, divisor.low() - low());
  const QPoly num = shift > 0 ? *this * QPoly::term(QS2(1), shift) : *this;
  QPoly q, r;
  num.divmod(divisor, &q, &r);
  if (!r.is_zero())
    throw std::domain_error("QPoly: inexact division, remainder " + r.str());
  if (shift > 0) q = q * QPoly::term(QS2(1), -shift);
  return q;
}

QS2 QPoly::eval(int n) const {
  // q^k = 2^(n*k) * sqrt(2)^k; sqrt(2)^k = 2^(k/2) (k even) or
  // 2^((k-1)/2)*sqrt(2) (k odd). Negative exponents give exact rationals.
  QS2 acc(0);
  for (int k = low(); k <= degree(); ++k) {
    const QS2 c = coeff(k);
    if (c.is_zero()) continue;
    // total power of 2 in q^k, and whether a bare sqrt(2) remains
    const long long twos_num = static_cast<long long>(n) * k +
                               (k >= 0 ? k / 2 : (k - 1) / 2);
    const bool has_r2 = ((k % 2) + 2) % 2 == 1;
    Rat p2;
    if (twos_num >= 0) {
      p2 = Rat(Int(1) << twos_num);
    } else {
      p2 = Rat(Int(1), Int(1) << (-twos_num));
    }
    QS2 qpow = has_r2 ? QS2(Rat(0), p2) : QS2(p2, Rat(0));
    acc += c * qpow;
  }
  return acc;
}

Rat QPoly::eval_rat(int n) const {
  const QS2 v = eval(n);
  if (v.irr() != 0)
    throw std::domain_error("QPoly: value at n=" + std::to_string(n) +
                            " is irrational: " + v.str());
  return v.rat();
}

Int QPoly::eval_int(int n) const {
  const Rat v = eval_rat(n);
  if (boost::multiprecision::denominator(v) != 1)
    throw std::domain_error("QPoly: value at n=" + std::to_string(n) +
                            " is not an integer");
  return boost::multiprecision::numerator(v);
}

bool QPoly::integer_valued(int upto) const {
  for (int n = 1; n <= upto; ++n) {
    const QS2 v = eval(n);
    if (v.irr() != 0) return false;
    if (boost::multiprecision::denominator(v.rat()) != 1) return false;
  }
  return true;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= low(); --k) {
    const QS2 c = coeff(k);
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    // Pick a printable (coefficient, sign) pair.
    if (c.irr() == 0) {
      Rat a = c.rat();
      negative = a < 0;
      if (negative) a = -a;
      std::ostringstream cs;
      cs << a;
      body = cs.str();
      if (k != 0 && a == 1) body.clear();
    } else if (c.rat() == 0) {
      Rat b = c.irr();
      negative = b < 0;
      if (negative) b = -b;
      std::ostringstream cs;
      if (b != 1) cs << b << "*";
      cs << "r2";
      body = cs.str();
    } else {
      // Mixed coefficient: print parenthesized with internal signs.
      std::ostringstream cs;
      cs << "(" << c << ")";
      body = cs.str();
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? "-" : "+");
    }
    first = false;
    if (k == 0) {
      os << (body.empty() ? "1" : body);
    } else {
      if (!body.empty()) os << body << "*";
      if (k == 1) {
        os << "q";
      } else {
        os << "q^" << k;
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  return os << p.str();
}

}  // namespace ree2f4
