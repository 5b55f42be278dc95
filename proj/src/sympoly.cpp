#include "ree2f4/sympoly.hpp"

#include <ostream>
#include <set>
#include <sstream>

namespace ree2f4 {

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, e] : m) {
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

void SymPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

QPoly SymPoly::constant() const { return coeff({}); }

QPoly SymPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? QPoly() : it->second;
}

std::vector<std::string> SymPoly::unknowns() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) names.insert(name);
  return {names.begin(), names.end()};
}

int SymPoly::unknown_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& [name, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.terms_[m] += c;
  r.prune();
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [name, e] : m2) m[name] += e;
      r.terms_[m] += c1 * c2;
    }
  }
  r.prune();
  return r;
}

SymPoly SymPoly::scaled(const QPoly& s) const {
  SymPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
  r.prune();
  return r;
}

SymPoly SymPoly::exactdiv(const QPoly& divisor) const {
  SymPoly r;
  for (const auto& [m, c] : terms_) {
    // Allow Laurent quotients: divide via divmod on shifted numerators.
    // exactdiv on QPoly already supports Laurent lows.
    r.terms_[m] = c.exactdiv(divisor);
  }
  r.prune();
  return r;
}

SymPoly SymPoly::substituted(const std::string& name,
                             const SymPoly& value) const {
  SymPoly r;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(name);
    if (it == m.end()) {
      SymPoly t;
      t.terms_[m] = c;
      r += t;
      continue;
    }
    Monomial rest = m;
    const int e = it->second;
    rest.erase(name);
    SymPoly t;
    t.terms_[rest] = c;
    for (int i = 0; i < e; ++i) t *= value;
    r += t;
  }
  return r;
}

SymPoly SymPoly::substituted(const std::map<std::string, SymPoly>& values) const {
  SymPoly r = *this;
  for (const auto& [name, value] : values) r = r.substituted(name, value);
  return r;
}

SymPoly SymPoly::q_coefficient(int k) const {
  SymPoly r;
  for (const auto& [m, c] : terms_) {
    const QS2 ck = c.coeff(k);
    if (ck.sign() != 0) r.terms_[m] = QPoly(ck);
  }
  return r;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    const bool composite = c.n_terms() > 1;
    if (!first) os << " + ";
    first = false;
    if (m.empty()) {
      os << cs;
      continue;
    }
    if (cs == "1") {
      os << monomial_str(m);
    } else if (composite) {
      os << "(" << cs << ")*" << monomial_str(m);
    } else {
      os << cs << "*" << monomial_str(m);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymPoly& p) {
  return os << p.str();
}

}  // namespace ree2f4
