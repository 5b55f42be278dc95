#include "ree2f4/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace ree2f4 {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  SymPoly parse() {
    SymPoly v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos_) + " in \"" + s_ +
                                "\": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  SymPoly expr() {
    SymPoly v = term();
    while (true) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  SymPoly term() {
    SymPoly v = factor();
    while (true) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        v = divide(v, factor());
      } else {
        return v;
      }
    }
  }

  SymPoly divide(const SymPoly& num, const SymPoly& den) {
    if (!den.is_constant()) fail("division by an expression with unknowns");
    const QPoly d = den.constant();
    if (d.is_zero()) fail("division by zero");
    if (d.n_terms() != 1) fail("division only by constants or q-monomials");
    return num.exactdiv(d);
  }

  SymPoly factor() {
    bool neg = false;
    while (eat('-')) neg = !neg;
    SymPoly v = atom();
    if (eat('^')) {
      bool eneg = eat('-');
      const long long e = integer();
      if (eneg) {
        // Negative exponents: only for single-term constants (q^-1 etc.).
        SymPoly unit(1);
        for (long long i = 0; i < e; ++i) unit = divide(unit, v);
        v = unit;
      } else {
        SymPoly acc(1);
        for (long long i = 0; i < e; ++i) acc *= v;
        v = acc;
      }
    }
    return neg ? -v : v;
  }

  long long integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  SymPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return SymPoly(QPoly(QS2(Rat(integer()))));
    if (c == '(') {
      ++pos_;
      SymPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        name += s_[pos_++];
      }
      if (name == "q") return SymPoly(QPoly::q());
      if (name == "r2") return SymPoly(QPoly(QS2::sqrt2()));
      return SymPoly::unknown(name);
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

SymPoly parse_expr(const std::string& text) { return Parser(text).parse(); }

QPoly parse_qpoly(const std::string& text) {
  const SymPoly p = parse_expr(text);
  if (!p.is_constant())
    throw std::invalid_argument("expected a plain polynomial, got unknowns in \"" +
                                text + "\"");
  return p.constant();
}

}  // namespace ree2f4
