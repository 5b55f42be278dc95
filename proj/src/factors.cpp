#include "ree2f4/factors.hpp"

#include <stdexcept>

#include "ree2f4/expr.hpp"

namespace ree2f4 {
namespace factors {

namespace {
QPoly make(const char* text) { return parse_qpoly(text); }
}  // namespace

QPoly phi1() { static const QPoly p = make("q-1"); return p; }
QPoly phi2() { static const QPoly p = make("q+1"); return p; }
QPoly phi4() { static const QPoly p = make("q^2+1"); return p; }
QPoly phi8p() { static const QPoly p = make("q^2+r2*q+1"); return p; }
QPoly phi8m() { static const QPoly p = make("q^2-r2*q+1"); return p; }
QPoly phi12() { static const QPoly p = make("q^4-q^2+1"); return p; }
QPoly phi24p() { static const QPoly p = make("q^4+r2*q^3+q^2+r2*q+1"); return p; }
QPoly phi24m() { static const QPoly p = make("q^4-r2*q^3+q^2-r2*q+1"); return p; }
QPoly phi1t() { static const QPoly p = phi1() * phi2(); return p; }
QPoly phi8() { static const QPoly p = phi8p() * phi8m(); return p; }
QPoly phi24() { static const QPoly p = phi24p() * phi24m(); return p; }

const std::vector<Factor>& all() {
  static const std::vector<Factor> fs = {
      {"phi1", phi1()},     {"phi2", phi2()},     {"phi4", phi4()},
      {"phi8p", phi8p()},   {"phi8m", phi8m()},   {"phi12", phi12()},
      {"phi24p", phi24p()}, {"phi24m", phi24m()}, {"phi1t", phi1t()},
      {"phi8", phi8()},     {"phi24", phi24()},
  };
  return fs;
}

const QPoly& by_name(const std::string& name) {
  for (const auto& f : all())
    if (f.name == name) return f.poly;
  throw std::invalid_argument("unknown factor name: " + name);
}

}  // namespace factors

QPoly group_order() {
  static const QPoly order = [] {
    using namespace factors;
    QPoly p = QPoly::q().pow(24);
    p *= phi1().pow(2) * phi2().pow(2) * phi4().pow(2);
    p *= phi8p().pow(2) * phi8m().pow(2);
    p *= phi12() * phi24p() * phi24m();
    return p;
  }();
  return order;
}

}  // namespace ree2f4
