#ifndef REE2F4_FACTORS_HPP
#define REE2F4_FACTORS_HPP

#include <string>
#include <vector>

#include "ree2f4/poly.hpp"

namespace ree2f4 {

/// The named cyclotomic-like factors of the group order of 2F4(q^2).
/// phi8p*phi8m = q^4+1 and phi24p*phi24m = q^8-q^4+1 split only over
/// Q(sqrt(2)), which is why the coefficient field exists at all.
struct Factor {
  std::string name;
  QPoly poly;
};

namespace factors {
QPoly phi1();    // q - 1
QPoly phi2();    // q + 1
QPoly phi4();    // q^2 + 1
QPoly phi8p();   // q^2 + sqrt2*q + 1
QPoly phi8m();   // q^2 - sqrt2*q + 1
QPoly phi12();   // q^4 - q^2 + 1
QPoly phi24p();  // q^4 + sqrt2*q^3 + q^2 + sqrt2*q + 1
QPoly phi24m();  // q^4 - sqrt2*q^3 + q^2 - sqrt2*q + 1
QPoly phi1t();   // phi1*phi2 = q^2 - 1
QPoly phi8();    // q^4 + 1
QPoly phi24();   // q^8 - q^4 + 1

/// All named factors in a stable order.
const std::vector<Factor>& all();
/// Look up by name ("phi8p" etc.); throws on unknown name.
const QPoly& by_name(const std::string& name);
}  // namespace factors

/// |2F4(q^2)| = q^24 phi1^2 phi2^2 phi4^2 phi8p^2 phi8m^2 phi12 phi24p phi24m,
/// a degree-52 polynomial with purely rational coefficients.
QPoly group_order();

}  // namespace ree2f4

#endif  // REE2F4_FACTORS_HPP
