#include <doctest.h>

#include "ree2f4/bounds.hpp"
#include "ree2f4/expr.hpp"

using namespace ree2f4;

namespace {
const Manifest& manifest() {
  static Manifest m(REE2F4_DATA_DIR);
  return m;
}
const BlockData& data() {
  static BlockData d(manifest());
  return d;
}
const Catalog& cat() {
  static Catalog c(manifest());
  return c;
}
const BoundEngine& engine() {
  static BoundEngine e(data(), cat());
  return e;
}

Int lower_of(const std::map<std::string, Int>& m, const std::string& u) {
  auto it = m.find(u);
  return it == m.end() ? Int(0) : it->second;
}
}  // namespace

TEST_CASE("polynomial positivity certificates") {
  CHECK(positive_for_all_n(parse_qpoly("q^2-2")));
  // r2*q = 2^(n+1): vanishes minus 4 at n = 1, positive afterwards.
  CHECK_FALSE(positive_for_all_n(parse_qpoly("r2*q-4"), 1));
  CHECK(positive_for_all_n(parse_qpoly("r2*q-4"), 2));
  CHECK_FALSE(positive_for_all_n(parse_qpoly("2-q^2")));
  CHECK_FALSE(positive_for_all_n(QPoly(0)));
  CHECK_FALSE(positive_for_all_n(parse_qpoly("q^4-q^3-q^2-q-100"), 1));
  CHECK(positive_for_all_n(parse_qpoly("q^4-q^3-q^2-q-100"), 2));
  CHECK_FALSE(positive_for_all_n(parse_qpoly("q^2-100"), 1));
  CHECK(positive_for_all_n(parse_qpoly("q^2-100"), 4));
  // Laurent tails are handled: q - 100/q is positive from n = 4 on.
  CHECK(positive_for_all_n(parse_qpoly("q-100*q^-1"), 4));
  CHECK_FALSE(positive_for_all_n(parse_qpoly("q-100*q^-1"), 1));
}

TEST_CASE("generic lower bounds match the encoded tables") {
  auto p4 = engine().lowers_generic(PrimeCase::Phi4);
  CHECK(lower_of(p4, "a") == 2);
  CHECK(lower_of(p4, "b") == 1);
  CHECK(lower_of(p4, "c") == 1);
  CHECK(lower_of(p4, "d") == 2);
  CHECK(lower_of(p4, "e") == 2);
  CHECK(lower_of(p4, "a2") == 2);

  auto all4 = engine().lowers_all_relations(PrimeCase::Phi4);
  CHECK(lower_of(all4, "b") == 2);
  CHECK(lower_of(all4, "c") == 2);
  CHECK(lower_of(all4, "e") == 3);
  CHECK(lower_of(all4, "a") == 2);

  auto p8 = engine().lowers_generic(PrimeCase::Phi8p);
  CHECK(lower_of(p8, "h") == 1);
  CHECK(lower_of(p8, "j") == 1);
  CHECK(lower_of(p8, "s") == 1);
  CHECK(lower_of(p8, "u") == 1);
  CHECK(lower_of(p8, "w") == 1);
  CHECK(lower_of(p8, "x") == 1);
  CHECK(lower_of(p8, "a") == 0);
  auto all8 = engine().lowers_all_relations(PrimeCase::Phi8p);
  CHECK(lower_of(all8, "s") == 2);
  CHECK(lower_of(all8, "x") == 2);

  auto m8 = engine().lowers_generic(PrimeCase::Phi8m);
  for (const auto& u : {"a", "b", "c", "d", "e", "g", "h", "i", "j", "r",
                        "t", "u", "v", "w", "x"})
    CHECK(lower_of(m8, u) == 0);
  CHECK(lower_of(m8, "s") == 1);
  CHECK(lower_of(engine().lowers_all_relations(PrimeCase::Phi8m), "s") == 2);

  auto e3 = engine().lowers_generic(PrimeCase::Ell3);
  CHECK(lower_of(e3, "a") == 2);
  CHECK(lower_of(e3, "d") == 2);
  CHECK(lower_of(e3, "e") == 1);
  CHECK(lower_of(e3, "x15") == 1);
  CHECK(lower_of(e3, "x21") == 1);
  CHECK(lower_of(e3, "b") == 0);
  auto a3 = engine().lowers_all_relations(PrimeCase::Ell3);
  CHECK(lower_of(a3, "b") == 2);
  CHECK(lower_of(a3, "c") == 2);
  CHECK(lower_of(a3, "e") == 3);
}

TEST_CASE("concrete lower bounds honour relation counts") {
  // ell = 11 at n = 2: the last relation family is absent.
  auto at = engine().lowers_at(PrimeCase::Phi4, 2, Int(11));
  CHECK(lower_of(at, "b") == 1);
  CHECK(lower_of(at, "e") == 2);
  // ell = 43 at n = 3: present.
  auto at2 = engine().lowers_at(PrimeCase::Phi4, 3, Int(43));
  CHECK(lower_of(at2, "b") == 2);
  CHECK(lower_of(at2, "e") == 3);
  // ell = 3, n = 1: f = 2, both extra families present.
  auto at3 = engine().lowers_at(PrimeCase::Ell3, 1, Int(3));
  CHECK(lower_of(at3, "c") == 1);
  CHECK(lower_of(at3, "b") == 1);
  CHECK(lower_of(at3, "e") == 2);
  // ell = 3, n = 2: f = 1, none present.
  auto at4 = engine().lowers_at(PrimeCase::Ell3, 2, Int(3));
  CHECK(lower_of(at4, "b") == 0);
  CHECK(lower_of(at4, "e") == 1);
}

TEST_CASE("upper bounds certified for every unknown") {
  for (PrimeCase c : {PrimeCase::Phi4, PrimeCase::Phi8p, PrimeCase::Phi8m,
                      PrimeCase::Ell3}) {
    auto ups = engine().derive_uppers(c);
    CHECK(ups.size() == data().bounds(c).rows.size());
    for (const auto& u : ups) {
      INFO(case_name(c), " ", u.unknown, " via ", u.projective, " (", u.rule,
           ")");
      CHECK(!u.encoded.is_zero());
    }
  }

  auto find = [](const std::vector<UpperDerivation>& v,
                 const std::string& u) -> const UpperDerivation& {
    for (const auto& d : v)
      if (d.unknown == u) return d;
    throw std::runtime_error("missing " + u);
  };

  auto p8 = engine().derive_uppers(PrimeCase::Phi8p);
  CHECK(find(p8, "h").rule == "R2");
  CHECK(find(p8, "h").encoded == parse_qpoly("r2*q/4"));
  CHECK(find(p8, "x").rule == "R1");
  CHECK(find(p8, "u").encoded == parse_qpoly("(q^2+3*r2*q+4)/12"));
  CHECK(find(p8, "w").encoded == parse_qpoly("(q^2+r2*q+4)/4"));

  auto m8 = engine().derive_uppers(PrimeCase::Phi8m);
  CHECK(find(m8, "x").rule == "R3");
  CHECK(find(m8, "x").encoded == parse_qpoly("q/r2-2"));

  auto e3 = engine().derive_uppers(PrimeCase::Ell3);
  CHECK(find(e3, "a").encoded == parse_qpoly("q^2"));
  CHECK(find(e3, "d").encoded == parse_qpoly("q^4"));

  auto p4 = engine().derive_uppers(PrimeCase::Phi4);
  CHECK(find(p4, "a2").scalar == parse_qpoly("(q^2-r2*q)/4"));
}

TEST_CASE("corollary pins are exact") {
  auto p8 = engine().corollary_pins(PrimeCase::Phi8p, 1, Int(13));
  CHECK(p8 == std::map<std::string, Int>{{"h", 1}, {"j", 1}, {"x", 2}});

  auto m8 = engine().corollary_pins(PrimeCase::Phi8m, 1, Int(5));
  CHECK(m8 == std::map<std::string, Int>{{"a", 0},
                                         {"e", 0},
                                         {"j", 0},
                                         {"s", 1},
                                         {"t", 0},
                                         {"x", 0}});

  auto e3 = engine().corollary_pins(PrimeCase::Ell3, 1, Int(3));
  CHECK(e3 == std::map<std::string, Int>{{"c", 1}});

  // Same values as encoded in the pin table.
  for (const auto& pin : data().pins()) {
    auto got = engine().corollary_pins(pin.cse, pin.n, pin.ell);
    REQUIRE(got.count(pin.unknown) == 1);
    CHECK(got.at(pin.unknown) == pin.value);
  }
}

TEST_CASE("full cross-validation of the bound tables") {
  for (PrimeCase c : {PrimeCase::Phi4, PrimeCase::Phi8p, PrimeCase::Phi8m,
                      PrimeCase::Ell3}) {
    auto issues = engine().validate_case(c, 200, 1000);
    for (const auto& msg : issues) FAIL_CHECK(msg);
    CHECK(issues.empty());
  }
}
