#include <doctest.h>

#include "ree2f4/blockdata.hpp"
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
}  // namespace

TEST_CASE("condition grammar") {
  auto c = Condition::parse("ell!=11|n=27m55");
  REQUIRE(c.has_value());
  CHECK(c->holds(27, 11));
  CHECK(c->holds(1, 7));
  CHECK_FALSE(c->holds(1, 11));
  CHECK_FALSE(c->holds(1, 0));  // generic prime certifies nothing
  CHECK(c->str() == "ell!=11|n=27m55");

  auto d = Condition::parse("n=7,12m20");
  REQUIRE(d.has_value());
  CHECK(d->holds(7, 5));
  CHECK(d->holds(32, 5));
  CHECK_FALSE(d->holds(8, 5));
  CHECK_FALSE(Condition::parse("-").has_value());
  CHECK_THROWS_AS(Condition::parse("bogus"), std::invalid_argument);
}

TEST_CASE("all block tables load with expected shapes") {
  const BlockData& d = data();
  for (PrimeCase c : BlockData::encoded_cases()) {
    const DecompMatrixData& m = d.matrix(c);
    size_t want = (c == PrimeCase::Ell3) ? 19 : 21;
    CHECK(m.cols.size() == want);
    CHECK(m.basic_rows().size() == want);
    CHECK(m.series_tags.size() == want);
    if (c != PrimeCase::Linear) CHECK(d.scalars(c).psis.size() == want);
    CHECK(d.relations(c).basis.size() == want);
  }
  CHECK(d.matrix(PrimeCase::Phi8p).rows.size() == 26);
  CHECK(d.matrix(PrimeCase::Ell3).rows.size() == 27);
  CHECK(d.pins().size() == 10);
  CHECK(d.slot_rules().size() == 5);
  CHECK(d.block_family("g2").variant_rows("phi8p").size() == 4);
  CHECK(d.block_family("rest").types.size() == 11);
  CHECK(d.g5_scalars().rels.size() == 3);
  CHECK(d.extra_projectives(PrimeCase::Phi8p).size() == 3);
  CHECK(d.extra_projectives(PrimeCase::Phi8m).size() == 4);
  CHECK(d.extra_projectives(PrimeCase::Linear).empty());
}

TEST_CASE("scalar cells match the encoded polynomials") {
  const ScalarTable& s = data().scalars(PrimeCase::Phi8p);
  CHECK(s.at("chi18", "psi9").value == parse_expr("(q^2+3*r2*q+4)/12"));
  CHECK(s.at("chi21", "psi19").value == parse_expr("q/r2"));
  CHECK(s.at("chi19", "psi13").star);
  CHECK(s.at("chi1", "psi1").value == SymPoly(1));

  const auto& extra = data().extra_projectives(PrimeCase::Phi8p);
  CHECK(extra[0].label == "psi13x");
  CHECK(extra[0].product("chi13").value == parse_expr("q/r2"));
  CHECK(extra[0].product("chi21").value ==
        parse_expr("r2*q*(q^2+3*r2*q+4)/24"));
  CHECK(extra[0].product("chi2").value.is_zero());  // unlisted row
}

TEST_CASE("every determined table cell is integer-valued at n in 1..5") {
  const BlockData& d = data();
  for (PrimeCase c : BlockData::encoded_cases()) {
    if (c == PrimeCase::Linear) continue;
    for (const auto& row : d.scalars(c).cells)
      for (const Cell& cell : row) {
        if (cell.star || !cell.value.is_constant()) continue;
        CHECK(cell.value.constant().integer_valued(5));
      }
    for (const auto& row : d.matrix(c).rows)
      for (const Cell& cell : row.entries) {
        if (cell.star || !cell.value.is_constant()) continue;
        CHECK(cell.value.constant().integer_valued(5));
      }
  }
}

TEST_CASE("relation existence from count positivity") {
  const BlockData& d = data();

  // ell = 11 at n = 2 kills the last phi4 relation family: (11-1)(11-11) = 0.
  const RelationRow* r = d.relations(PrimeCase::Phi4).find("chi15_1");
  REQUIRE(r != nullptr);
  CHECK_FALSE(relation_exists(*r, 2, 11));
  CHECK(relation_exists(*r, 3, 43));  // 43 | 2^7+1 ... q^2+1 = 129

  // ell = 3 at n = 1 has f = 2 (9 | q^2+1 = 9): (9-3)/2 = 3 > 0.
  const RelationRow* e = d.relations(PrimeCase::Ell3).find("chi6_1");
  REQUIRE(e != nullptr);
  CHECK(relation_exists(*e, 1, 3));
  CHECK_FALSE(relation_exists(*e, 2, 3));  // f = 1: (3-3)/2 = 0

  // Linear case: (L-1)(L-7)/16 at ell = 7, n = 1 (q^2-1 = 7) vanishes.
  const RelationRow* l = d.relations(PrimeCase::Linear).find("chi4_1");
  REQUIRE(l != nullptr);
  CHECK_FALSE(relation_exists(*l, 1, 7));

  PrimeInfo info = classify_prime(1, 13);
  CHECK(info.cs == PrimeCase::Phi8p);
  const RelationRow* p = d.relations(PrimeCase::Phi8p).find("chi14_1");
  REQUIRE(p != nullptr);
  CHECK(relation_count_at(p->count, info) == 1);
}

TEST_CASE("bounds tables parse with conditions attached") {
  const BoundsTable& b = data().bounds(PrimeCase::Phi4);
  const BoundRow* row = b.find("b");
  REQUIRE(row != nullptr);
  CHECK(row->lower == QPoly(1));
  CHECK(row->upper == parse_qpoly("(q^2+r2*q)/4"));
  REQUIRE(row->cond_lowers.size() == 1);
  CHECK(row->cond_lowers[0].lower == QPoly(2));
  CHECK(b.lower_at("b", 2, 11) == QPoly(1));   // condition fails
  CHECK(b.lower_at("b", 2, 31) == QPoly(2));   // ell != 11
  CHECK(b.lower_at("b", 2, 0) == QPoly(1));    // generic prime
  CHECK(b.lower_at("a", 1, 0) == QPoly(2));

  const BoundsTable& p8 = data().bounds(PrimeCase::Phi8m);
  CHECK(p8.find("x")->upper == parse_qpoly("q/r2-2"));
  CHECK(p8.find("x")->cond_lowers.empty());
}

TEST_CASE("matrix cells carry symbolic unknowns and star wildcards") {
  const DecompMatrixData& m = data().matrix(PrimeCase::Phi8p);
  const MatrixRow* chi21 = m.row("chi21");
  REQUIRE(chi21 != nullptr);
  CHECK(chi21->basic);
  CHECK(chi21->entries[m.col_index("p19")].value == SymPoly::unknown("x"));
  const MatrixRow* st = m.row("chi10_St");
  REQUIRE(st != nullptr);
  CHECK_FALSE(st->basic);
  CHECK(st->entries[m.col_index("p18")].value ==
        parse_expr("1-2*j+w"));
  CHECK(st->entries[m.col_index("p9")].star);
  CHECK(st->count == parse_expr("(L-1)/4"));
}
