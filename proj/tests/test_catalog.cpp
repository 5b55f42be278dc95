#include <doctest.h>

#include "ree2f4/catalog.hpp"
#include "ree2f4/factors.hpp"

using namespace ree2f4;

namespace {
const Catalog& catalog() {
  static const Manifest manifest(REE2F4_DATA_DIR);
  static const Catalog cat(manifest);
  return cat;
}
}  // namespace

TEST_CASE("unipotent records") {
  const auto& cat = catalog();
  CHECK(cat.unipotent(1).degree == QPoly(1));
  CHECK(cat.unipotent(1).series == "ps");
  CHECK(cat.unipotent(21).degree == QPoly::q().pow(24));
  // chi2: (q/sqrt2) phi1 phi2 phi4^2 phi12, family 2, 2B2a constituent
  const auto& chi2 = cat.unipotent(2);
  QPoly expected = factors::phi1() * factors::phi2() * factors::phi4().pow(2) *
                   factors::phi12();
  expected = expected * QPoly::q();
  expected = expected.scaled(QS2(Rat(0), Rat(1, 2)));  // q/sqrt2 = (r2/2) q
  CHECK(chi2.degree == expected);
  CHECK(chi2.family == 2);
  CHECK(chi2.series == "2B2a");
  // family sizes 1,2,1,13,1,2,1
  int sizes[8] = {0};
  for (int i = 1; i <= 21; ++i) sizes[cat.unipotent(i).family]++;
  CHECK(sizes[1] == 1);
  CHECK(sizes[2] == 2);
  CHECK(sizes[3] == 1);
  CHECK(sizes[4] == 13);
  CHECK(sizes[5] == 1);
  CHECK(sizes[6] == 2);
  CHECK(sizes[7] == 1);
  // conjugate pairing is an involution with equal degrees
  for (int i = 1; i <= 21; ++i) {
    const auto& r = cat.unipotent(i);
    if (r.conj_partner.empty()) continue;
    const QPoly& pd = cat.degree_of(r.conj_partner);
    CHECK(pd == r.degree);
    bool found = false;
    for (int j = 1; j <= 21; ++j) {
      if (cat.unipotent(j).label == r.conj_partner) {
        CHECK(cat.unipotent(j).conj_partner == r.label);
        found = true;
      }
    }
    CHECK(found);
  }
  // degrees are positive integers at small n
  for (int i = 1; i <= 21; ++i)
    for (int n = 1; n <= 5; ++n) CHECK(cat.unipotent(i).degree.eval_int(n) > 0);
}

TEST_CASE("series types") {
  const auto& cat = catalog();
  CHECK(cat.series_types().size() == 17);
  for (const auto& s : cat.series_types()) {
    for (int n = 1; n <= 5; ++n) {
      CHECK(s.count.eval_int(n) >= 0);
      for (const auto& m : s.members) CHECK(m.degree.eval_int(n) > 0);
    }
  }
  // g4 count at n=1: (64-40+16)/16... (q^4-10q^2+16)/16 with q^4=64, q^2=8
  CHECK(cat.series_type("g4").count.eval_int(1) == (64 - 80 + 16) / 16);
  CHECK(cat.series_type("g5").count == QPoly(1));
  CHECK(cat.series_type("g5").members.size() == 3);
  CHECK(cat.nonunipotent_degree("chi5_St").eval_int(1) > 0);
}

TEST_CASE("sum of squares equals group order (symbolic)") {
  CHECK(catalog().sum_of_squares() - group_order() == QPoly());
  // weaker integer corollary
  CHECK(catalog().sum_of_squares().eval_int(1) == group_order().eval_int(1));
}

TEST_CASE("prime classification") {
  auto cs = [](int n, long long ell) { return classify_prime(n, Int(ell)); };
  CHECK(cs(1, 13).cs == PrimeCase::Phi8p);
  CHECK(cs(1, 13).f == 1);
  CHECK(cs(1, 3).cs == PrimeCase::Ell3);
  CHECK(cs(1, 3).f == 2);
  CHECK(cs(1, 3).ell_pow_f == 9);
  CHECK(cs(1, 7).cs == PrimeCase::Linear);
  CHECK(cs(1, 5).cs == PrimeCase::Phi8m);
  CHECK(cs(2, 11).cs == PrimeCase::Phi4);
  CHECK(cs(2, 41).cs == PrimeCase::Phi8p);
  CHECK(cs(2, 5).cs == PrimeCase::Phi8m);
  CHECK(cs(2, 5).f == 2);
  CHECK(cs(1, 37).cs == PrimeCase::CyclicDefect);   // 37 | phi24p(1) = 37? see below
  CHECK(cs(1, 109).cs == PrimeCase::CyclicDefect);  // 109 = phi24m at n=1
  CHECK(cs(1, 23).cs == PrimeCase::NotDividing);
  CHECK_THROWS(classify_prime(1, Int(2)));
  // uniqueness for ell > 3: the factor classes are pairwise coprime except
  // for the factor 3 shared by q^2+1 and phi12 (which is why ell=3 is split
  // off first).
  for (int n = 1; n <= 4; ++n) {
    const Int v[5] = {factors::phi1t().eval_int(n), factors::phi4().eval_int(n),
                      factors::phi8p().eval_int(n), factors::phi8m().eval_int(n),
                      factors::phi12().eval_int(n) * factors::phi24p().eval_int(n) *
                          factors::phi24m().eval_int(n)};
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        const Int g = boost::multiprecision::gcd(v[i], v[j]);
        if (i == 1 && j == 4) {
          CHECK(g == 3);
        } else {
          CHECK(g == 1);
        }
      }
    }
  }
  // totality over a prime sweep
  for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 97LL, 999983LL})
    for (int n = 1; n <= 10; ++n) CHECK_NOTHROW(classify_prime(n, Int(p)));
}

TEST_CASE("d0 and minimal degree") {
  const auto& cat = catalog();
  CHECK(cat.d0(1) == 64638);
  CHECK(cat.d0(2) == Int(4) * 31 * 33 * 33 * 993);
  for (int n = 1; n <= 5; ++n) {
    const Int d0 = cat.d0(n);
    CHECK(d0 == cat.unipotent(2).degree.eval_int(n));
    // minimum over all nontrivial degrees is attained exactly by chi2, chi3
    int attained = 0;
    for (int i = 2; i <= 21; ++i) {
      const Int v = cat.unipotent(i).degree.eval_int(n);
      CHECK(v >= d0);
      if (v == d0) ++attained;
    }
    CHECK(attained == 2);
    for (const auto& s : cat.series_types())
      for (const auto& m : s.members) CHECK(m.degree.eval_int(n) > d0);
  }
}
