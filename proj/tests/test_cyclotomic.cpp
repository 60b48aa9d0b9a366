// Cyclotomic field arithmetic and the parameter dictionary, pinned against
// hand-computed values at small orders.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftop/suites_cyclotomic.hpp"

using namespace shiftop;

namespace {
cycdetail::Poly P(std::vector<int> ints) {
  cycdetail::Poly p;
  for (int v : ints) p.push_back(Rat(v));
  return p;
}
}  // namespace

TEST_CASE("minimal polynomials at small orders") {
  CHECK(cycdetail::cyclotomic_poly(1) == P({-1, 1}));
  CHECK(cycdetail::cyclotomic_poly(2) == P({1, 1}));
  CHECK(cycdetail::cyclotomic_poly(3) == P({1, 1, 1}));
  CHECK(cycdetail::cyclotomic_poly(4) == P({1, 0, 1}));
  CHECK(cycdetail::cyclotomic_poly(6) == P({1, -1, 1}));
  CHECK(cycdetail::cyclotomic_poly(8) == P({1, 0, 0, 0, 1}));
  CHECK(cycdetail::cyclotomic_poly(12) == P({1, 0, -1, 0, 1}));
}

TEST_CASE("order two: ε is -1") {
  CycNum e = CycNum::eps(2);
  CHECK(e == CycNum::from_rat(2, Rat(-1)));
  CHECK(e * e == CycNum::one(2));
  CHECK((CycNum::one(2) + e).is_zero());
  CHECK(e.render() == "-1");
}

TEST_CASE("order four: inverse matches a hand-run extended Euclid") {
  // (1 + ε)(1 - ε) = 1 - ε^2 = 2 when ε^2 = -1, so (1+ε)^{-1} = (1-ε)/2.
  CycNum one = CycNum::one(4);
  CycNum e = CycNum::eps(4);
  CycNum inv = (one + e).inverse();
  CycNum want = rat(1, 2) * (one - e);
  CHECK(inv == want);
  CHECK((one + e) * inv == one);
  CHECK(e * e == -one);
  CHECK(e.inverse() == -e);  // ε^{-1} = ε^3 = -ε
  CHECK_THROWS_AS(CycNum::zero(4).inverse(), division_error);
}

TEST_CASE("mixed orders are rejected") {
  CHECK_THROWS_AS(CycNum::eps(3) + CycNum::eps(4), context_error);
}

TEST_CASE("rendering") {
  CycNum v = CycNum::eps_pow(5, 2) - rat(1, 2) * CycNum::one(5);
  CHECK(v.render() == "ε^2 - 1/2");
  CHECK(CycNum::zero(5).render() == "0");
  CHECK((-CycNum::eps(5)).render() == "-ε");
}

TEST_CASE("dictionary pinned at order two") {
  // z_1 = -(ħ + c_1)/2 and z_2 = 0.
  for (ZVariant v : {ZVariant::theorem, ZVariant::proposition}) {
    ZForm z1 = z_from_c(2, 1, v);
    CHECK(z1.hbar == CycNum::from_rat(2, rat(-1, 2)));
    REQUIRE(z1.c.size() == 1);
    CHECK(z1.c[0] == CycNum::from_rat(2, rat(-1, 2)));
    CHECK(z_from_c(2, 2, v).is_zero());
  }
}

TEST_CASE("dictionary pinned at order three") {
  // With 1 + ε + ε^2 = 0: z_2 = -(1/3) ħ + (ε^2/3) c_1 + (ε/3) c_2.
  ZForm z2 = z_from_c(3, 2, ZVariant::theorem);
  CHECK(z2.hbar == CycNum::from_rat(3, rat(-1, 3)));
  REQUIRE(z2.c.size() == 2);
  CHECK(z2.c[0] == rat(1, 3) * CycNum::eps_pow(3, 2));
  CHECK(z2.c[1] == rat(1, 3) * CycNum::eps(3));
  CHECK(z2 == z_from_c(3, 2, ZVariant::proposition));
  CHECK_THROWS_AS(z_from_c(3, 0, ZVariant::theorem), domain_error);
  CHECK_THROWS_AS(z_from_c(3, 4, ZVariant::theorem), domain_error);
}

TEST_CASE("suite passes") {
  Checker c;
  SuiteParams p;
  suite_cyclotomic(c, p);
  auto report = c.run("cyclotomic", p, 1, true);
  for (const auto& item : report.items) {
    INFO(item.id << ": " << item.residual);
    CHECK(item.pass);
  }
  CHECK(report.all_pass());
  CHECK(report.items.size() > 40);
}
