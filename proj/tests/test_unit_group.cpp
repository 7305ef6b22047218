#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "cyclozeta/unit_group.hpp"

using namespace cyclozeta;

TEST_CASE("modulus validation") {
  CHECK_NOTHROW(Modulus(3));
  CHECK_NOTHROW(Modulus(84));
  CHECK_THROWS_AS(Modulus(2), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
  // 2 mod 4 is rejected with a pointer at n/2.
  try {
    Modulus(10);
    FAIL("Modulus(10) should throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }
  CHECK(Modulus(5).class_number_one());
  CHECK(Modulus(84).class_number_one());
  CHECK_FALSE(Modulus(23).class_number_one());
  CHECK_FALSE(Modulus(39).class_number_one());
}

TEST_CASE("symmetry order") {
  CHECK(symmetry_order(Modulus(4)) == 4);
  CHECK(symmetry_order(Modulus(5)) == 10);
  CHECK(symmetry_order(Modulus(84)) == 84);
}

TEST_CASE("unit group structure for small cases") {
  const UnitGroup g20(Modulus(20));
  CHECK(g20.order() == 8);
  CHECK(g20.isomorphism_type() == std::vector<int64_t>{4, 2});
  CHECK(g20.exponent() == 4);

  const UnitGroup g3(Modulus(3));
  CHECK(g3.order() == 2);
  REQUIRE(g3.factors().size() == 1);
  CHECK(g3.factors()[0].generator == 2);
  CHECK(g3.factors()[0].order == 2);

  const UnitGroup g4(Modulus(4));
  CHECK(g4.order() == 2);
  CHECK(g4.isomorphism_type() == std::vector<int64_t>{2});
  CHECK(g4.factors()[0].generator == 3);
}

TEST_CASE("isomorphism types from the published table") {
  CHECK(UnitGroup(Modulus(24)).isomorphism_type() ==
        std::vector<int64_t>{2, 2, 2});
  CHECK(UnitGroup(Modulus(25)).isomorphism_type() == std::vector<int64_t>{20});
  CHECK(UnitGroup(Modulus(84)).isomorphism_type() ==
        std::vector<int64_t>{6, 2, 2});
}

TEST_CASE("multiplicative order via Modulus") {
  CHECK(multiplicative_order(2, Modulus(5)) == 4);
  CHECK(multiplicative_order(1, Modulus(17)) == 1);
  CHECK(multiplicative_order(10, Modulus(33)) == 2);
  CHECK_THROWS_AS(multiplicative_order(6, Modulus(33)), std::invalid_argument);
}

TEST_CASE("factor orders multiply to phi and dlog round-trips") {
  for (int64_t n : kClassNumberOne) {
    const UnitGroup group((Modulus(n)));
    CAPTURE(n);

    int64_t product = 1;
    for (const auto& f : group.factors()) product *= f.order;
    CHECK(product == group.order());
    CHECK(group.order() % group.exponent() == 0);

    // Every unit recomposes from its exponent vector.
    for (int64_t u = 1; u < n; ++u) {
      if (!group.is_unit(u)) continue;
      const auto dl = group.dlog(u);
      std::vector<int64_t> exps(dl.begin(), dl.end());
      CHECK(group.compose(exps) == u);
    }

    // Lagrange: element orders divide phi(n).
    for (int64_t u = 1; u < n; ++u) {
      if (!group.is_unit(u)) continue;
      CHECK(group.order() % multiplicative_order(u, Modulus(n)) == 0);
    }
  }
}

TEST_CASE("deterministic construction") {
  const UnitGroup a(Modulus(60));
  const UnitGroup b(Modulus(60));
  REQUIRE(a.factors().size() == b.factors().size());
  for (std::size_t i = 0; i < a.factors().size(); ++i) {
    CHECK(a.factors()[i].generator == b.factors()[i].generator);
    CHECK(a.factors()[i].order == b.factors()[i].order);
  }
}
