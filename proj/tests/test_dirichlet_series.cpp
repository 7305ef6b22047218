#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "cyclozeta/arith.hpp"
#include "cyclozeta/dirichlet_series.hpp"
#include "cyclozeta/euler_factors.hpp"

using namespace cyclozeta;

TEST_CASE("single coefficients") {
  CHECK(coefficient_at(Modulus(3), 7) == 2);
  CHECK(coefficient_at(Modulus(5), 121) == 10);
  CHECK(coefficient_at(Modulus(5), 2) == 0);
  CHECK(coefficient_at(Modulus(3), 1) == 1);
  CHECK(coefficient_at(Modulus(11), 529) == 55);
  CHECK_THROWS_AS(coefficient_at(Modulus(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_at(Modulus(3), kFactorizationCap + 1),
                  capacity_error);
}

TEST_CASE("bulk coefficients match the examples") {
  const auto s11 = coefficients_up_to(Modulus(11), 30);
  std::vector<std::pair<int64_t, std::uint32_t>> nonzero;
  for (int64_t k = 1; k <= 30; ++k) {
    if (s11.coeffs[k] > 0) nonzero.push_back({k, s11.coeffs[k]});
  }
  CHECK(nonzero == std::vector<std::pair<int64_t, std::uint32_t>>{
                       {1, 1}, {11, 1}, {23, 10}});

  const auto s4 = coefficients_up_to(Modulus(4), 10);
  const std::vector<std::uint32_t> expected = {0, 1, 1, 0, 1, 2, 0, 0, 1, 1, 2};
  CHECK(s4.coeffs == expected);

  const auto s1 = coefficients_up_to(Modulus(7), 1);
  CHECK(s1.coeffs == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("sieve equals direct factorization") {
  for (int64_t n : {3LL, 5LL, 12LL, 20LL, 84LL}) {
    const Modulus m(n);
    const auto series = coefficients_up_to(m, 10'000);
    for (int64_t k = 1; k <= 10'000; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(static_cast<int64_t>(series.coeffs[k]) == coefficient_at(m, k));
    }
  }
}

TEST_CASE("sieve handles n larger than the limit") {
  // Exercises the per-prime order path (no class table fits below K).
  const Modulus m(10007);  // prime modulus
  const auto series = coefficients_up_to(m, 3000);
  for (int64_t k = 1; k <= 3000; ++k) {
    CAPTURE(k);
    REQUIRE(static_cast<int64_t>(series.coeffs[k]) == coefficient_at(m, k));
  }
  CHECK(series.interpretation == Interpretation::ideal_counts);
}

TEST_CASE("partial sums") {
  CHECK(partial_sum(Modulus(3), 9).value == 6);
  CHECK(partial_sum(Modulus(5), 4).value == 1);
  CHECK(partial_sum(Modulus(20), 1).value == 1);
  const auto series = coefficients_up_to(Modulus(3), 100);
  int64_t previous = 0;
  for (int64_t x = 1; x <= 100; ++x) {
    const int64_t value = partial_sum(series, x);
    CHECK(value >= previous);  // monotone
    previous = value;
  }
}

TEST_CASE("admissible counts") {
  CHECK(admissible_counts(Modulus(5), 32) ==
        std::vector<int64_t>{1, 5, 11, 16, 25, 31});
  CHECK(admissible_counts(Modulus(12), 17) ==
        std::vector<int64_t>{1, 4, 9, 13, 16});
  CHECK(admissible_counts(Modulus(3), 2) == std::vector<int64_t>{1});
}

TEST_CASE("admissible counts form a semigroup") {
  for (int64_t n : {5LL, 12LL, 21LL}) {
    const int64_t limit = 2000;
    const auto counts = admissible_counts(Modulus(n), limit);
    const std::set<int64_t> lookup(counts.begin(), counts.end());
    for (int64_t a : counts) {
      for (int64_t b : counts) {
        if (a * b > limit) break;
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(lookup.count(a * b) == 1);
      }
    }
  }
}

TEST_CASE("nonzero coefficients sit on basic-index products") {
  // Every admissible k must factor into prime powers p^r with l | r.
  const Modulus m(20);
  const auto series = coefficients_up_to(m, 3000);
  for (int64_t k = 2; k <= 3000; ++k) {
    if (series.coeffs[k] == 0) continue;
    for (const auto& [p, r] : factorize(k)) {
      const auto shape = shape_via_order(m, p);
      CAPTURE(k);
      CHECK(r % shape.ell == 0);
    }
  }
}

TEST_CASE("multiplicativity fuzz with fixed seed") {
  std::mt19937 rng(987654);
  for (int64_t n : {4LL, 9LL, 15LL, 33LL}) {
    const Modulus m(n);
    const auto series = coefficients_up_to(m, 100'000);
    std::uniform_int_distribution<int64_t> dist(1, 316);
    int done = 0;
    while (done < 1000) {
      const int64_t k = dist(rng);
      const int64_t l = dist(rng);
      if (std::gcd(k, l) != 1) continue;
      ++done;
      CHECK(series.coeffs[k * l] == series.coeffs[k] * series.coeffs[l]);
    }
  }
}

TEST_CASE("prime power law") {
  for (int64_t n : {5LL, 12LL, 28LL}) {
    const Modulus m(n);
    for (int64_t p : {2LL, 3LL, 5LL, 7LL, 13LL}) {
      const auto shape = shape_via_order(m, p);
      int64_t pk = 1;
      for (int64_t r = 1; r <= 12 && pk <= kFactorizationCap / p; ++r) {
        pk *= p;
        const int64_t expected =
            r % shape.ell == 0
                ? binomial_checked(r / shape.ell + shape.m - 1, shape.m - 1)
                : 0;
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(r);
        CHECK(coefficient_at(m, pk) == expected);
      }
    }
  }
}

TEST_CASE("series formatting") {
  CHECK(format_series(coefficients_up_to(Modulus(27), 109), 5) ==
        "1 + 1/3^s + 1/9^s + 1/27^s + 1/81^s + 18/109^s");
  CHECK(format_series(coefficients_up_to(Modulus(35), 71), 1) ==
        "1 + 24/71^s");
  CHECK(format_series(coefficients_up_to(Modulus(4), 4), 2) ==
        "1 + 1/2^s + 1/4^s");
}

TEST_CASE("interpretation flag and disclaimer") {
  CHECK(coefficients_up_to(Modulus(5), 10).interpretation ==
        Interpretation::colour_counts);
  const auto ideals = coefficients_up_to(Modulus(23), 10);
  CHECK(ideals.interpretation == Interpretation::ideal_counts);
  CHECK(format_series(ideals, 1).find("[ideal counts]") != std::string::npos);
}

TEST_CASE("capacity limits") {
  CHECK_THROWS_AS(coefficients_up_to(Modulus(3), kMaxSieveLimit + 1),
                  capacity_error);
  CHECK_THROWS_AS(coefficients_up_to(Modulus(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum(Modulus(3), 0), std::invalid_argument);
}
