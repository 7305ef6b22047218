#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <set>

#include "cyclozeta/arith.hpp"
#include "cyclozeta/characters.hpp"

using namespace cyclozeta;

namespace {

bool is_value(const std::optional<RootOfUnity>& v, int64_t num, int64_t ord) {
  return v.has_value() && v->ord == ord && v->num == num;
}

}  // namespace

TEST_CASE("root of unity arithmetic") {
  const RootOfUnity i{1, 4};
  const RootOfUnity minus_one{2, 4};
  CHECK((i * i) == minus_one);
  CHECK(i.conj() == RootOfUnity{3, 4});
  CHECK(i.order() == 4);
  CHECK(minus_one.order() == 2);
  CHECK(RootOfUnity::one(4).order() == 1);
  CHECK(i.to_string() == "i");
  CHECK(minus_one.to_string() == "-1");
  CHECK(RootOfUnity{3, 4}.to_string() == "-i");
  CHECK(RootOfUnity{2, 12}.to_string() == "e(1/6)");
  CHECK(std::abs(i.to_complex() - std::complex<double>(0, 1)) < 1e-15);
}

TEST_CASE("character counts and conductors") {
  const auto chars20 = all_characters(Modulus(20));
  REQUIRE(chars20.size() == 8);
  std::multiset<int64_t> conductors;
  for (const auto& chi : chars20) conductors.insert(conductor(chi));
  CHECK(conductors == std::multiset<int64_t>{1, 4, 5, 5, 5, 20, 20, 20});

  CHECK(all_characters(Modulus(3)).size() == 2);

  // One conductor-1 (trivial) character everywhere.
  for (int64_t n : kClassNumberOne) {
    const auto chars = all_characters(Modulus(n));
    CHECK(static_cast<int64_t>(chars.size()) == UnitGroup(Modulus(n)).order());
    CHECK(std::count_if(chars.begin(), chars.end(), [](const auto& chi) {
            return chi.conductor() == 1;
          }) == 1);
  }
}

TEST_CASE("n=5 has an order-4 character sending 2 to -i") {
  const auto chars = all_characters(Modulus(5));
  REQUIRE(chars.size() == 4);
  bool found = false;
  for (const auto& chi : chars) {
    const auto v = chi.value_at(2);
    if (is_value(v, 3, 4)) {  // -i
      found = true;
      CHECK(chi.conductor() == 5);
    }
  }
  CHECK(found);
}

TEST_CASE("primitive extension values for n=20") {
  const auto chars = all_characters(Modulus(20));
  // Conductor-5 characters are nonzero at 2; one of them maps 2 to -i.
  bool minus_i_at_2 = false;
  for (const auto& chi : chars) {
    if (chi.conductor() == 5 && is_value(chi.value_at(2), 3, 4)) {
      minus_i_at_2 = true;
    }
    if (chi.conductor() == 20 || chi.conductor() == 4) {
      CHECK_FALSE(chi.value_at(2).has_value());  // gcd(2, f) > 1
    }
    CHECK(is_value(chi.value_at(1), 0, 4));
    CHECK_FALSE(chi.value_at(0).has_value());
  }
  CHECK(minus_i_at_2);
  // The single conductor-4 character is the quadratic one: -1 at 3.
  for (const auto& chi : chars) {
    if (chi.conductor() == 4) CHECK(is_value(chi.value_at(3), 2, 4));
  }
}

TEST_CASE("orthogonality relations") {
  for (int64_t n : {3LL, 5LL, 12LL, 20LL, 24LL, 35LL}) {
    const auto chars = all_characters(Modulus(n));
    // Sum over one period vanishes for non-trivial characters; the trivial
    // primitive character is 1 at every k >= 1.
    for (const auto& chi : chars) {
      std::complex<double> sum = 0.0;
      for (int64_t k = 1; k <= n; ++k) sum += chi.complex_at(k);
      if (chi.is_trivial()) {
        CHECK(sum.real() == doctest::Approx(n).epsilon(1e-12));
      } else {
        CHECK(std::abs(sum) < 1e-9);
      }
    }
    // Column sums detect k = 1 mod n among units.
    for (int64_t k = 1; k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      std::complex<double> sum = 0.0;
      for (const auto& chi : chars) sum += chi.complex_at(k);
      const double expected = k % n == 1 ? static_cast<double>(totient(n)) : 0.0;
      CHECK(std::abs(sum - expected) < 1e-9);
    }
  }
}

TEST_CASE("total multiplicativity fuzz") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int64_t> dist(1, 10'000);
  for (int64_t n : {12LL, 20LL, 27LL, 44LL}) {
    const auto chars = all_characters(Modulus(n));
    for (int trial = 0; trial < 300; ++trial) {
      const int64_t k = dist(rng);
      const int64_t l = dist(rng);
      for (const auto& chi : chars) {
        const auto vk = chi.value_at(k);
        const auto vl = chi.value_at(l);
        const auto vkl = chi.value_at(k * l);
        if (!vk || !vl) {
          CHECK_FALSE(vkl.has_value());
        } else {
          REQUIRE(vkl.has_value());
          CHECK(*vkl == *vk * *vl);
        }
      }
    }
  }
}

TEST_CASE("conductor is the exact period") {
  for (int64_t n : {12LL, 20LL, 24LL, 45LL}) {
    for (const auto& chi : all_characters(Modulus(n))) {
      const int64_t f = chi.conductor();
      CHECK(n % f == 0);
      // Periodic with period f on k >= 1 (k = 0 is pinned to zero).
      for (int64_t k = 1; k <= 3 * f; ++k) {
        CHECK(chi.value_at(k) == chi.value_at(k + f));
      }
      // No proper divisor of f is a period.
      for (int64_t d = 1; d < f; ++d) {
        if (f % d != 0) continue;
        bool shorter_period = true;
        for (int64_t k = 1; k <= f && shorter_period; ++k) {
          if (chi.value_at(k) != chi.value_at(k + d)) shorter_period = false;
        }
        CHECK_FALSE(shorter_period);
      }
    }
  }
}

TEST_CASE("table agrees with the dual-group values on every unit") {
  // Recompute chi(u) = e(sum_j dlog_j(u) * label_j / d_j) from scratch and
  // compare with the stored primitive table. This pins the CRT lift: any
  // wrong lift would disagree on some unit in the same class mod f.
  for (int64_t n : {20LL, 24LL, 36LL, 45LL}) {
    const UnitGroup group((Modulus(n)));
    const int64_t e = group.exponent();
    for (const auto& chi : all_characters(group)) {
      for (int64_t u = 1; u < n; ++u) {
        if (!group.is_unit(u)) continue;
        const auto dl = group.dlog(u);
        int64_t num = 0;
        for (std::size_t j = 0; j < dl.size(); ++j) {
          num = (num + dl[j] * chi.label()[j] * (e / group.factors()[j].order)) % e;
        }
        const auto v = chi.value_at(u);
        REQUIRE(v.has_value());
        CHECK(v->num == num);
      }
    }
  }
}

TEST_CASE("full enumeration refuses table sizes beyond the envelope") {
  CHECK_THROWS_AS(all_characters(Modulus(999983)), capacity_error);
}

TEST_CASE("parity matches the value at -1") {
  for (int64_t n : {4LL, 5LL, 20LL, 21LL}) {
    for (const auto& chi : all_characters(Modulus(n))) {
      const auto v = chi.value_at(n - 1);
      REQUIRE(v.has_value());
      CHECK(chi.is_even() == v->is_one());
    }
  }
}
