#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cyclozeta/arith.hpp"
#include "cyclozeta/l_values.hpp"

using namespace cyclozeta;

namespace {

constexpr double kPi = std::numbers::pi;

const DirichletCharacter& trivial_of(const std::vector<DirichletCharacter>& v) {
  for (const auto& chi : v) {
    if (chi.is_trivial()) return chi;
  }
  throw std::logic_error("no trivial character");
}

const DirichletCharacter& nontrivial_of(
    const std::vector<DirichletCharacter>& v) {
  for (const auto& chi : v) {
    if (!chi.is_trivial()) return chi;
  }
  throw std::logic_error("no non-trivial character");
}

}  // namespace

TEST_CASE("gauss sums") {
  const auto chars4 = all_characters(Modulus(4));
  CHECK(std::abs(gauss_sum(trivial_of(chars4)) - std::complex<double>(1, 0)) <
        1e-12);
  // Quadratic character mod 4: chi(1) e(1/4) + chi(3) e(3/4) = i - (-i) = 2i.
  CHECK(std::abs(gauss_sum(nontrivial_of(chars4)) -
                 std::complex<double>(0, 2)) < 1e-12);
}

TEST_CASE("|tau(chi)|^2 = f for every character of every listed n") {
  for (int64_t n : kClassNumberOne) {
    for (const auto& chi : all_characters(Modulus(n))) {
      const auto tau = gauss_sum(chi);
      CAPTURE(n);
      CHECK(std::abs(std::norm(tau) - static_cast<double>(chi.conductor())) <
            1e-10 * chi.conductor());
    }
  }
}

TEST_CASE("closed-form L(1,chi) for the crystallographic cases") {
  const auto l4 = l_at_one(nontrivial_of(all_characters(Modulus(4))));
  CHECK(std::abs(l4 - std::complex<double>(kPi / 4.0, 0)) < 1e-12);

  const auto l3 = l_at_one(nontrivial_of(all_characters(Modulus(3))));
  CHECK(std::abs(l3 - std::complex<double>(kPi * std::sqrt(3.0) / 9.0, 0)) <
        1e-12);
}

TEST_CASE("the trivial character is rejected") {
  const auto chars = all_characters(Modulus(5));
  CHECK_THROWS_AS(l_at_one(trivial_of(chars)), std::invalid_argument);
  CHECK_THROWS_AS(l_at_one_direct(trivial_of(chars), 1000),
                  std::invalid_argument);
}

TEST_CASE("L(1,chi) never vanishes (n <= 20)") {
  for (int64_t n : {3LL, 4LL, 5LL, 7LL, 8LL, 9LL, 11LL, 12LL, 13LL, 15LL,
                    16LL, 17LL, 19LL, 20LL}) {
    for (const auto& chi : all_characters(Modulus(n))) {
      if (chi.is_trivial()) continue;
      CHECK(std::abs(l_at_one(chi)) > 1e-3);
    }
  }
}

TEST_CASE("direct summation approximates the closed forms") {
  const auto chi4 = nontrivial_of(all_characters(Modulus(4)));
  CHECK(std::abs(l_at_one_direct(chi4, 100'000).real() - 0.785398) < 1e-4);
  const auto chi3 = nontrivial_of(all_characters(Modulus(3)));
  CHECK(std::abs(l_at_one_direct(chi3, 100'000).real() - 0.604600) < 1e-4);
}

TEST_CASE("direct and closed-form values agree for all n <= 20") {
  for (int64_t n : {3LL, 4LL, 5LL, 7LL, 8LL, 9LL, 11LL, 12LL, 13LL, 15LL,
                    16LL, 17LL, 19LL, 20LL}) {
    for (const auto& chi : all_characters(Modulus(n))) {
      if (chi.is_trivial()) continue;
      CAPTURE(n);
      CHECK(std::abs(l_at_one_direct(chi, 100'000) - l_at_one(chi)) < 1e-4);
    }
  }
}

TEST_CASE("residues for the published rows") {
  const auto r12 = residue(Modulus(12));
  CHECK(std::abs(r12.alpha - 0.361051) < 1e-6);
  CHECK(std::abs(r12.regulator - std::log(2.0 + std::sqrt(3.0))) < 1e-9);

  const auto r5 = residue(Modulus(5));
  CHECK(std::abs(r5.alpha - 0.339837) < 1e-6);
  CHECK(std::abs(r5.regulator - 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0)) <
        1e-9);

  const auto r36 = residue(Modulus(36));
  CHECK(std::abs(r36.alpha - 0.220933) < 1e-6);
  CHECK(std::abs(r36.regulator - 162.837701) < 1e-5 * 162.837701);
}

TEST_CASE("regulator of the two lattice cases is exactly 1") {
  CHECK(std::abs(residue(Modulus(3)).regulator - 1.0) < 1e-9);
  CHECK(std::abs(residue(Modulus(4)).regulator - 1.0) < 1e-9);
}

TEST_CASE("alpha is real and positive for every listed n") {
  for (int64_t n : kClassNumberOne) {
    const auto report = residue(Modulus(n));
    CAPTURE(n);
    CHECK(report.alpha > 0.0);
    // Imaginary parts cancel in conjugate pairs; rebuild the product to
    // check the residual.
    std::complex<double> product = 1.0;
    for (const auto& factor : report.factors) product *= factor.value;
    CHECK(std::abs(product.imag()) < 1e-9);
    CHECK(static_cast<int64_t>(report.factors.size()) == totient(n) - 1);
    CHECK(std::isfinite(report.regulator));
    CHECK(report.ramified_product > 1.0);
  }
}

TEST_CASE("empirical rate endpoints") {
  CHECK(empirical_rate(Modulus(5), 1) == 1.0);
  CHECK(empirical_rate(Modulus(3), 1) == 1.0);
}
