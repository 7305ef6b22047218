#include "cyclozeta/dirichlet_series.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclozeta/arith.hpp"
#include "cyclozeta/euler_factors.hpp"

namespace cyclozeta {

namespace {

int64_t prime_power_coefficient(const Modulus& n, int64_t p, int64_t r) {
  const auto shape = shape_via_order(n, p);
  if (r % shape.ell != 0) return 0;
  return binomial_checked(r / shape.ell + shape.m - 1, shape.m - 1);
}

}  // namespace

int64_t coefficient_at(const Modulus& n, int64_t k) {
  if (k < 1) throw std::invalid_argument("coefficient_at: k must be >= 1");
  if (k > kFactorizationCap) {
    throw capacity_error("coefficient_at: k exceeds the 1e12 cap");
  }
  __int128 result = 1;
  for (const auto& [p, r] : factorize(k)) {
    const int64_t local = prime_power_coefficient(n, p, r);
    if (local == 0) return 0;
    result *= local;
    if (result > INT64_MAX) {
      throw capacity_error("coefficient_at: value exceeds 64 bits");
    }
  }
  return static_cast<int64_t>(result);
}

CoefficientSeries coefficients_up_to(const Modulus& n, int64_t K) {
  if (K < 1) throw std::invalid_argument("coefficients_up_to: K must be >= 1");
  if (K > kMaxSieveLimit) {
    throw capacity_error("coefficients_up_to: K exceeds the 1e8 envelope");
  }
  CoefficientSeries series{
      n, K,
      n.class_number_one() ? Interpretation::colour_counts
                           : Interpretation::ideal_counts,
      std::vector<std::uint32_t>(static_cast<std::size_t>(K) + 1, 0)};
  series.coeffs[1] = 1;

  // The shape of an unramified prime depends only on its class mod n.
  // When n is small relative to K, precompute every class once; otherwise
  // compute orders per prime (still cheap: the divisors of phi(n) are
  // factored a single time either way).
  const int64_t nn = n.value();
  const int64_t phi = totient(nn);
  const auto phi_divisors = divisors(phi);
  auto order_of = [&](int64_t unit) {
    for (int64_t d : phi_divisors) {
      if (mod_pow(unit, d, nn) == 1) return d;
    }
    throw std::logic_error("unit order does not divide phi(n)");
  };
  std::vector<EulerShape> by_class;
  if (nn <= K) {
    by_class.assign(static_cast<std::size_t>(nn), {0, 0, 0});
    for (int64_t k = 1; k < nn; ++k) {
      if (std::gcd(k, nn) != 1) continue;
      const int64_t ell = order_of(k);
      by_class[static_cast<std::size_t>(k)] = {0, ell, phi / ell};
    }
  }

  // Dirichlet-multiply the local factor of every prime into the array.
  // (1 - p^{-l s})^{-m} is m passes of the geometric factor over the
  // stride q = p^l: ascending a[i*q] += a[i] realizes B = A * (1-x)^{-1}
  // in place because B[x] = A[x] + B[x/q].
  for (int64_t p : primes_up_to(K)) {
    EulerShape shape{0, 0, 0};
    if (nn % p == 0) {
      shape = shape_via_order(n, p);
    } else if (!by_class.empty()) {
      shape = by_class[static_cast<std::size_t>(p % nn)];
    } else {
      const int64_t ell = order_of(p % nn);
      shape = {0, ell, phi / ell};
    }
    if (shape.ell > 62) continue;  // p^l overflows -> no multiples <= K
    int64_t q = 1;
    bool overflow = false;
    for (int64_t i = 0; i < shape.ell; ++i) {
      if (q > K / p) {
        overflow = true;
        break;
      }
      q *= p;
    }
    if (overflow || q > K) continue;
    for (int64_t pass = 0; pass < shape.m; ++pass) {
      for (int64_t i = 1; i * q <= K; ++i) {
        const std::uint64_t sum = std::uint64_t(series.coeffs[i * q]) +
                                  std::uint64_t(series.coeffs[i]);
        if (sum > std::numeric_limits<std::uint32_t>::max()) {
          throw capacity_error(
              "coefficients_up_to: coefficient exceeds 32-bit counters");
        }
        series.coeffs[i * q] = static_cast<std::uint32_t>(sum);
      }
    }
  }
  return series;
}

PartialSum partial_sum(const Modulus& n, int64_t x) {
  if (x < 1) throw std::invalid_argument("partial_sum: x must be >= 1");
  const auto series = coefficients_up_to(n, x);
  return {x, partial_sum(series, x)};
}

int64_t partial_sum(const CoefficientSeries& series, int64_t x) {
  if (x < 1 || x > series.limit) {
    throw std::invalid_argument("partial_sum: x outside the series range");
  }
  int64_t total = 0;
  for (int64_t k = 1; k <= x; ++k) total += series.coeffs[k];
  return total;
}

std::vector<int64_t> admissible_counts(const Modulus& n, int64_t K) {
  const auto series = coefficients_up_to(n, K);
  std::vector<int64_t> counts;
  for (int64_t k = 1; k <= K; ++k) {
    if (series.coeffs[k] > 0) counts.push_back(k);
  }
  return counts;
}

std::string format_series(const CoefficientSeries& series, int64_t terms) {
  std::ostringstream out;
  out << "1";
  int64_t emitted = 0;
  for (int64_t k = 2; k <= series.limit && emitted < terms; ++k) {
    if (series.coeffs[k] == 0) continue;
    out << " + " << series.coeffs[k] << "/" << k << "^s";
    ++emitted;
  }
  if (series.interpretation == Interpretation::ideal_counts) {
    out << "  [ideal counts]";
  }
  return out.str();
}

}  // namespace cyclozeta
