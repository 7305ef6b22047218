#include "cyclozeta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclozeta {

namespace {

using u128 = unsigned __int128;

int64_t mul_mod(int64_t a, int64_t b, int64_t mod) {
  return static_cast<int64_t>(u128(a) * u128(b) % u128(mod));
}

}  // namespace

int64_t mod_pow(int64_t base, int64_t exp, int64_t mod) {
  if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
  if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
  if (mod == 1) return 0;
  int64_t b = base % mod;
  if (b < 0) b += mod;
  int64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, mod);
    b = mul_mod(b, b, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // n > 37, odd. Witnesses valid for all n < 3.3e24.
  int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    int64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  if (n > kFactorizationCap) {
    throw capacity_error("factorize: n exceeds the 1e12 factorization cap");
  }
  std::vector<std::pair<int64_t, int>> factors;
  auto take = [&](int64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (int64_t p = 5; p <= 1'000'000 && p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) {
    if (!is_prime(n)) {
      throw capacity_error(
          "factorize: composite cofactor survives the trial-division budget");
    }
    factors.emplace_back(n, 1);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

int64_t totient(int64_t n) {
  if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
  int64_t result = n;
  for (const auto& [p, e] : factorize(n)) {
    result -= result / p;
  }
  return result;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int64_t multiplicative_order_mod(int64_t k, int64_t n) {
  if (n < 1) throw std::invalid_argument("multiplicative_order: n must be >= 1");
  if (n == 1) return 1;
  int64_t r = k % n;
  if (r < 0) r += n;
  if (std::gcd(r, n) != 1) {
    throw std::invalid_argument("multiplicative_order: gcd(k,n) != 1");
  }
  // The order divides phi(n); scan its divisors in ascending order.
  for (int64_t d : divisors(totient(n))) {
    if (mod_pow(r, d, n) == 1) return d;
  }
  throw std::logic_error("multiplicative_order: no divisor of phi(n) works");
}

std::vector<int64_t> primes_up_to(int64_t limit) {
  std::vector<int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (int64_t p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (int64_t q = p * p; q <= limit; q += p) {
      composite[static_cast<std::size_t>(q)] = true;
    }
  }
  return primes;
}

int64_t binomial_checked(int64_t a, int64_t b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  u128 result = 1;
  for (int64_t i = 1; i <= b; ++i) {
    result = result * u128(a - b + i) / u128(i);
    if (result > u128(INT64_MAX)) {
      throw capacity_error("binomial_checked: value exceeds 64 bits");
    }
  }
  return static_cast<int64_t>(result);
}

int64_t isqrt(int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace cyclozeta
