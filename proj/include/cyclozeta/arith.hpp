#pragma once

// Elementary integer arithmetic shared by the whole library: modular
// exponentiation, deterministic Miller-Rabin, factorization by trial
// division, Euler's totient, divisor enumeration and checked binomials.
// Everything is exact 64-bit (with 128-bit intermediates where products
// can exceed 63 bits).

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclozeta/errors.hpp"

namespace cyclozeta {

using std::int64_t;

// Largest k accepted by factorize()/coefficient_at(); after trial division
// to 1e6 any remaining cofactor below this bound is prime.
inline constexpr int64_t kFactorizationCap = 1'000'000'000'000LL;

int64_t mod_pow(int64_t base, int64_t exp, int64_t mod);

// Deterministic for all 64-bit inputs (fixed witness set).
bool is_prime(int64_t n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
// Throws capacity_error if n exceeds kFactorizationCap or a composite
// cofactor survives the trial-division budget.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// |{1 <= k <= n : gcd(k,n) = 1}|; totient(1) = 1.
int64_t totient(int64_t n);

// All divisors of n, ascending.
std::vector<int64_t> divisors(int64_t n);

// Smallest l >= 1 with k^l = 1 (mod n), for plain n >= 1 and gcd(k,n) = 1.
// Throws std::invalid_argument when gcd(k,n) != 1.
int64_t multiplicative_order_mod(int64_t k, int64_t n);

// Odd primes <= limit plus 2; simple Eratosthenes.
std::vector<int64_t> primes_up_to(int64_t limit);

// binom(a, b) exactly; throws capacity_error on 64-bit overflow.
int64_t binomial_checked(int64_t a, int64_t b);

int64_t isqrt(int64_t n);

}  // namespace cyclozeta
