#include "cyclozeta/unit_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cyclozeta/arith.hpp"

namespace cyclozeta {

namespace {

// x with x = a (mod m), x = b (mod k) for coprime m, k.
int64_t crt_pair(int64_t a, int64_t m, int64_t b, int64_t k) {
  // Extended gcd for m^{-1} mod k.
  int64_t old_r = m % k, r = k, old_s = 1, s = 0;
  while (r != 0) {
    int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  // old_r == gcd == 1, old_s == inverse of m mod k (maybe negative).
  int64_t inv = old_s % k;
  if (inv < 0) inv += k;
  int64_t t = ((b - a) % k + k) % k;
  t = static_cast<int64_t>((__int128(t) * inv) % k);
  return a + m * t;
}

bool is_generator_mod(int64_t g, int64_t pk, int64_t phi) {
  if (std::gcd(g, pk) != 1) return false;
  for (const auto& [q, e] : factorize(phi)) {
    if (mod_pow(g, phi / q, pk) == 1) return false;
  }
  return true;
}

// Smallest generator of the cyclic group (Z/p^a Z)*, p odd.
int64_t smallest_generator(int64_t pk, int64_t phi) {
  for (int64_t g = 2; g < pk; ++g) {
    if (is_generator_mod(g, pk, phi)) return g;
  }
  throw std::logic_error("no generator found for odd prime power");
}

}  // namespace

UnitGroup::UnitGroup(Modulus m) : modulus_(m) {
  const int64_t n = m.value();
  order_ = totient(n);

  // Local cyclic factors per prime-power component of n.
  struct LocalFactor {
    int64_t component;  // p^a
    int64_t generator;  // generator mod p^a
    int64_t order;
  };
  std::vector<LocalFactor> locals;
  for (const auto& [p, e] : factorize(n)) {
    int64_t pk = 1;
    for (int i = 0; i < e; ++i) pk *= p;
    if (p == 2) {
      if (e == 1) continue;  // (Z/2)* trivial (cannot occur: n != 2 mod 4)
      if (e == 2) {
        locals.push_back({pk, 3, 2});
      } else {
        locals.push_back({pk, pk - 1, 2});        // -1
        locals.push_back({pk, 5, pk / 4});        // order 2^{e-2}
      }
    } else {
      locals.push_back({pk, smallest_generator(pk, pk / p * (p - 1)),
                        pk / p * (p - 1)});
    }
  }

  // Lift each local generator to a residue mod n that is 1 on every other
  // component, making the factors independent.
  for (const auto& lf : locals) {
    int64_t rest = n / lf.component;
    int64_t g = rest == 1 ? lf.generator
                          : crt_pair(lf.generator, lf.component, 1, rest);
    factors_.push_back({g % n, lf.order});
  }
  std::sort(factors_.begin(), factors_.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order > b.order;
    return a.generator < b.generator;
  });

  exponent_ = 1;
  for (const auto& f : factors_) exponent_ = std::lcm(exponent_, f.order);

  if (factors_.empty()) {
    throw std::logic_error("unit group of n >= 3 cannot be trivial");
  }

  // Discrete logs by walking the whole group with a mixed-radix odometer.
  const std::size_t r = factors_.size();
  dlog_flat_.assign(static_cast<std::size_t>(n) * r, -1);
  std::vector<std::int32_t> exps(r, 0);
  int64_t element = 1;
  int64_t filled = 0;
  while (true) {
    auto row = static_cast<std::size_t>(element) * r;
    if (dlog_flat_[row] != -1) {
      throw std::logic_error("unit group generators are not independent");
    }
    for (std::size_t j = 0; j < r; ++j) dlog_flat_[row + j] = exps[j];
    ++filled;
    // Odometer step: bump the last digit, carrying left. Each bump
    // multiplies by that factor's generator; a wrap closes the cycle
    // g^order = 1, so no correction is needed.
    std::size_t j = r;
    while (j > 0) {
      --j;
      element = static_cast<int64_t>(
          (__int128(element) * factors_[j].generator) % n);
      if (++exps[j] < factors_[j].order) break;
      exps[j] = 0;
      if (j == 0) {
        if (filled != order_) {
          throw std::logic_error("unit group walk missed elements");
        }
        return;
      }
    }
  }
}

bool UnitGroup::is_unit(int64_t k) const {
  int64_t u = k % modulus_.value();
  if (u < 0) u += modulus_.value();
  return std::gcd(u, modulus_.value()) == 1;
}

std::span<const std::int32_t> UnitGroup::dlog(int64_t u) const {
  const int64_t n = modulus_.value();
  int64_t v = u % n;
  if (v < 0) v += n;
  if (std::gcd(v, n) != 1) {
    throw std::invalid_argument("dlog: residue is not a unit");
  }
  const std::size_t r = factors_.size();
  return {dlog_flat_.data() + static_cast<std::size_t>(v) * r, r};
}

int64_t UnitGroup::compose(std::span<const int64_t> exps) const {
  if (exps.size() != factors_.size()) {
    throw std::invalid_argument("compose: wrong exponent count");
  }
  const int64_t n = modulus_.value();
  int64_t result = 1 % n;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    int64_t e = exps[j] % factors_[j].order;
    if (e < 0) e += factors_[j].order;
    result = static_cast<int64_t>(
        (__int128(result) * mod_pow(factors_[j].generator, e, n)) % n);
  }
  return result;
}

std::vector<int64_t> UnitGroup::isomorphism_type() const {
  // Merge the cyclic factor orders into invariant factors: for each prime,
  // sort its exponents descending and let the i-th invariant factor collect
  // the i-th largest power of every prime.
  std::map<int64_t, std::vector<int>> prime_exps;
  std::size_t count = 0;
  for (const auto& f : factors_) {
    for (const auto& [p, e] : factorize(f.order)) {
      prime_exps[p].push_back(e);
      count = std::max(count, prime_exps[p].size());
    }
  }
  std::vector<int64_t> inv(count, 1);
  for (auto& [p, exps] : prime_exps) {
    std::sort(exps.rbegin(), exps.rend());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (int t = 0; t < exps[i]; ++t) inv[i] *= p;
    }
  }
  // Already non-increasing by construction.
  return inv;
}

UnitGroup build_unit_group(const Modulus& m) { return UnitGroup(m); }

int64_t multiplicative_order(int64_t k, const Modulus& n) {
  return multiplicative_order_mod(k, n.value());
}

}  // namespace cyclozeta
