#pragma once

// Structure of the multiplicative group (Z/nZ)*: a deterministic set of
// independent cyclic generators obtained from the prime-power decomposition
// of n (smallest generator per odd prime-power component; -1 and 5 for
// 2^t with t >= 3), a complete discrete-log table, and the invariant-factor
// isomorphism type.

#include <cstdint>
#include <span>
#include <vector>

#include "cyclozeta/modulus.hpp"

namespace cyclozeta {

struct CyclicFactor {
  int64_t generator;  // residue mod n
  int64_t order;      // order of the generator
};

class UnitGroup {
 public:
  explicit UnitGroup(Modulus m);

  const Modulus& modulus() const { return modulus_; }
  int64_t order() const { return order_; }       // phi(n)
  int64_t exponent() const { return exponent_; }  // lcm of factor orders

  // Independent cyclic factors; orders multiply to phi(n). Sorted by
  // descending order, ties by ascending generator.
  const std::vector<CyclicFactor>& factors() const { return factors_; }

  bool is_unit(int64_t k) const;

  // Exponent vector (e_1,...,e_r) with u = prod g_j^{e_j} (mod n).
  // Requires gcd(u, n) = 1.
  std::span<const std::int32_t> dlog(int64_t u) const;

  // prod g_j^{exps_j} mod n.
  int64_t compose(std::span<const int64_t> exps) const;

  // Invariant factors d_1 >= d_2 >= ... with d_{i+1} | d_i.
  std::vector<int64_t> isomorphism_type() const;

 private:
  Modulus modulus_;
  int64_t order_;
  int64_t exponent_;
  std::vector<CyclicFactor> factors_;
  std::vector<std::int32_t> dlog_flat_;  // n rows of factors_.size() entries
};

UnitGroup build_unit_group(const Modulus& m);

// Smallest l >= 1 with k^l = 1 (mod n); throws when gcd(k,n) != 1.
int64_t multiplicative_order(int64_t k, const Modulus& n);

}  // namespace cyclozeta
