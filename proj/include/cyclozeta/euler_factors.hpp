#pragma once

// Local factor shape of the Dedekind zeta function of Q(xi_n): at a prime p
// the factor is (1 - p^{-l s})^{-m}, where l is the residue class degree and
// m the number of prime ideal divisors of p. Two independent routes are
// provided: the order method (l = order of p in (Z/rZ)* with r = n or the
// p-free part of n) and the character method (multiset of nonzero chi(p),
// which must consist of m copies of all l-th roots of unity).

#include <cstdint>
#include <span>
#include <vector>

#include "cyclozeta/characters.hpp"
#include "cyclozeta/modulus.hpp"

namespace cyclozeta {

struct EulerShape {
  int64_t prime;
  int64_t ell;  // residue class degree
  int64_t m;    // number of prime ideal divisors

  friend bool operator==(const EulerShape&, const EulerShape&) = default;
};

// l and m from multiplicative orders; p | n is handled through the p-free
// part r of n (l = m = 1 when r = 1).
EulerShape shape_via_order(const Modulus& n, int64_t p);

// l and m from the multiset {chi(p) != 0}. Verifies the multiset is m copies
// of all l-th roots of unity and throws std::logic_error otherwise.
EulerShape shape_via_characters(std::span<const DirichletCharacter> chars,
                                int64_t p);
EulerShape shape_via_characters(const Modulus& n, int64_t p);

// One row of the unramified-prime table: primes p = k (mod n) contribute
// the basic index p^ell.
struct BasicIndex {
  int64_t residue;
  int64_t ell;

  friend bool operator==(const BasicIndex&, const BasicIndex&) = default;
};

// All residue classes k coprime to n, ascending, with their degree.
std::vector<BasicIndex> basic_index_table(const Modulus& n);

struct RamifiedPrime {
  int64_t p;
  int64_t pfree;      // r, the p-free part of n
  int64_t phi_pfree;  // phi(r) = ell * m
  int64_t ell;
  int64_t m;

  friend bool operator==(const RamifiedPrime&, const RamifiedPrime&) = default;
};

// The primes dividing n, ascending.
std::vector<RamifiedPrime> ramified_table(const Modulus& n);

int64_t p_free_part(int64_t n, int64_t p);

}  // namespace cyclozeta
