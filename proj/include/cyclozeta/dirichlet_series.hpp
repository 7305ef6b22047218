#pragma once

// Coefficients a_n(k) of the zeta-function Dirichlet series of Z[xi_n]:
// a_n(k) counts the Bravais colourings of the module with k colours (equal
// to the ideals of norm k; colour counts exactly in the class number one
// cases). a_n is multiplicative with prime-power values
//   a_n(p^r) = binom(r/l + m - 1, m - 1) if l | r, else 0,
// where (l, m) is the local Euler shape of p. Single values come from
// factorization, bulk arrays from an Euler-product sieve.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclozeta/modulus.hpp"

namespace cyclozeta {

enum class Interpretation { colour_counts, ideal_counts };

inline const char* to_string(Interpretation i) {
  return i == Interpretation::colour_counts ? "colour-counts" : "ideal-counts";
}

// Bulk sieve envelope: dense 32-bit counters, ~400 MB at the cap.
inline constexpr int64_t kMaxSieveLimit = 100'000'000;

struct CoefficientSeries {
  Modulus modulus;
  int64_t limit;
  Interpretation interpretation;
  std::vector<std::uint32_t> coeffs;  // index k in 1..limit; [0] unused

  std::uint32_t at(int64_t k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

struct PartialSum {
  int64_t x;
  int64_t value;  // A_n(x) = sum_{k<=x} a_n(k)
};

// a_n(k) by full factorization of k (k <= 1e12).
int64_t coefficient_at(const Modulus& n, int64_t k);

// a_n(1..K) by sieving one Euler factor per prime.
CoefficientSeries coefficients_up_to(const Modulus& n, int64_t K);

PartialSum partial_sum(const Modulus& n, int64_t x);
int64_t partial_sum(const CoefficientSeries& series, int64_t x);

// Sorted k <= K with a_n(k) > 0: the semigroup generated by the basic
// indices p^l, intersected with [1, K].
std::vector<int64_t> admissible_counts(const Modulus& n, int64_t K);

// "1 + a/k^s + ..." with the first `terms` nonzero coefficients after 1.
// Ideal-count series carry an explicit marker.
std::string format_series(const CoefficientSeries& series, int64_t terms);

}  // namespace cyclozeta
