#pragma once

// Brute-force ground truth for the series coefficients: a_n(k) equals the
// number of finite-index subgroups L of Z[xi_n] (as a rank-phi(n) lattice)
// with [Z[xi_n] : L] = k that are closed under multiplication by xi_n.
// Sublattices are enumerated exactly once in column-style Hermite normal
// form; closure is tested column by column with exact integer
// back-substitution so violating prefixes are pruned early.

#include <cstdint>
#include <span>
#include <vector>

#include "cyclozeta/modulus.hpp"

namespace cyclozeta {

// Coefficients of the n-th cyclotomic polynomial, ascending degree,
// leading coefficient last (monic).
std::vector<int64_t> cyclotomic_polynomial(int64_t n);

// Multiplication by xi_n on the power basis 1, xi, ..., xi^{d-1}.
class CyclotomicAction {
 public:
  explicit CyclotomicAction(const Modulus& n);

  const Modulus& modulus() const { return modulus_; }
  int64_t degree() const { return degree_; }
  const std::vector<int64_t>& phi_coeffs() const { return phi_coeffs_; }

  // Column c of the companion matrix (c in 0..degree-1).
  std::span<const int64_t> column(int64_t c) const;

  // companion * v.
  std::vector<int64_t> apply(std::span<const int64_t> v) const;

  // |det| of the companion = |Phi_n(0)|: p for n = p^t, 1 otherwise.
  int64_t abs_det() const;

 private:
  Modulus modulus_;
  int64_t degree_;
  std::vector<int64_t> phi_coeffs_;
  std::vector<int64_t> columns_;  // degree x degree, column-major
};

struct OracleOptions {
  int64_t max_nodes = 50'000'000;  // DFS node budget; capacity_error beyond
};

// Number of xi-invariant sublattices of index k. Requires phi(n) <= 8.
int64_t count_invariant_sublattices(const CyclotomicAction& action, int64_t k,
                                    const OracleOptions& options = {});
int64_t count_invariant_sublattices(const Modulus& n, int64_t k,
                                    const OracleOptions& options = {});

// All HNF sublattices of index k in Z^dim, no invariance filter (same
// enumerator). For prime k this must equal 1 + p + ... + p^{dim-1}.
int64_t count_all_sublattices(int64_t dim, int64_t k,
                              const OracleOptions& options = {});

// Second oracle for the two crystallographic cases n = 3, 4: ring elements
// of field norm k in a bounding box, divided by the unit count (6 resp. 4).
int64_t element_norm_count(const Modulus& n, int64_t k);

}  // namespace cyclozeta
