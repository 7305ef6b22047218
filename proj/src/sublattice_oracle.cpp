#include "cyclozeta/sublattice_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclozeta/arith.hpp"
#include "cyclozeta/errors.hpp"

namespace cyclozeta {

std::vector<int64_t> cyclotomic_polynomial(int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
  if (n == 1) return {-1, 1};  // x - 1
  // Divide x^n - 1 by the cyclotomic polynomials of all proper divisors.
  std::vector<int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly.front() = -1;
  poly.back() = 1;
  for (int64_t d : divisors(n)) {
    if (d == n) continue;
    const auto divisor = cyclotomic_polynomial(d);
    // Exact polynomial long division (monic divisor).
    std::vector<int64_t> quotient(poly.size() - divisor.size() + 1, 0);
    for (std::size_t i = quotient.size(); i-- > 0;) {
      const int64_t c = poly[i + divisor.size() - 1];
      quotient[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < divisor.size(); ++j) {
        poly[i + j] -= c * divisor[j];
      }
    }
    for (int64_t rem : poly) {
      if (rem != 0) throw std::logic_error("cyclotomic division not exact");
    }
    poly = std::move(quotient);
  }
  return poly;
}

CyclotomicAction::CyclotomicAction(const Modulus& n)
    : modulus_(n),
      degree_(totient(n.value())),
      phi_coeffs_(cyclotomic_polynomial(n.value())) {
  const auto d = static_cast<std::size_t>(degree_);
  if (phi_coeffs_.size() != d + 1) {
    throw std::logic_error("cyclotomic degree mismatch");
  }
  columns_.assign(d * d, 0);
  // Column c is xi * xi^c: e_{c+1} for c < d-1, and -(low coefficients of
  // Phi_n) for the last column (xi^d = -sum c_i xi^i).
  for (std::size_t c = 0; c + 1 < d; ++c) {
    columns_[c * d + (c + 1)] = 1;
  }
  for (std::size_t i = 0; i < d; ++i) {
    columns_[(d - 1) * d + i] = -phi_coeffs_[i];
  }
}

std::span<const int64_t> CyclotomicAction::column(int64_t c) const {
  const auto d = static_cast<std::size_t>(degree_);
  return {columns_.data() + static_cast<std::size_t>(c) * d, d};
}

std::vector<int64_t> CyclotomicAction::apply(std::span<const int64_t> v) const {
  const auto d = static_cast<std::size_t>(degree_);
  if (v.size() != d) throw std::invalid_argument("apply: wrong dimension");
  std::vector<int64_t> result(d, 0);
  for (std::size_t c = 0; c < d; ++c) {
    if (v[c] == 0) continue;
    const auto col = column(static_cast<int64_t>(c));
    for (std::size_t i = 0; i < d; ++i) result[i] += v[c] * col[i];
  }
  return result;
}

int64_t CyclotomicAction::abs_det() const {
  return phi_coeffs_.front() < 0 ? -phi_coeffs_.front() : phi_coeffs_.front();
}

namespace {

// Shared state of one enumeration run over a fixed diagonal.
struct Enumerator {
  int64_t dim;
  const CyclotomicAction* action;  // null = count every sublattice
  int64_t max_nodes;
  int64_t nodes = 0;
  int64_t hits = 0;
  std::vector<int64_t> diag;
  std::vector<int64_t> h;  // dim x dim, h[i*dim+j], columns are basis vectors

  int64_t& at(int64_t i, int64_t j) { return h[i * dim + j]; }
  int64_t at(int64_t i, int64_t j) const { return h[i * dim + j]; }

  void tick() {
    if (++nodes > max_nodes) {
      throw capacity_error("sublattice enumeration exceeded the node budget");
    }
  }

  // Is v (support in rows 0..m-1) in the span of columns 0..m-1?
  // Back-substitution against the triangular basis, exact integers.
  bool member(std::vector<int64_t> v, int64_t m) const {
    for (int64_t i = m - 1; i >= 0; --i) {
      if (v[i] % at(i, i) != 0) return false;
      const int64_t q = v[i] / at(i, i);
      if (q == 0) continue;
      for (int64_t r = 0; r <= i; ++r) v[r] -= q * at(r, i);
    }
    return true;
  }

  // Down-shift of column j = companion * column j when j < dim-1.
  std::vector<int64_t> shifted_column(int64_t j) const {
    std::vector<int64_t> v(dim, 0);
    for (int64_t i = 0; i <= j; ++i) v[i + 1] = at(i, j);
    return v;
  }

  // Closure of column j once columns 0..j+1 are fixed (support fits).
  bool closure_ok(int64_t j) const {
    if (action == nullptr) return true;
    if (j < dim - 1) return member(shifted_column(j), j + 2);
    std::vector<int64_t> col(dim);
    for (int64_t i = 0; i < dim; ++i) col[i] = at(i, j);
    return member(action->apply(col), dim);
  }

  // Fill column c (entries rows 0..c-1, each in [0, diag[i])), recursing
  // into the next column; prune on the closure of column c-1.
  void fill_column(int64_t c) {
    if (c == dim) {
      if (closure_ok(dim - 1)) ++hits;
      return;
    }
    std::vector<int64_t> entry(c, 0);
    while (true) {
      tick();
      for (int64_t i = 0; i < c; ++i) at(i, c) = entry[i];
      if (closure_ok(c - 1)) fill_column(c + 1);
      int64_t i = c;
      bool done = true;
      while (i > 0) {
        --i;
        if (++entry[i] < diag[i]) {
          done = false;
          break;
        }
        entry[i] = 0;
      }
      if (done) break;
    }
  }

  void run_diagonal() {
    std::fill(h.begin(), h.end(), 0);
    for (int64_t i = 0; i < dim; ++i) at(i, i) = diag[i];
    if (dim == 1) {
      tick();
      ++hits;  // the 1x1 case is always xi-closed
      return;
    }
    fill_column(1);
  }
};

void for_each_diagonal(int64_t k, int64_t position, std::vector<int64_t>& diag,
                       Enumerator& e) {
  if (position == e.dim - 1) {
    diag[position] = k;
    e.diag = diag;
    e.run_diagonal();
    return;
  }
  for (int64_t d : divisors(k)) {
    diag[position] = d;
    for_each_diagonal(k / d, position + 1, diag, e);
  }
}

int64_t enumerate(int64_t dim, int64_t k, const CyclotomicAction* action,
                  const OracleOptions& options) {
  if (k < 1) throw std::invalid_argument("sublattice count: k must be >= 1");
  Enumerator e;
  e.dim = dim;
  e.action = action;
  e.max_nodes = options.max_nodes;
  e.h.assign(static_cast<std::size_t>(dim * dim), 0);
  std::vector<int64_t> diag(static_cast<std::size_t>(dim), 1);
  for_each_diagonal(k, 0, diag, e);
  return e.hits;
}

}  // namespace

int64_t count_invariant_sublattices(const CyclotomicAction& action, int64_t k,
                                    const OracleOptions& options) {
  if (action.degree() > 8) {
    throw std::invalid_argument(
        "count_invariant_sublattices: phi(n) > 8 is outside the envelope");
  }
  return enumerate(action.degree(), k, &action, options);
}

int64_t count_invariant_sublattices(const Modulus& n, int64_t k,
                                    const OracleOptions& options) {
  return count_invariant_sublattices(CyclotomicAction(n), k, options);
}

int64_t count_all_sublattices(int64_t dim, int64_t k,
                              const OracleOptions& options) {
  if (dim < 1 || dim > 8) {
    throw std::invalid_argument("count_all_sublattices: dim in 1..8");
  }
  return enumerate(dim, k, nullptr, options);
}

int64_t element_norm_count(const Modulus& n, int64_t k) {
  if (k < 1) throw std::invalid_argument("element_norm_count: k must be >= 1");
  const int64_t nn = n.value();
  if (nn != 3 && nn != 4) {
    throw std::invalid_argument(
        "element_norm_count: only n = 3 and n = 4 have finite unit groups");
  }
  // Z[i]: N(a+bi) = a^2 + b^2, 4 units. Z[xi_3]: N(a+b xi) = a^2 - ab + b^2,
  // 6 units. Either form is bounded below by (a^2+b^2)/4 in the search box.
  const int64_t units = nn == 4 ? 4 : 6;
  const int64_t bound = isqrt(4 * k) + 1;
  int64_t solutions = 0;
  for (int64_t a = -bound; a <= bound; ++a) {
    for (int64_t b = -bound; b <= bound; ++b) {
      const int64_t norm = nn == 4 ? a * a + b * b : a * a - a * b + b * b;
      if (norm == k) ++solutions;
    }
  }
  if (solutions % units != 0) {
    throw std::logic_error("element_norm_count: orbit size mismatch");
  }
  return solutions / units;
}

}  // namespace cyclozeta
