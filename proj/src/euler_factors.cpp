#include "cyclozeta/euler_factors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclozeta/arith.hpp"

namespace cyclozeta {

int64_t p_free_part(int64_t n, int64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

EulerShape shape_via_order(const Modulus& n, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("shape_via_order: p not prime");
  const int64_t nn = n.value();
  if (nn % p != 0) {
    const int64_t ell = multiplicative_order_mod(p, nn);
    return {p, ell, totient(nn) / ell};
  }
  const int64_t r = p_free_part(nn, p);
  if (r == 1) return {p, 1, 1};
  const int64_t ell = multiplicative_order_mod(p, r);
  return {p, ell, totient(r) / ell};
}

EulerShape shape_via_characters(std::span<const DirichletCharacter> chars,
                                int64_t p) {
  if (chars.empty()) {
    throw std::invalid_argument("shape_via_characters: no characters");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("shape_via_characters: p not prime");
  }
  // Collect the nonzero values chi(p) as exponents of the common root order.
  std::vector<RootOfUnity> values;
  values.reserve(chars.size());
  for (const auto& chi : chars) {
    if (auto v = chi.value_at(p)) values.push_back(*v);
  }
  if (values.empty()) {
    throw std::logic_error("shape_via_characters: trivial character vanished");
  }
  int64_t ell = 1;
  for (const auto& v : values) ell = std::max(ell, v.order());
  const auto count = static_cast<int64_t>(values.size());
  if (count % ell != 0) {
    throw std::logic_error(
        "shape_via_characters: value count not divisible by the degree");
  }
  const int64_t m = count / ell;
  // The multiset must be exactly m copies of each ell-th root of unity,
  // i.e. m values at each exponent j * (ord/ell).
  const int64_t ord = values.front().ord;
  std::vector<int64_t> per_root(static_cast<std::size_t>(ell), 0);
  for (const auto& v : values) {
    if (v.num % (ord / ell) != 0) {
      throw std::logic_error("shape_via_characters: value outside mu_ell");
    }
    ++per_root[static_cast<std::size_t>(v.num / (ord / ell))];
  }
  for (int64_t c : per_root) {
    if (c != m) {
      throw std::logic_error(
          "shape_via_characters: values are not m copies of mu_ell");
    }
  }
  return {p, ell, m};
}

EulerShape shape_via_characters(const Modulus& n, int64_t p) {
  const auto chars = all_characters(n);
  return shape_via_characters(std::span(chars.data(), chars.size()), p);
}

std::vector<BasicIndex> basic_index_table(const Modulus& n) {
  std::vector<BasicIndex> table;
  for (int64_t k = 1; k < n.value(); ++k) {
    if (std::gcd(k, n.value()) != 1) continue;
    table.push_back({k, multiplicative_order_mod(k, n.value())});
  }
  return table;
}

std::vector<RamifiedPrime> ramified_table(const Modulus& n) {
  std::vector<RamifiedPrime> table;
  for (const auto& [p, e] : factorize(n.value())) {
    const auto shape = shape_via_order(n, p);
    const int64_t r = p_free_part(n.value(), p);
    table.push_back({p, r, totient(r), shape.ell, shape.m});
  }
  return table;
}

}  // namespace cyclozeta
