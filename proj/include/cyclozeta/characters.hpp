#pragma once

// Primitive Dirichlet characters attached to (Z/nZ)*. A character of the
// unit group is fixed by its exponent tuple against the UnitGroup
// generators; it is then extended to all integers as the primitive
// character of its conductor f: zero off gcd(k,f)=1, and on units mod f
// the value at any lift of k that is a unit mod n. Values are exact roots
// of unity with a fixed common order (the exponent of the group), so
// character arithmetic and comparisons are pure integer work.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclozeta/unit_group.hpp"

namespace cyclozeta {

// exp(2*pi*i * num / ord), stored with a fixed ord shared across one
// character family.
struct RootOfUnity {
  int64_t num;
  int64_t ord;

  static RootOfUnity one(int64_t ord) { return {0, ord}; }

  RootOfUnity conj() const { return {num == 0 ? 0 : ord - num, ord}; }
  int64_t order() const;  // order as a group element: ord / gcd(num, ord)
  bool is_one() const { return num == 0; }
  std::complex<double> to_complex() const;

  // Exact text: "1", "-1", "i", "-i", or "e(num/ord)" in lowest terms.
  std::string to_string() const;

  friend RootOfUnity operator*(RootOfUnity a, RootOfUnity b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

class DirichletCharacter {
 public:
  const Modulus& modulus() const { return modulus_; }
  const std::vector<int64_t>& label() const { return label_; }
  int64_t conductor() const { return conductor_; }
  bool is_even() const { return even_; }
  bool is_trivial() const { return conductor_ == 1; }
  int64_t root_order() const { return root_order_; }

  // Primitive value at k: nullopt when gcd(k, conductor) > 1 (and at k=0),
  // otherwise the exact root of unity. Defined for any integer via
  // f-periodicity.
  std::optional<RootOfUnity> value_at(int64_t k) const;

  std::complex<double> complex_at(int64_t k) const;

 private:
  friend std::vector<DirichletCharacter> all_characters(const UnitGroup&);

  explicit DirichletCharacter(Modulus m) : modulus_(m) {}

  Modulus modulus_;
  std::vector<int64_t> label_;
  int64_t conductor_ = 1;
  bool even_ = true;
  int64_t root_order_ = 1;
  std::vector<std::int32_t> table_;  // index k mod f; num of value, -1 = zero
};

// All phi(n) characters, ordered by label tuple (lexicographic).
std::vector<DirichletCharacter> all_characters(const UnitGroup& group);
std::vector<DirichletCharacter> all_characters(const Modulus& n);

// Free-function forms.
int64_t conductor(const DirichletCharacter& chi);
std::optional<RootOfUnity> value_at(const DirichletCharacter& chi, int64_t k);

}  // namespace cyclozeta
