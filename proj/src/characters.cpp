#include "cyclozeta/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cyclozeta/arith.hpp"

namespace cyclozeta {

int64_t RootOfUnity::order() const {
  return ord / std::gcd(num == 0 ? ord : num, ord);
}

std::complex<double> RootOfUnity::to_complex() const {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(ord);
  return {std::cos(angle), std::sin(angle)};
}

std::string RootOfUnity::to_string() const {
  const int64_t g = std::gcd(num == 0 ? ord : num, ord);
  const int64_t a = num / g, b = ord / g;
  if (b == 1) return "1";
  if (b == 2) return "-1";
  if (b == 4 && a == 1) return "i";
  if (b == 4 && a == 3) return "-i";
  return "e(" + std::to_string(a) + "/" + std::to_string(b) + ")";
}

RootOfUnity operator*(RootOfUnity a, RootOfUnity b) {
  if (a.ord != b.ord) {
    throw std::invalid_argument("root-of-unity orders differ");
  }
  return {(a.num + b.num) % a.ord, a.ord};
}

std::optional<RootOfUnity> DirichletCharacter::value_at(int64_t k) const {
  if (k == 0) return std::nullopt;
  int64_t r = k % conductor_;
  if (r < 0) r += conductor_;
  const std::int32_t num = table_[static_cast<std::size_t>(r)];
  if (num < 0) return std::nullopt;
  return RootOfUnity{num, root_order_};
}

std::complex<double> DirichletCharacter::complex_at(int64_t k) const {
  const auto v = value_at(k);
  return v ? v->to_complex() : std::complex<double>{0.0, 0.0};
}

std::vector<DirichletCharacter> all_characters(const UnitGroup& group) {
  const int64_t n = group.modulus().value();
  // Materializing all phi(n) characters stores one table per conductor;
  // the dense total is Theta(phi(n) * n) in the worst case.
  if (group.order() > 2'000'000'000 / n) {
    throw capacity_error(
        "all_characters: phi(n) * n exceeds the table memory envelope");
  }
  const int64_t e = group.exponent();
  const auto& factors = group.factors();
  const std::size_t r = factors.size();

  // chi(g_j) = e(i_j / d_j); on a unit u with dlog (e_1,..,e_r) the value
  // exponent is sum e_j * i_j * (e/d_j) mod e.
  std::vector<int64_t> strides(r);
  for (std::size_t j = 0; j < r; ++j) strides[j] = e / factors[j].order;

  const auto divisors_of_n = divisors(n);

  std::vector<DirichletCharacter> result;
  result.reserve(static_cast<std::size_t>(group.order()));

  std::vector<int64_t> label(r, 0);
  while (true) {
    DirichletCharacter chi(group.modulus());
    chi.label_ = label;
    chi.root_order_ = e;

    auto exponent_on_unit = [&](int64_t u) {
      const auto dl = group.dlog(u);
      int64_t num = 0;
      for (std::size_t j = 0; j < r; ++j) {
        num = (num + dl[j] % factors[j].order * (label[j] * strides[j] % e)) % e;
      }
      return num;
    };

    // Conductor: smallest divisor f of n with chi = 1 on every unit
    // that is 1 mod f.
    for (int64_t f : divisors_of_n) {
      bool trivial_on_kernel = true;
      for (int64_t a = 1 + f; a < n && trivial_on_kernel; a += f) {
        if (std::gcd(a, n) != 1) continue;
        if (exponent_on_unit(a) != 0) trivial_on_kernel = false;
      }
      if (trivial_on_kernel) {
        chi.conductor_ = f;
        break;
      }
    }
    const int64_t f = chi.conductor_;

    // Primitive value table mod f: lift k to a unit mod n in the same
    // class mod f; the conductor property makes the value lift-independent.
    chi.table_.assign(static_cast<std::size_t>(f), -1);
    for (int64_t k = 0; k < f; ++k) {
      if (std::gcd(k, f) != 1) continue;
      int64_t lift = k == 0 ? 1 : k;  // k=0 only when f=1
      while (std::gcd(lift, n) != 1) lift += f;
      chi.table_[static_cast<std::size_t>(k)] =
          static_cast<std::int32_t>(exponent_on_unit(lift));
    }

    chi.even_ = exponent_on_unit(n - 1) == 0;
    result.push_back(std::move(chi));

    // Next label, lexicographic.
    std::size_t j = r;
    bool done = true;
    while (j > 0) {
      --j;
      if (++label[j] < factors[j].order) {
        done = false;
        break;
      }
      label[j] = 0;
    }
    if (done) break;
  }
  return result;
}

std::vector<DirichletCharacter> all_characters(const Modulus& n) {
  return all_characters(UnitGroup(n));
}

int64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

std::optional<RootOfUnity> value_at(const DirichletCharacter& chi, int64_t k) {
  return chi.value_at(k);
}

}  // namespace cyclozeta
