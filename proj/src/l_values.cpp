#include "cyclozeta/l_values.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclozeta/arith.hpp"
#include "cyclozeta/dirichlet_series.hpp"

namespace cyclozeta {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> unit_circle(double t) {  // e(t) = exp(2 pi i t)
  return {std::cos(2.0 * kPi * t), std::sin(2.0 * kPi * t)};
}

}  // namespace

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  const auto f = static_cast<double>(chi.conductor());
  std::complex<double> sum = 0.0;
  for (int64_t a = 1; a <= chi.conductor(); ++a) {
    const auto v = chi.value_at(a);
    if (!v) continue;
    sum += v->to_complex() * unit_circle(static_cast<double>(a) / f);
  }
  return sum;
}

std::complex<double> l_at_one(const DirichletCharacter& chi) {
  if (chi.is_trivial()) {
    throw std::invalid_argument(
        "l_at_one: the trivial character gives the Riemann zeta, pole at 1");
  }
  const int64_t f = chi.conductor();
  const auto fd = static_cast<double>(f);
  const std::complex<double> tau = gauss_sum(chi);

  if (!chi.is_even()) {
    // B_{1, conj(chi)} = (1/f) sum_a conj(chi)(a) a; the a = f term is 0.
    std::complex<double> b1 = 0.0;
    for (int64_t a = 1; a < f; ++a) {
      const auto v = chi.value_at(a);
      if (!v) continue;
      b1 += v->conj().to_complex() * static_cast<double>(a);
    }
    b1 /= fd;
    return std::complex<double>(0.0, kPi) * tau / fd * b1;
  }

  // ln|1 - e(a/f)| = ln(2 sin(pi a / f)) for 0 < a < f.
  std::complex<double> sum = 0.0;
  for (int64_t a = 1; a < f; ++a) {
    const auto v = chi.value_at(a);
    if (!v) continue;
    sum += v->conj().to_complex() *
           std::log(2.0 * std::sin(kPi * static_cast<double>(a) / fd));
  }
  return -tau / fd * sum;
}

std::complex<double> l_at_one_direct(const DirichletCharacter& chi,
                                     int64_t periods) {
  if (chi.is_trivial()) {
    throw std::invalid_argument("l_at_one_direct: trivial character");
  }
  if (periods < 2) {
    throw std::invalid_argument("l_at_one_direct: need at least 2 periods");
  }
  const int64_t f = chi.conductor();
  // chi sums to zero over each full period, so the partial sums taken at
  // period boundaries converge like 1/periods; average the last two.
  std::complex<double> sum = 0.0;
  std::complex<double> previous = 0.0;
  for (int64_t m = 0; m < periods; ++m) {
    if (m == periods - 1) previous = sum;
    for (int64_t a = 1; a <= f; ++a) {
      const auto v = chi.value_at(a);
      if (!v) continue;
      sum += v->to_complex() / static_cast<double>(m * f + a);
    }
  }
  return 0.5 * (sum + previous);
}

ResidueReport residue(const Modulus& n) {
  ResidueReport report{n, {}, 1.0, 0.0, 1.0};
  std::complex<double> product = 1.0;
  for (const auto& chi : all_characters(n)) {
    if (chi.is_trivial()) continue;
    const auto value = l_at_one(chi);
    report.factors.push_back({chi.label(), value});
    product *= value;
  }
  if (!std::isfinite(product.real()) || !std::isfinite(product.imag())) {
    throw std::logic_error("residue: non-finite L-value product");
  }
  report.alpha = product.real();

  double ramified = 1.0;
  for (const auto& [p, e] : factorize(n.value())) {
    ramified *= std::pow(static_cast<double>(p),
                         1.0 / (static_cast<double>(p) - 1.0));
  }
  report.ramified_product = ramified;

  const auto nn = static_cast<double>(n.value());
  const auto big_n = static_cast<double>(symmetry_order(n));
  const double phi_half = static_cast<double>(totient(n.value())) / 2.0;
  report.regulator =
      report.alpha * big_n / std::pow(2.0 * kPi * ramified / nn, phi_half);
  return report;
}

double empirical_rate(const Modulus& n, int64_t x) {
  const auto sum = partial_sum(n, x);
  return static_cast<double>(sum.value) / static_cast<double>(x);
}

}  // namespace cyclozeta
