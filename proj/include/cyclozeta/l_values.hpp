#pragma once

// Numerical evaluation of L(1,chi) for non-trivial primitive characters and
// of the resulting zeta residue alpha_n = prod_{chi != 1} L(1,chi), the
// asymptotic density of the colouring counts. Closed forms:
//   odd chi:  L(1,chi) = (i pi tau(chi)/f) * B_{1,conj(chi)},
//             B_{1,chi} = (1/f) sum_{a=1..f} chi(a) a
//   even chi: L(1,chi) = -(tau(chi)/f) sum_{a=1..f-1} conj(chi)(a) ln(2 sin(pi a/f))
// with tau the Gauss sum. A direct truncated summation of the defining
// series cross-checks the constants, and the field regulator R_n is
// back-solved from
//   alpha_n = (R_n / N(n)) * (2 pi prod_{p|n} p^{1/(p-1)} / n)^{phi(n)/2}.

#include <complex>
#include <cstdint>
#include <vector>

#include "cyclozeta/characters.hpp"
#include "cyclozeta/modulus.hpp"

namespace cyclozeta {

struct LValueFactor {
  std::vector<int64_t> label;
  std::complex<double> value;
};

struct ResidueReport {
  Modulus modulus;
  std::vector<LValueFactor> factors;  // one per non-trivial character
  double alpha;                       // residue of the Dedekind zeta at s=1
  double regulator;                   // back-solved R_n
  double ramified_product;            // prod_{p|n} p^{1/(p-1)}
};

// tau(chi) = sum_{a=1..f} chi(a) e(a/f); |tau|^2 = f for primitive chi.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

// Closed-form L(1,chi); throws std::invalid_argument on the trivial
// character (whose L-series is the Riemann zeta, with a pole at 1).
std::complex<double> l_at_one(const DirichletCharacter& chi);

// Truncated sum of sum_k chi(k)/k over `periods` full conductor periods,
// fixed left-to-right order, endpoint-averaged over the last two periods.
// Accuracy ~1e-4 at 1e5 periods.
std::complex<double> l_at_one_direct(const DirichletCharacter& chi,
                                     int64_t periods);

ResidueReport residue(const Modulus& n);

// A_n(x)/x from the coefficient sieve; converges to alpha_n.
double empirical_rate(const Modulus& n, int64_t x);

}  // namespace cyclozeta
