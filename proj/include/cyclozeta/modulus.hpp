#pragma once

// The planar cyclotomic modules Z[xi_n] are indexed by n >= 3 with
// n != 2 (mod 4): for odd n the module equals the one for 2n, so those
// duplicates are rejected at construction. Exactly 29 values of n give a
// class number one field, where sublattice counts are colour counts; for
// every other n the same machinery counts ideals.

#include <array>
#include <cstdint>

namespace cyclozeta {

using std::int64_t;

// The 29 values of n (besides n=1) for which Z[xi_n] is a PID.
inline constexpr std::array<int64_t, 29> kClassNumberOne = {
    3,  4,  5,  7,  8,  9,  11, 12, 13, 15, 16, 17, 19, 20, 21,
    24, 25, 27, 28, 32, 33, 35, 36, 40, 44, 45, 48, 60, 84};

bool is_class_number_one(int64_t n);

class Modulus {
 public:
  // Requires n >= 3 and n != 2 (mod 4); for n = 2m with m odd the error
  // message points at m. n <= 1e6 is the supported envelope.
  explicit Modulus(int64_t n);

  int64_t value() const { return n_; }
  bool class_number_one() const { return class_number_one_; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.n_ == b.n_;
  }

 private:
  int64_t n_;
  bool class_number_one_;
};

// Rotation order of Z[xi_n]: n for even n, 2n for odd n.
int64_t symmetry_order(const Modulus& n);

}  // namespace cyclozeta
