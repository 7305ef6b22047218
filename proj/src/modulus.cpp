#include "cyclozeta/modulus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclozeta {

bool is_class_number_one(int64_t n) {
  return std::find(kClassNumberOne.begin(), kClassNumberOne.end(), n) !=
         kClassNumberOne.end();
}

Modulus::Modulus(int64_t n) : n_(n), class_number_one_(is_class_number_one(n)) {
  if (n < 3) {
    throw std::invalid_argument("modulus must be at least 3, got " +
                                std::to_string(n));
  }
  if (n % 4 == 2) {
    throw std::invalid_argument(
        "modulus " + std::to_string(n) + " is 2 mod 4; Z[xi_" +
        std::to_string(n) + "] equals Z[xi_" + std::to_string(n / 2) +
        "], use n = " + std::to_string(n / 2));
  }
  if (n > 1'000'000) {
    throw std::invalid_argument("modulus exceeds the 1e6 envelope");
  }
}

int64_t symmetry_order(const Modulus& n) {
  return n.value() % 2 == 0 ? n.value() : 2 * n.value();
}

}  // namespace cyclozeta
