#pragma once

#include <stdexcept>
#include <string>

namespace cyclozeta {

// Raised when a request exceeds a documented envelope (sieve size, oracle
// node budget, factorization cap). CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclozeta
