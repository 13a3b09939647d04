#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fixsub {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

inline IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace fixsub
