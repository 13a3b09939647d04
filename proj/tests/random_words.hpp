#pragma once

#include <random>

#include "fixsub/words.hpp"

namespace fixsub::testing {

inline constexpr std::uint64_t kSeed = 20240611;

inline Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::uint32_t> key_dist(0, static_cast<std::uint32_t>(2 * rank - 1));
  std::vector<Letter> letters;
  std::size_t n = len_dist(rng);
  for (std::size_t i = 0; i < n; ++i) letters.push_back(Letter::from_order_key(key_dist(rng)));
  return reduce(rank, letters);
}

// Exactly `len` letters, no cancellation.
inline Word random_reduced_word(std::mt19937_64& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> key_dist(0, static_cast<std::uint32_t>(2 * rank - 1));
  std::vector<Letter> letters;
  while (letters.size() < len) {
    Letter x = Letter::from_order_key(key_dist(rng));
    if (!letters.empty() && letters.back() == x.inverse()) continue;
    letters.push_back(x);
  }
  return reduce(rank, letters);
}

}  // namespace fixsub::testing
