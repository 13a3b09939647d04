#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fixsub/integer.hpp"
#include "fixsub/words.hpp"

namespace fixsub {

inline constexpr std::size_t kDefaultWordBudget = 20'000'000;

// Number of freely reduced words of length <= max_len over `rank` generators.
Integer count_reduced_words(std::size_t rank, std::size_t max_len);

// Reduced words u with |u| <= max_len and alpha(u) = u, in length-lex order.
// With a genus, equality is tested in the surface group (Dehn on
// alpha(u) u^-1); otherwise as reduced words. Throws BudgetExceeded when
// more than max_words words would be visited.
struct FixedWordQuery {
  std::span<const Word> images;
  std::optional<std::size_t> genus;
  std::size_t max_len = 0;
  std::size_t max_words = kDefaultWordBudget;
};

std::vector<Word> fixed_words_serial(const FixedWordQuery& q);
// Same output, prefixes distributed over OpenMP threads.
std::vector<Word> fixed_words_parallel(const FixedWordQuery& q);

}  // namespace fixsub
