#include "fixsub/enumerate.hpp"

#include <omp.h>

#include "fixsub/errors.hpp"
#include "fixsub/surface.hpp"

namespace fixsub {

namespace {

void check_budget(const FixedWordQuery& q, std::size_t rank) {
  Integer total = count_reduced_words(rank, q.max_len);
  if (total > q.max_words)
    throw BudgetExceeded("enumerating words up to length " + std::to_string(q.max_len) + " visits " +
                         total.get_str() + " words, above the budget of " + std::to_string(q.max_words));
}

std::size_t word_rank(const FixedWordQuery& q) { return q.images.size(); }

bool is_fixed(const FixedWordQuery& q, const Word& u) {
  Word image = apply_map(q.images, u);
  if (!q.genus) return image == u;
  if (image == u) return true;
  return is_trivial(multiply(image, invert(u)), *q.genus);
}

// Depth-first extension of `prefix` to every reduced word of exactly
// `target` letters, in alphabet order.
void extend(const FixedWordQuery& q, std::vector<Letter>& prefix, std::size_t target, std::vector<Word>& out) {
  const std::size_t rank = word_rank(q);
  if (prefix.size() == target) {
    Word u = reduce_unchecked(rank, std::vector<Letter>(prefix));
    if (is_fixed(q, u)) out.push_back(std::move(u));
    return;
  }
  for (std::uint32_t key = 0; key < 2 * rank; ++key) {
    Letter x = Letter::from_order_key(key);
    if (!prefix.empty() && prefix.back() == x.inverse()) continue;
    prefix.push_back(x);
    extend(q, prefix, target, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<Letter>> prefixes(std::size_t rank, std::size_t len) {
  std::vector<std::vector<Letter>> level{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<Letter>> next;
    for (const auto& p : level)
      for (std::uint32_t key = 0; key < 2 * rank; ++key) {
        Letter x = Letter::from_order_key(key);
        if (!p.empty() && p.back() == x.inverse()) continue;
        next.push_back(p);
        next.back().push_back(x);
      }
    level = std::move(next);
  }
  return level;
}

}  // namespace

Integer count_reduced_words(std::size_t rank, std::size_t max_len) {
  if (rank == 0) return Integer(1);
  Integer total = 1, layer = 2 * rank;
  for (std::size_t len = 1; len <= max_len; ++len) {
    total += layer;
    layer *= 2 * rank - 1;
  }
  return total;
}

std::vector<Word> fixed_words_serial(const FixedWordQuery& q) {
  const std::size_t rank = word_rank(q);
  check_budget(q, rank);
  std::vector<Word> out;
  std::vector<Letter> prefix;
  for (std::size_t len = 0; len <= q.max_len; ++len) extend(q, prefix, len, out);
  return out;
}

std::vector<Word> fixed_words_parallel(const FixedWordQuery& q) {
  const std::size_t rank = word_rank(q);
  check_budget(q, rank);
  // Surface checks are cheap to trigger from many threads; warm the relator
  // cache once so the threads only read it.
  if (q.genus) is_trivial(Word(rank), *q.genus);
  std::vector<Word> out;
  constexpr std::size_t split = 3;
  for (std::size_t len = 0; len <= q.max_len; ++len) {
    auto heads = prefixes(rank, std::min(len, split));
    std::vector<std::vector<Word>> found(heads.size());
    const long n = static_cast<long>(heads.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      std::vector<Letter> prefix = heads[static_cast<std::size_t>(i)];
      extend(q, prefix, len, found[static_cast<std::size_t>(i)]);
    }
    for (auto& part : found)
      for (auto& w : part) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace fixsub
