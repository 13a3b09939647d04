#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fixsub/integer.hpp"

namespace fixsub {

// A generator or its inverse, encoded as +i / -i for generator i >= 1.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, int sign)
      : code_(sign < 0 ? -static_cast<std::int32_t>(generator)
                       : static_cast<std::int32_t>(generator)) {}
  static constexpr Letter from_code(std::int32_t code) {
    Letter x;
    x.code_ = code;
    return x;
  }

  constexpr std::uint32_t generator() const {
    return static_cast<std::uint32_t>(code_ < 0 ? -code_ : code_);
  }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr std::int32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }

  // Alphabet order: a1 < A1 < a2 < A2 < ...
  constexpr std::uint32_t order_key() const {
    return 2 * (generator() - 1) + (code_ < 0 ? 1 : 0);
  }
  static constexpr Letter from_order_key(std::uint32_t key) {
    return Letter(key / 2 + 1, key % 2 ? -1 : 1);
  }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  std::int32_t code_ = 0;
};

// A freely reduced word over generators 1..rank. Always stored reduced, so
// group equality in a free group is sequence equality.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  static Word generator(std::size_t rank, std::uint32_t index, int sign = 1);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  // Length-lex order, letters compared by order_key.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  friend Word reduce(std::size_t rank, std::span<const Letter> letters);
  friend Word reduce_unchecked(std::size_t rank, std::vector<Letter>&& letters);

  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

// Alphabets for the text syntax. Surface words have rank 2g, generator
// 2i-1 printed a<i> and generator 2i printed b<i>.
enum class Alphabet { free, surface };

Word reduce(std::size_t rank, std::span<const Letter> letters);
// Same, without the rank check on letters (internal hot paths).
Word reduce_unchecked(std::size_t rank, std::vector<Letter>&& letters);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long n);
Word commutator(const Word& u, const Word& v);

Integer exponent_sum(const Word& u, std::uint32_t generator);
IntVector abelianize(const Word& u);

// Substitutes images[i-1] for generator i. All images share one rank.
Word apply_map(std::span<const Word> images, const Word& u);
std::vector<Word> compose_maps(std::span<const Word> outer,
                               std::span<const Word> inner);
std::vector<Word> identity_map(std::size_t rank);

std::string to_string(const Word& u, Alphabet alphabet = Alphabet::free);
Word parse_word(std::string_view text, std::size_t rank,
                Alphabet alphabet = Alphabet::free);

}  // namespace fixsub
