#include "doctest.h"
#include "random_words.hpp"

#include "fixsub/errors.hpp"
#include "fixsub/words.hpp"

using namespace fixsub;
using fixsub::testing::random_word;

namespace {

Word w2(std::string_view s) { return parse_word(s, 2); }
Word w3(std::string_view s) { return parse_word(s, 3); }

bool rescan_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1].inverse()) return false;
  return true;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  std::vector<Letter> a{{1, 1}, {1, -1}};
  CHECK(reduce(2, a).empty());
  std::vector<Letter> b{{1, 1}, {2, 1}, {2, -1}, {1, 1}};
  CHECK(reduce(2, b) == w2("a1 a1"));
  std::vector<Letter> bad{{3, 1}};
  CHECK_THROWS_AS(reduce(2, bad), std::out_of_range);
}

TEST_CASE("reduce on long random input leaves no cancelling pair") {
  std::mt19937_64 rng(fixsub::testing::kSeed);
  std::uniform_int_distribution<std::uint32_t> key(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Letter> raw;
    for (int i = 0; i < 50; ++i) raw.push_back(Letter::from_order_key(key(rng)));
    Word w = reduce(3, raw);
    CHECK(rescan_reduced(w));
    CHECK(w.size() <= raw.size());
    std::vector<Letter> again(w.letters().begin(), w.letters().end());
    CHECK(reduce(3, again) == w);
  }
}

TEST_CASE("multiply and invert") {
  CHECK(multiply(w2("a1"), w2("A1")).empty());
  CHECK(multiply(w3("a1 a2"), w3("A2 a3")) == w3("a1 a3"));
  CHECK(invert(Word(2)).empty());
  CHECK(invert(w2("a1 A2")) == w2("a2 A1"));
  CHECK_THROWS_AS(multiply(w2("a1"), w3("a1")), std::invalid_argument);

  std::mt19937_64 rng(fixsub::testing::kSeed);
  for (int i = 0; i < 100; ++i) {
    Word x = random_word(rng, 3, 8), y = random_word(rng, 3, 8), z = random_word(rng, 3, 8);
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    CHECK(invert(invert(x)) == x);
    CHECK(multiply(x, invert(x)).empty());
    CHECK(multiply(x, Word(3)) == x);
  }
}

TEST_CASE("exponent sums and abelianization are homomorphisms") {
  CHECK(exponent_sum(w2("a1 a2 a1"), 1) == 2);
  CHECK(exponent_sum(multiply(w2("a1"), w2("A1")), 1) == 0);
  CHECK(abelianize(Word(2)) == IntVector{0, 0});
  CHECK(abelianize(w2("a1 A2 a1")) == IntVector{2, -1});
  CHECK_THROWS(exponent_sum(w2("a1"), 3));

  std::mt19937_64 rng(fixsub::testing::kSeed + 1);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 3, 10), v = random_word(rng, 3, 10);
    Word uv = multiply(u, v);
    for (std::uint32_t g = 1; g <= 3; ++g)
      CHECK(exponent_sum(uv, g) == exponent_sum(u, g) + exponent_sum(v, g));
    IntVector a = abelianize(u), b = abelianize(v), c = abelianize(uv);
    for (std::size_t g = 0; g < 3; ++g) CHECK(c[g] == a[g] + b[g]);
  }
}

TEST_CASE("apply_map substitutes and respects composition") {
  std::vector<Word> id = identity_map(2);
  CHECK(apply_map(id, w2("a2 A1 a2")) == w2("a2 A1 a2"));
  std::vector<Word> flip{w2("a1"), w2("A2")};
  CHECK(apply_map(flip, w2("a2 a1")) == w2("A2 a1"));
  CHECK_THROWS_AS(apply_map(flip, w3("a1")), std::invalid_argument);

  std::mt19937_64 rng(fixsub::testing::kSeed + 2);
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> f, h;
    for (int j = 0; j < 3; ++j) {
      f.push_back(random_word(rng, 3, 4));
      h.push_back(random_word(rng, 3, 4));
    }
    Word u = random_word(rng, 3, 8), v = random_word(rng, 3, 8);
    CHECK(apply_map(f, multiply(u, v)) == multiply(apply_map(f, u), apply_map(f, v)));
    CHECK(apply_map(h, apply_map(f, u)) == apply_map(compose_maps(h, f), u));
  }
}

TEST_CASE("text syntax round-trips") {
  CHECK(to_string(Word(3)).empty());
  CHECK(parse_word("", 3).empty());
  CHECK(to_string(w3("a1 A3 a2")) == "a1 A3 a2");
  Word s = parse_word("a1 b1 A1 B1 a2 b2 A2 B2", 4, Alphabet::surface);
  CHECK(s.size() == 8);
  CHECK(s[1] == Letter(2, 1));
  CHECK(s[7] == Letter(4, -1));
  CHECK(to_string(s, Alphabet::surface) == "a1 b1 A1 B1 a2 b2 A2 B2");
  CHECK_THROWS_AS(parse_word("b1", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a3", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a1x", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a0", 2), ParseError);

  std::mt19937_64 rng(fixsub::testing::kSeed + 3);
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(rng, 4, 12);
    CHECK(parse_word(to_string(u), 4) == u);
    CHECK(parse_word(to_string(u, Alphabet::surface), 4, Alphabet::surface) == u);
  }
}

TEST_CASE("length-lex order") {
  CHECK(w2("a2") < w2("a1 a1"));
  CHECK(w2("a1") < w2("A1"));
  CHECK(w2("A1") < w2("a2"));
  CHECK(power(w2("a1 a2"), -2) == w2("A2 A1 A2 A1"));
}
