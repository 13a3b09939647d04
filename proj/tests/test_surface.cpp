#include "doctest.h"
#include "random_words.hpp"

#include "fixsub/surface.hpp"

using namespace fixsub;
using fixsub::testing::random_word;

namespace {

Word sw(std::string_view s, std::size_t g = 2) { return parse_word(s, 2 * g, Alphabet::surface); }

// Cyclic rotation of the relator or its inverse.
Word relator_rotation(std::size_t g, std::size_t shift, bool inverse) {
  Word r = relator(g);
  if (inverse) r = invert(r);
  std::vector<Letter> rot;
  for (std::size_t i = 0; i < r.size(); ++i) rot.push_back(r[(i + shift) % r.size()]);
  return reduce(2 * g, rot);
}

Word splice(const Word& w, std::size_t pos, const Word& piece) {
  std::vector<Letter> out(w.letters().begin(), w.letters().begin() + static_cast<long>(pos));
  out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  out.insert(out.end(), w.letters().begin() + static_cast<long>(pos), w.letters().end());
  return reduce(w.rank(), out);
}

}  // namespace

TEST_CASE("relator") {
  CHECK(to_string(relator(2), Alphabet::surface) == "a1 b1 A1 B1 a2 b2 A2 B2");
  for (std::size_t g = 2; g <= 6; ++g) {
    CHECK(relator(g).size() == 4 * g);
    CHECK(is_zero(abelianize(relator(g))));
  }
  CHECK_THROWS(relator(1));
}

TEST_CASE("Dehn triviality basics") {
  CHECK(is_trivial(relator(2), 2));
  CHECK(is_trivial(invert(relator(3)), 3));
  CHECK_FALSE(is_trivial(sw("a1"), 2));
  CHECK(is_trivial(Word(4), 2));
  CHECK_FALSE(is_trivial(commutator(sw("a1"), sw("b1")), 2));
  CHECK_FALSE(is_trivial(commutator(sw("a1"), sw("a2")), 2));
  CHECK_FALSE(is_trivial(commutator(sw("a1 b1"), sw("a2")), 2));
  // [a1,b1] = ([a2,b2])^-1 in genus 2
  CHECK(surface_equal(commutator(sw("a1"), sw("b1")), invert(commutator(sw("a2"), sw("b2"))), 2));
  CHECK(surface_equal(multiply(relator(2), sw("a1")), sw("a1"), 2));
  CHECK_FALSE(surface_equal(sw("a1"), sw("b1"), 2));
}

TEST_CASE("relator-conjugate products are trivial and Dehn shortens strictly") {
  std::mt19937_64 rng(fixsub::testing::kSeed);
  std::uniform_int_distribution<int> genus(2, 4), factors(1, 3), coin(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t g = static_cast<std::size_t>(genus(rng));
    Word w(2 * g);
    int n = factors(rng);
    for (int i = 0; i < n; ++i) {
      Word c = random_word(rng, 2 * g, 6);
      Word r = coin(rng) ? relator(g) : invert(relator(g));
      w = multiply(w, multiply(multiply(c, r), invert(c)));
    }
    std::vector<std::size_t> lengths;
    CHECK(is_trivial(SurfaceWord(g, w), &lengths));
    for (std::size_t i = 1; i < lengths.size(); ++i) CHECK(lengths[i] < lengths[i - 1]);
  }
}

TEST_CASE("words with nonzero exponent vector are nontrivial") {
  std::mt19937_64 rng(fixsub::testing::kSeed + 1);
  int checked = 0;
  while (checked < 100) {
    Word w = random_word(rng, 4, 14);
    if (is_zero(abelianize(w))) continue;
    ++checked;
    CHECK_FALSE(is_trivial(w, 2));
  }
}

TEST_CASE("exponent vectors and triviality survive relator insertion") {
  std::mt19937_64 rng(fixsub::testing::kSeed + 2);
  std::uniform_int_distribution<int> genus(2, 3), coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t g = static_cast<std::size_t>(genus(rng));
    Word w = random_word(rng, 2 * g, 10);
    std::uniform_int_distribution<std::size_t> pos(0, w.size()), shift(0, 4 * g - 1);
    Word spliced = splice(w, pos(rng), relator_rotation(g, shift(rng), coin(rng)));
    CHECK(abelianize(spliced) == abelianize(w));
    CHECK(surface_equal(spliced, w, g));
  }
}

TEST_CASE("surface_equal is reflexive and symmetric on samples") {
  std::mt19937_64 rng(fixsub::testing::kSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_word(rng, 4, 8);
    Word v = splice(u, u.size() / 2, relator_rotation(2, trial % 8, trial % 3 == 0));
    Word x = random_word(rng, 4, 8);
    CHECK(surface_equal(u, u, 2));
    CHECK(surface_equal(u, v, 2) == surface_equal(v, u, 2));
    CHECK(surface_equal(u, x, 2) == surface_equal(x, u, 2));
    // u ~ v and v ~ spliced(v) implies u ~ spliced(v)
    Word v2 = splice(v, 0, relator_rotation(2, 3, false));
    CHECK(surface_equal(u, v2, 2));
  }
}

TEST_CASE("subgroup type formulas") {
  CHECK(finite_index_subgroup_type(2, 1) == IsoType::surface(2));
  CHECK(finite_index_subgroup_type(2, 3) == IsoType::surface(4));
  CHECK(finite_index_subgroup_type(3, 2) == IsoType::surface(5));
  CHECK_THROWS(finite_index_subgroup_type(1, 2));
  CHECK_THROWS(finite_index_subgroup_type(2, 0));
  CHECK(infinite_index_normal_type(true, true) == IsoType::free_infinite());
  CHECK(infinite_index_normal_type(true, false) == IsoType::trivial());
  CHECK(infinite_index_normal_type(false, false) == IsoType::trivial());
  CHECK_THROWS(infinite_index_normal_type(false, true));
}

TEST_CASE("surface word text") {
  auto w = parse_surface_word("b2 A1", 2);
  CHECK(to_string(w) == "b2 A1");
  CHECK_THROWS(parse_surface_word("b3", 2));
  CHECK_THROWS(SurfaceWord(2, Word(3)));
}
