#include "fixsub/surface.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fixsub {

namespace {

void check_genus(std::size_t genus) {
  if (genus < 2) throw std::invalid_argument("surface genus must be at least 2, got " + std::to_string(genus));
}

// Consecutive letter pairs of the cyclic relator and its inverse are all
// distinct, so a pair pins down the rotation it came from.
struct RelatorTable {
  std::size_t genus = 0;
  std::array<std::vector<Letter>, 2> cyclic;  // relator, inverse relator
  std::map<std::pair<std::int32_t, std::int32_t>, std::pair<int, std::size_t>> by_pair;
};

const RelatorTable& table_for(std::size_t genus) {
  static std::mutex lock;
  static std::map<std::size_t, RelatorTable> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(genus);
  if (it != cache.end()) return it->second;
  RelatorTable t;
  t.genus = genus;
  Word r = relator(genus);
  t.cyclic[0].assign(r.letters().begin(), r.letters().end());
  Word ri = invert(r);
  t.cyclic[1].assign(ri.letters().begin(), ri.letters().end());
  for (int which = 0; which < 2; ++which) {
    const auto& c = t.cyclic[which];
    for (std::size_t p = 0; p < c.size(); ++p) {
      auto key = std::make_pair(c[p].code(), c[(p + 1) % c.size()].code());
      if (!t.by_pair.emplace(key, std::make_pair(which, p)).second)
        throw std::logic_error("relator pair table is not injective");
    }
  }
  return cache.emplace(genus, std::move(t)).first->second;
}

void cyclically_reduce(std::vector<Letter>& c) {
  std::size_t lo = 0, hi = c.size();
  while (hi - lo >= 2 && c[lo] == c[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  c = std::vector<Letter>(c.begin() + lo, c.begin() + hi);
}

// One Dehn replacement on the cyclic word; false if none applies.
bool dehn_step(std::vector<Letter>& c, const RelatorTable& t) {
  const std::size_t n = c.size();
  const std::size_t len = 4 * t.genus;
  if (n < 2) return false;
  for (std::size_t i = 0; i < n; ++i) {
    auto hit = t.by_pair.find({c[i].code(), c[(i + 1) % n].code()});
    if (hit == t.by_pair.end()) continue;
    const auto& r = t.cyclic[hit->second.first];
    const std::size_t p = hit->second.second;
    std::size_t l = 2;
    while (l < n && l < len && c[(i + l) % n] == r[(p + l) % len]) ++l;
    if (2 * l <= len) continue;
    std::vector<Letter> next;
    next.reserve(n - l + len - l);
    for (std::size_t j = l; j < n; ++j) next.push_back(c[(i + j) % n]);
    // matched piece = inverse of the complement r[p+l .. p+len-1]
    for (std::size_t j = len; j > l; --j) next.push_back(r[(p + j - 1) % len].inverse());
    Word w = reduce_unchecked(0, std::move(next));
    c.assign(w.letters().begin(), w.letters().end());
    cyclically_reduce(c);
    if (c.size() >= n) throw std::logic_error("Dehn replacement failed to shorten the word");
    return true;
  }
  return false;
}

}  // namespace

SurfaceWord::SurfaceWord(std::size_t genus, Word word) : genus_(genus), word_(std::move(word)) {
  check_genus(genus);
  if (word_.rank() != 2 * genus)
    throw std::invalid_argument("surface word has rank " + std::to_string(word_.rank()) + ", expected " +
                                std::to_string(2 * genus));
}

Word relator(std::size_t genus) {
  check_genus(genus);
  const std::size_t rank = 2 * genus;
  std::vector<Letter> letters;
  for (std::uint32_t i = 1; i <= genus; ++i) {
    letters.emplace_back(a_gen(i), 1);
    letters.emplace_back(b_gen(i), 1);
    letters.emplace_back(a_gen(i), -1);
    letters.emplace_back(b_gen(i), -1);
  }
  return reduce(rank, letters);
}

bool is_trivial(const SurfaceWord& w, std::vector<std::size_t>* lengths) {
  // A nonzero exponent vector already certifies nontriviality.
  if (!is_zero(abelianize(w.word()))) return false;
  const RelatorTable& t = table_for(w.genus());
  std::vector<Letter> c(w.word().letters().begin(), w.word().letters().end());
  cyclically_reduce(c);
  if (lengths) lengths->push_back(c.size());
  while (!c.empty() && dehn_step(c, t))
    if (lengths) lengths->push_back(c.size());
  return c.empty();
}

bool is_trivial(const Word& w, std::size_t genus) { return is_trivial(SurfaceWord(genus, w)); }

bool surface_equal(const SurfaceWord& u, const SurfaceWord& v) {
  if (u.genus() != v.genus()) throw std::invalid_argument("surface_equal: genus mismatch");
  if (u.word() == v.word()) return true;
  return is_trivial(SurfaceWord(u.genus(), multiply(u.word(), invert(v.word()))));
}

bool surface_equal(const Word& u, const Word& v, std::size_t genus) {
  return surface_equal(SurfaceWord(genus, u), SurfaceWord(genus, v));
}

IsoType finite_index_subgroup_type(std::size_t genus, std::size_t index) {
  check_genus(genus);
  if (index < 1) throw std::invalid_argument("subgroup index must be positive");
  return IsoType::surface(index * (genus - 1) + 1);
}

IsoType infinite_index_normal_type(bool container_rank_at_least_2, bool kernel_nontrivial) {
  if (kernel_nontrivial && !container_rank_at_least_2)
    throw std::logic_error("a nontrivial infinite-index normal subgroup needs a container of rank >= 2");
  return kernel_nontrivial ? IsoType::free_infinite() : IsoType::trivial();
}

SurfaceWord parse_surface_word(std::string_view text, std::size_t genus) {
  check_genus(genus);
  return SurfaceWord(genus, parse_word(text, 2 * genus, Alphabet::surface));
}

std::string to_string(const SurfaceWord& w) { return to_string(w.word(), Alphabet::surface); }

}  // namespace fixsub
