#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fixsub/iso_type.hpp"
#include "fixsub/words.hpp"

namespace fixsub {

// Element of pi_1 of the closed genus-g surface, as a freely reduced word
// over a_1, b_1, ..., a_g, b_g (generators 2i-1 and 2i). Two SurfaceWords
// are equal as group elements iff surface_equal says so.
class SurfaceWord {
 public:
  SurfaceWord(std::size_t genus, Word word);

  std::size_t genus() const { return genus_; }
  const Word& word() const { return word_; }

 private:
  std::size_t genus_;
  Word word_;
};

inline std::uint32_t a_gen(std::uint32_t i) { return 2 * i - 1; }
inline std::uint32_t b_gen(std::uint32_t i) { return 2 * i; }

Word relator(std::size_t genus);

// Dehn's algorithm on the cyclic word. `lengths` (if given) receives the
// cyclic length after each replacement.
bool is_trivial(const SurfaceWord& w, std::vector<std::size_t>* lengths = nullptr);
bool is_trivial(const Word& w, std::size_t genus);
bool surface_equal(const SurfaceWord& u, const SurfaceWord& v);
bool surface_equal(const Word& u, const Word& v, std::size_t genus);

IsoType finite_index_subgroup_type(std::size_t genus, std::size_t index);
IsoType infinite_index_normal_type(bool container_rank_at_least_2, bool kernel_nontrivial);

SurfaceWord parse_surface_word(std::string_view text, std::size_t genus);
std::string to_string(const SurfaceWord& w);

}  // namespace fixsub
