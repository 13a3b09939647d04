#pragma once

#include <cstddef>
#include <vector>

#include "fixsub/words.hpp"

namespace fixsub {

// Automorphism of pi_1(Sigma_g) given on generators, with its inverse.
struct SurfaceMap {
  std::size_t genus = 2;
  std::vector<Word> images;
  std::vector<Word> inverse;
};

SurfaceMap identity_surface_map(std::size_t genus);
// outer after inner.
SurfaceMap compose(const SurfaceMap& outer, const SurfaceMap& inner);
SurfaceMap inverse(const SurfaceMap& f);

// Dehn twists about a_i (b_i -> b_i a_i for sign +1) and b_i
// (a_i -> a_i b_i for sign -1).
SurfaceMap twist_a(std::size_t genus, std::uint32_t i, int sign);
SurfaceMap twist_b(std::size_t genus, std::uint32_t i, int sign);
// Negative twist about the curve b_i b_{i+1}, composed with an inner
// automorphism so that handles other than i, i+1 are fixed.
SurfaceMap twist_c(std::size_t genus, std::uint32_t i);

// Product of twists about a filling chain; its fixed subgroup is trivial.
SurfaceMap closed_pseudo_anosov(std::size_t genus);
// The same chain on handles 2..g only, so Fix is <a_1, b_1>.
SurfaceMap phi1(std::size_t genus);
// b_g -> b_g a_g, everything else fixed.
SurfaceMap psi_map(std::size_t genus);

// Relator preserved and both composites trivial on every generator.
bool is_surface_automorphism(const SurfaceMap& f);

}  // namespace fixsub
