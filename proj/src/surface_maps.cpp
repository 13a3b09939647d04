#include "fixsub/surface_maps.hpp"

#include <stdexcept>

#include "fixsub/surface.hpp"

namespace fixsub {

namespace {

Word letter(std::size_t genus, std::uint32_t gen, int sign = 1) { return Word::generator(2 * genus, gen, sign); }
Word a(std::size_t g, std::uint32_t i, int sign = 1) { return letter(g, a_gen(i), sign); }
Word b(std::size_t g, std::uint32_t i, int sign = 1) { return letter(g, b_gen(i), sign); }

Word product(std::initializer_list<Word> words) {
  Word out = *words.begin();
  for (auto it = words.begin() + 1; it != words.end(); ++it) out = multiply(out, *it);
  return out;
}

void check_handle(std::size_t genus, std::uint32_t i) {
  if (genus < 2) throw std::invalid_argument("surface maps need genus >= 2");
  if (i < 1 || i > genus) throw std::out_of_range("handle " + std::to_string(i) + " outside genus " + std::to_string(genus));
}

}  // namespace

SurfaceMap identity_surface_map(std::size_t genus) {
  return {genus, identity_map(2 * genus), identity_map(2 * genus)};
}

SurfaceMap compose(const SurfaceMap& outer, const SurfaceMap& inner) {
  if (outer.genus != inner.genus) throw std::invalid_argument("surface maps of different genus");
  return {outer.genus, compose_maps(outer.images, inner.images), compose_maps(inner.inverse, outer.inverse)};
}

SurfaceMap inverse(const SurfaceMap& f) { return {f.genus, f.inverse, f.images}; }

SurfaceMap twist_a(std::size_t genus, std::uint32_t i, int sign) {
  check_handle(genus, i);
  SurfaceMap f = identity_surface_map(genus);
  f.images[b_gen(i) - 1] = multiply(b(genus, i), a(genus, i, sign));
  f.inverse[b_gen(i) - 1] = multiply(b(genus, i), a(genus, i, -sign));
  return f;
}

SurfaceMap twist_b(std::size_t genus, std::uint32_t i, int sign) {
  check_handle(genus, i);
  SurfaceMap f = identity_surface_map(genus);
  f.images[a_gen(i) - 1] = multiply(a(genus, i), b(genus, i, -sign));
  f.inverse[a_gen(i) - 1] = multiply(a(genus, i), b(genus, i, sign));
  return f;
}

SurfaceMap twist_c(std::size_t genus, std::uint32_t i) {
  check_handle(genus, i);
  check_handle(genus, i + 1);
  const std::size_t g = genus;
  const Word c = multiply(b(g, i + 1), b(g, i));
  const Word c_inv = invert(c);
  // Raw twist: a_i -> C a_i, a_{i+1} -> b_i b_{i+1} a_{i+1}, b's fixed,
  // other handles conjugated by C. Conjugating back by C^-1 leaves them fixed.
  SurfaceMap f = identity_surface_map(g);
  auto conj = [&](const Word& x) { return product({c_inv, x, c}); };
  f.images[a_gen(i) - 1] = conj(multiply(c, a(g, i)));
  f.images[a_gen(i + 1) - 1] = conj(product({b(g, i), b(g, i + 1), a(g, i + 1)}));
  f.images[b_gen(i) - 1] = conj(b(g, i));
  f.images[b_gen(i + 1) - 1] = conj(b(g, i + 1));
  // Inverse: x -> C raw^-1(x) C^-1, with raw^-1 fixing b's and sending
  // a_i -> B_i B_{i+1} a_i, a_{i+1} -> B_{i+1} B_i a_{i+1}.
  auto unconj = [&](const Word& x) { return product({c, x, c_inv}); };
  f.inverse[a_gen(i) - 1] = unconj(product({b(g, i, -1), b(g, i + 1, -1), a(g, i)}));
  f.inverse[a_gen(i + 1) - 1] = unconj(product({b(g, i + 1, -1), b(g, i, -1), a(g, i + 1)}));
  f.inverse[b_gen(i) - 1] = unconj(b(g, i));
  f.inverse[b_gen(i + 1) - 1] = unconj(b(g, i + 1));
  return f;
}

namespace {

// T_{a_h}^+ ... T_{a_g}^+ after the c-chain after T_{b_h}^-, with an
// extra T_{b_g}^- before the a-twists when `close` is set.
SurfaceMap chain_from(std::size_t genus, std::uint32_t first, bool close) {
  SurfaceMap f = twist_b(genus, first, -1);
  for (std::uint32_t i = first; i < genus; ++i) f = compose(twist_c(genus, i), f);
  if (close) f = compose(twist_b(genus, static_cast<std::uint32_t>(genus), -1), f);
  for (std::uint32_t i = first; i <= genus; ++i) f = compose(twist_a(genus, i, 1), f);
  return f;
}

}  // namespace

SurfaceMap closed_pseudo_anosov(std::size_t genus) { return chain_from(genus, 1, true); }

SurfaceMap phi1(std::size_t genus) { return chain_from(genus, 2, false); }

SurfaceMap psi_map(std::size_t genus) { return twist_a(genus, static_cast<std::uint32_t>(genus), 1); }

bool is_surface_automorphism(const SurfaceMap& f) {
  const std::size_t g = f.genus, n = 2 * g;
  if (f.images.size() != n || f.inverse.size() != n) return false;
  const Word r = relator(g);
  if (!is_trivial(apply_map(f.images, r), g) || !is_trivial(apply_map(f.inverse, r), g)) return false;
  for (std::uint32_t i = 1; i <= n; ++i) {
    Word x = Word::generator(n, i);
    if (!surface_equal(apply_map(f.images, f.inverse[i - 1]), x, g)) return false;
    if (!surface_equal(apply_map(f.inverse, f.images[i - 1]), x, g)) return false;
  }
  return true;
}

}  // namespace fixsub
