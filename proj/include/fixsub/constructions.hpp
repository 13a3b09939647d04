#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fixsub/fatf.hpp"
#include "fixsub/intlat.hpp"
#include "fixsub/iso_type.hpp"

namespace fixsub {

struct Recipe {
  std::string id;
  std::string params;  // "g=2,t=5"
  StdEndo endo;
  std::optional<StdEndo> inverse;
  IsoType expected;
  std::vector<std::string> notes;
};

enum class AlphaChoice { identity, phi1 };

// F_n: a_i fixed for i <= t, inverted otherwise.
Recipe prop27_aut(std::size_t n, std::size_t t);
// F_g x Z^2 with L = [[t, t-1], [1, 1]] and [[1, t-1], [0, 1]].
Recipe phi_t(std::size_t g, std::size_t t);
Recipe psi_t(std::size_t g, std::size_t t);
// F_g x Z, (u, v) -> (u, ab_1(u) + (m+1) v). Not an automorphism.
Recipe endo_m(std::size_t g, std::size_t m);
// F_g x Z, a_1 -> a_1 c.
Recipe aleph_aut(std::size_t g);
// Recipe for a type on the finite F_g x Z list.
Recipe theorem33_witness(std::size_t g, const IsoType& target);

IntMatrix a_ell_matrix(std::size_t ell, std::size_t m);
// Sigma_g x Z^k, 0 <= s <= k-1.
Recipe surface_endo(std::size_t g, std::size_t k, std::size_t m, std::size_t s, AlphaChoice alpha);
// Sigma_g: b_g -> b_g a_g.
Recipe surface_psi(std::size_t g);

// k >= 2; nullopt asks for an infinitely generated Fix.
Recipe rank_witness(const Ambient& a, std::optional<std::size_t> n);

// A recipe with Fix of the given type, built from the witness classify
// names; nullopt when the type is not aut-fixed or has no catalog entry.
std::optional<Recipe> realize(const Ambient& a, const IsoType& target);

struct RecipeParams {
  std::optional<Ambient> ambient;
  std::size_t g = 2;
  std::size_t k = 2;
  std::size_t t = 2;
  std::size_t m = 1;
  std::size_t s = 0;
  std::optional<std::size_t> n;  // rank_witness; absent for aleph_0
  AlphaChoice alpha = AlphaChoice::identity;
  std::optional<IsoType> target;
};

// Dispatch on the recipe identifier; throws invalid_argument on unknown
// identifiers or parameters out of range.
Recipe build_recipe(const std::string& id, const RecipeParams& p);
const std::vector<std::string>& recipe_ids();

// Each catalog entry at its smallest parameters.
std::vector<Recipe> smallest_catalog();

}  // namespace fixsub
