#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fixsub/fatf.hpp"
#include "fixsub/iso_type.hpp"

namespace fixsub {

// Which classification decided a query.
enum class TheoremTag {
  not_a_subgroup,
  free_group,          // F_n: F_t, t <= n
  surface_group,       // Sigma_g: the whole group or F_t, t < 2g
  free_times_z,        // the finite list for F_g x Z
  free_times_zk,       // F_g x Z^k, k >= 2
  surface_times_z,     // the finite list for Sigma_g x Z
  surface_times_zk,    // Sigma_g x Z^k, k >= 2
};
std::string to_string(TheoremTag t);

// A type read as F_t x Z^s, S_r x Z^s or Finf x Z^s without folding
// F_1 into the abelian part.
struct RawForm {
  IsoBase base = IsoBase::free;
  std::size_t param = 0;
  std::size_t s = 0;
};

struct AutFixedVerdict {
  bool answer = false;
  // Catalog recipe realizing the type, when there is one, and the reading
  // of the type it realizes.
  std::optional<std::string> witness;
  std::optional<RawForm> witness_form;
  TheoremTag tag = TheoremTag::not_a_subgroup;
};

std::size_t schreier_rank(std::size_t index, std::size_t rank);

bool subgroup_realizable(const Ambient& a, const IsoType& t);
AutFixedVerdict is_aut_fixed(const Ambient& a, const IsoType& t);

// The forms listed by the classification for k <= 1, before any
// deduplication. Throws invalid_argument for k >= 2.
std::vector<IsoType> raw_aut_fixed_list(const Ambient& a);

// Sorted, deduplicated. For k <= 1 the whole finite list (the bound is
// ignored); otherwise every type of finite rank <= rank_bound plus the
// infinitely generated ones.
std::vector<IsoType> enumerate_aut_fixed(const Ambient& a, std::size_t rank_bound);

// nullopt when infinite.
std::optional<std::size_t> count_aut_fixed(const Ambient& a);

// Every canonical subgroup type of the ambient with finite rank <= bound,
// plus the infinitely generated ones. Used to cross-check predicates.
std::vector<IsoType> candidate_types(const Ambient& a, std::size_t rank_bound);

}  // namespace fixsub
