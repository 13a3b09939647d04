#include "fixsub/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixsub {

namespace {

using Raw = RawForm;

// F_0 x Z^s and F_1 x Z^(s-1) both normalize to Z^s.
std::vector<Raw> preimages(const IsoType& t) {
  const std::size_t s = t.abelian_rank();
  switch (t.base()) {
    case IsoBase::trivial: {
      std::vector<Raw> out{{IsoBase::free, 0, s}};
      if (s >= 1) out.push_back({IsoBase::free, 1, s - 1});
      return out;
    }
    case IsoBase::free:
      return {{IsoBase::free, t.param(), s}};
    case IsoBase::free_infinite:
      return {{IsoBase::free_infinite, 0, s}};
    case IsoBase::surface:
      return {{IsoBase::surface, t.param(), s}};
  }
  return {};
}

bool surface_genus_ok(std::size_t g, std::size_t r) { return r >= g && (r - 1) % (g - 1) == 0; }

bool raw_realizable(const Ambient& a, const Raw& x) {
  if (x.s > a.k) return false;
  if (x.base == IsoBase::surface) return a.is_surface() && surface_genus_ok(a.g, x.param);
  return true;
}

bool raw_aut_fixed(const Ambient& a, const Raw& x) {
  if (!raw_realizable(a, x)) return false;
  const std::size_t g = a.g, k = a.k, s = x.s, t = x.param;
  const bool free = x.base == IsoBase::free, surf = x.base == IsoBase::surface, inf = x.base == IsoBase::free_infinite;
  if (!a.is_surface()) {
    if (k == 0) return free && t <= g;
    if (k == 1) return (free && s == 0 && t % 2 == 1 && t <= 2 * g - 1) || (free && t <= g) || (inf && s == 1);
    return (free && (s < k || t <= g)) || (inf && s >= 1);
  }
  if (k == 0) return (surf && t == g) || (free && t < 2 * g);
  if (k == 1)
    return (free && s == 0 && t % 2 == 1 && t <= 4 * g - 3) || (surf && s == 0 && t == 2 * g - 1) || (inf && s == 1) ||
           (surf && t == g) || (free && t < 2 * g);
  return (free && (s < k || t < 2 * g)) || (surf && (s < k || t == g)) || (inf && s >= 1);
}

TheoremTag tag_for(const Ambient& a) {
  if (!a.is_surface()) return a.k == 0 ? TheoremTag::free_group : a.k == 1 ? TheoremTag::free_times_z : TheoremTag::free_times_zk;
  return a.k == 0 ? TheoremTag::surface_group : a.k == 1 ? TheoremTag::surface_times_z : TheoremTag::surface_times_zk;
}

// Catalog entry realizing x, in order of preference.
std::optional<std::string> witness_for(const Ambient& a, const Raw& x) {
  const std::size_t g = a.g, k = a.k, s = x.s, t = x.param;
  const bool free = x.base == IsoBase::free;
  if (x.base == IsoBase::free_infinite) return s >= 1 ? std::optional<std::string>("aleph") : std::nullopt;
  if (!a.is_surface()) {
    if (free && t <= g) return "prop27";
    if (free && k >= 1 && s + 1 <= k && t % 2 == 1 && t <= 2 * g - 1) return "thm33";
    if (free && k >= 2 && s + 2 <= k) return "phi_t";
    if (free && k >= 2 && s >= 1 && s + 1 <= k) return "psi_t";
    return std::nullopt;
  }
  if (x.base == IsoBase::surface) {
    if (t == g) return "identity";
    if (k >= 2 && s + 1 <= k) return "surface_endo";
    if (k >= 1 && s + 1 <= k && t == 2 * g - 1) return "index2";
    return std::nullopt;
  }
  if (t == 2 * g - 1) return "surface_psi";
  if (k >= 2 && t >= 2 && s + 1 <= k) return "surface_endo";
  return std::nullopt;
}

}  // namespace

std::string to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::not_a_subgroup:
      return "not a subgroup";
    case TheoremTag::free_group:
      return "free group";
    case TheoremTag::surface_group:
      return "surface group";
    case TheoremTag::free_times_z:
      return "free x Z list";
    case TheoremTag::free_times_zk:
      return "free x Z^k classification";
    case TheoremTag::surface_times_z:
      return "surface x Z list";
    case TheoremTag::surface_times_zk:
      return "surface x Z^k classification";
  }
  return "?";
}

std::size_t schreier_rank(std::size_t index, std::size_t rank) {
  if (index < 1 || rank < 2) throw std::invalid_argument("schreier_rank needs index >= 1 and rank >= 2");
  return index * (rank - 1) + 1;
}

bool subgroup_realizable(const Ambient& a, const IsoType& t) {
  a.validate();
  auto pre = preimages(t);
  return std::any_of(pre.begin(), pre.end(), [&](const Raw& x) { return raw_realizable(a, x); });
}

AutFixedVerdict is_aut_fixed(const Ambient& a, const IsoType& t) {
  AutFixedVerdict v;
  if (!subgroup_realizable(a, t)) return v;
  v.tag = tag_for(a);
  for (const Raw& x : preimages(t)) {
    if (!raw_aut_fixed(a, x)) continue;
    v.answer = true;
    if (v.witness) continue;
    v.witness = witness_for(a, x);
    if (v.witness) v.witness_form = x;
  }
  return v;
}

std::vector<IsoType> raw_aut_fixed_list(const Ambient& a) {
  a.validate();
  const std::size_t g = a.g;
  std::vector<IsoType> out;
  if (a.k >= 2) throw std::invalid_argument("the list is infinite for k >= 2");
  if (!a.is_surface()) {
    if (a.k == 0) {
      for (std::size_t t = 0; t <= g; ++t) out.push_back(IsoType::free(t));
      return out;
    }
    for (std::size_t t = 1; t <= g; ++t) out.push_back(IsoType::free(2 * t - 1));
    for (std::size_t t = 0; t <= g; ++t)
      for (std::size_t s = 0; s <= 1; ++s) out.push_back(IsoType::free(t, s));
    out.push_back(IsoType::free_infinite(1));
    return out;
  }
  if (a.k == 0) {
    out.push_back(IsoType::surface(g));
    for (std::size_t t = 0; t < 2 * g; ++t) out.push_back(IsoType::free(t));
    return out;
  }
  for (std::size_t t = 1; t < 2 * g; ++t) out.push_back(IsoType::free(2 * t - 1));
  out.push_back(IsoType::surface(2 * g - 1));
  out.push_back(IsoType::free_infinite(1));
  for (std::size_t s = 0; s <= 1; ++s) out.push_back(IsoType::surface(g, s));
  for (std::size_t t = 0; t < 2 * g; ++t)
    for (std::size_t s = 0; s <= 1; ++s) out.push_back(IsoType::free(t, s));
  return out;
}

std::vector<IsoType> candidate_types(const Ambient& a, std::size_t rank_bound) {
  a.validate();
  std::vector<IsoType> out;
  for (std::size_t s = 0; s <= a.k; ++s) {
    out.push_back(IsoType::free_infinite(s));
    for (std::size_t t = 0; t + s <= rank_bound; ++t) out.push_back(IsoType::free(t, s));
    if (a.is_surface())
      for (std::size_t r = a.g; 2 * r + s <= rank_bound; r += a.g - 1) out.push_back(IsoType::surface(r, s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IsoType> enumerate_aut_fixed(const Ambient& a, std::size_t rank_bound) {
  std::vector<IsoType> out;
  if (a.k <= 1) {
    out = raw_aut_fixed_list(a);
  } else {
    for (const auto& t : candidate_types(a, rank_bound))
      if (is_aut_fixed(a, t).answer) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::size_t> count_aut_fixed(const Ambient& a) {
  a.validate();
  const std::size_t g = a.g;
  if (a.k >= 2) return std::nullopt;
  if (!a.is_surface()) return a.k == 0 ? g + 1 : 2 * g + 2 + g / 2;
  return a.k == 0 ? 2 * g + 1 : 5 * g + 2;
}

}  // namespace fixsub
