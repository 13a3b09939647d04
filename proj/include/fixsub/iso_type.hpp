#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace fixsub {

enum class IsoBase { trivial, free, free_infinite, surface };

// {1 | F_t (t >= 2) | F_inf | S_r (r >= 2)} x Z^s, always canonical:
// F_0, F_1, S_0 and S_1 are folded into the abelian part on construction.
class IsoType {
 public:
  IsoType() = default;

  static IsoType normalize(IsoBase base, std::size_t param, std::size_t s);
  static IsoType trivial(std::size_t s = 0) { return normalize(IsoBase::trivial, 0, s); }
  static IsoType free(std::size_t t, std::size_t s = 0) { return normalize(IsoBase::free, t, s); }
  static IsoType free_infinite(std::size_t s = 0) { return normalize(IsoBase::free_infinite, 0, s); }
  static IsoType surface(std::size_t r, std::size_t s = 0) { return normalize(IsoBase::surface, r, s); }

  IsoBase base() const { return base_; }
  // Free rank t or genus r; 0 for the other bases.
  std::size_t param() const { return param_; }
  std::size_t abelian_rank() const { return s_; }

  IsoType times_z(std::size_t extra) const { return normalize(base_, param_, s_ + extra); }

  friend bool operator==(const IsoType&, const IsoType&) = default;
  friend auto operator<=>(const IsoType&, const IsoType&) = default;

 private:
  IsoBase base_ = IsoBase::trivial;
  std::size_t param_ = 0;
  std::size_t s_ = 0;
};

inline bool iso_equal(const IsoType& a, const IsoType& b) { return a == b; }

// Rank (minimal number of generators): finite or aleph_0.
struct Rank {
  bool infinite = false;
  std::size_t value = 0;
  friend bool operator==(const Rank&, const Rank&) = default;
};

Rank rank_of(const IsoType& a);
std::string to_string(const Rank& r);

// "1", "Z", "Z^s", "F_t", "F_t x Z^s", "Finf x Z^s", "S_r x Z^s".
std::string to_string(const IsoType& a);
// Case-insensitive; accepts "Z^1", "x Z^0" and non-canonical bases like F_1.
IsoType parse_iso(std::string_view text);

}  // namespace fixsub
