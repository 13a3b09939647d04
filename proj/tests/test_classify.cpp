#include "doctest.h"

#include <set>

#include "fixsub/classify.hpp"

using namespace fixsub;

namespace {

bool fixed(const Ambient& a, std::string_view t) { return is_aut_fixed(a, parse_iso(t)).answer; }

}  // namespace

TEST_CASE("schreier rank") {
  CHECK(schreier_rank(1, 5) == 5);
  CHECK(schreier_rank(2, 2) == 3);
  CHECK(schreier_rank(3, 4) == 10);
  CHECK_THROWS_AS(schreier_rank(0, 3), std::invalid_argument);
}

TEST_CASE("realizability") {
  CHECK(subgroup_realizable(Ambient::free(2, 2), parse_iso("F_100 x Z^2")));
  CHECK(subgroup_realizable(Ambient::surface(2, 2), parse_iso("S_4 x Z")));
  CHECK_FALSE(subgroup_realizable(Ambient::surface(3, 2), parse_iso("S_4 x Z")));
  CHECK_FALSE(subgroup_realizable(Ambient::free(3, 2), parse_iso("S_3")));
  CHECK(subgroup_realizable(Ambient::free(3, 2), parse_iso("Z^3")));
  CHECK_FALSE(subgroup_realizable(Ambient::free(3, 2), parse_iso("Z^4")));
  CHECK_FALSE(subgroup_realizable(Ambient::free(3, 2), parse_iso("F_2 x Z^3")));
  auto v = is_aut_fixed(Ambient::free(3, 2), parse_iso("S_3"));
  CHECK_FALSE(v.answer);
  CHECK(v.tag == TheoremTag::not_a_subgroup);
}

TEST_CASE("free ambients") {
  Ambient f32 = Ambient::free(3, 2);
  CHECK(fixed(f32, "F_100 x Z"));
  CHECK_FALSE(fixed(f32, "F_4 x Z^2"));
  CHECK(fixed(f32, "F_3 x Z^2"));
  CHECK_FALSE(fixed(f32, "Finf"));
  CHECK(fixed(f32, "Finf x Z^2"));
  CHECK(fixed(f32, "Z^3"));
  CHECK(is_aut_fixed(f32, parse_iso("F_100 x Z")).witness == "psi_t");
  CHECK(is_aut_fixed(f32, parse_iso("F_100")).witness == "phi_t");
  CHECK(is_aut_fixed(f32, parse_iso("F_2 x Z")).witness == "prop27");
  CHECK(is_aut_fixed(f32, parse_iso("F_2 x Z")).tag == TheoremTag::free_times_zk);

  Ambient f21 = Ambient::free(2, 1);
  CHECK(fixed(f21, "F_3"));
  CHECK(is_aut_fixed(f21, parse_iso("F_3")).witness == "thm33");
  CHECK_FALSE(fixed(f21, "F_4"));
  CHECK_FALSE(fixed(f21, "F_3 x Z"));
  CHECK(fixed(f21, "Finf x Z"));
  CHECK_FALSE(fixed(f21, "Finf"));

  Ambient f3 = Ambient::free(3, 0);
  CHECK(fixed(f3, "F_3"));
  CHECK_FALSE(fixed(f3, "F_4"));
  CHECK(fixed(f3, "Z"));
}

TEST_CASE("surface ambients") {
  Ambient s22 = Ambient::surface(2, 2);
  CHECK(fixed(s22, "S_5 x Z"));
  CHECK_FALSE(fixed(s22, "S_3 x Z^2"));
  CHECK(fixed(s22, "S_2 x Z^2"));
  CHECK_FALSE(fixed(s22, "F_4 x Z^2"));
  CHECK(fixed(s22, "F_3 x Z^2"));
  CHECK(fixed(s22, "F_4 x Z"));
  CHECK_FALSE(fixed(s22, "Finf"));
  CHECK(is_aut_fixed(s22, parse_iso("S_3 x Z")).witness == "surface_endo");
  CHECK(is_aut_fixed(s22, parse_iso("F_3 x Z^2")).witness == "surface_psi");

  Ambient s2 = Ambient::surface(2, 0);
  CHECK(fixed(s2, "S_2"));
  CHECK(fixed(s2, "F_3"));
  CHECK_FALSE(fixed(s2, "F_4"));
  CHECK_FALSE(fixed(s2, "S_3"));
  CHECK(is_aut_fixed(s2, parse_iso("F_3")).witness == "surface_psi");
  CHECK_FALSE(is_aut_fixed(s2, parse_iso("F_2")).witness);

  Ambient s21 = Ambient::surface(2, 1);
  CHECK(fixed(s21, "S_3"));
  CHECK(fixed(s21, "F_5"));
  CHECK_FALSE(fixed(s21, "F_7"));
  CHECK_FALSE(fixed(s21, "S_3 x Z"));
}

TEST_CASE("negative families") {
  for (std::size_t g = 2; g <= 3; ++g)
    for (std::size_t k = 2; k <= 3; ++k) {
      CHECK_FALSE(is_aut_fixed(Ambient::free(g, k), IsoType::free(g + 1, k)).answer);
      CHECK_FALSE(is_aut_fixed(Ambient::free(g, k), IsoType::free_infinite()).answer);
      CHECK_FALSE(is_aut_fixed(Ambient::surface(g, k), IsoType::free(2 * g, k)).answer);
      CHECK_FALSE(is_aut_fixed(Ambient::surface(g, k), IsoType::surface(g + 1, k)).answer);
      for (std::size_t m = 2; m <= 6; ++m)
        CHECK_FALSE(is_aut_fixed(Ambient::surface(g, k), IsoType::surface(m * (g - 1) + 1, k)).answer);
    }
}

TEST_CASE("counts match the deduplicated lists") {
  for (std::size_t g = 2; g <= 20; ++g) {
    CAPTURE(g);
    auto f = enumerate_aut_fixed(Ambient::free(g, 1), 0);
    CHECK(f.size() == 2 * g + 2 + g / 2);
    CHECK(count_aut_fixed(Ambient::free(g, 1)) == f.size());
    auto s = enumerate_aut_fixed(Ambient::surface(g, 1), 0);
    CHECK(s.size() == 5 * g + 2);
    CHECK(count_aut_fixed(Ambient::surface(g, 1)) == s.size());
    CHECK(count_aut_fixed(Ambient::free(g, 0)) == enumerate_aut_fixed(Ambient::free(g, 0), 0).size());
    CHECK(count_aut_fixed(Ambient::surface(g, 0)) == enumerate_aut_fixed(Ambient::surface(g, 0), 0).size());
  }
  CHECK_FALSE(count_aut_fixed(Ambient::surface(2, 2)));
  std::set<std::string> f2;
  for (const auto& t : enumerate_aut_fixed(Ambient::free(2, 1), 0)) f2.insert(to_string(t));
  CHECK(f2 == std::set<std::string>{"1", "Z", "Z^2", "F_2", "F_3", "F_2 x Z", "Finf x Z"});
}

TEST_CASE("predicates agree with the lists for k <= 1") {
  for (std::size_t g = 2; g <= 6; ++g)
    for (std::size_t k = 0; k <= 1; ++k)
      for (const Ambient& a : {Ambient::free(g, k), Ambient::surface(g, k)}) {
        CAPTURE(to_string(a));
        auto list = enumerate_aut_fixed(a, 0);
        std::set<IsoType> listed(list.begin(), list.end());
        for (const auto& t : candidate_types(a, 8 * g + 4)) {
          CAPTURE(to_string(t));
          auto v = is_aut_fixed(a, t);
          CHECK(v.answer == (listed.count(t) == 1));
          if (v.answer) CHECK(subgroup_realizable(a, t));
        }
      }
}

TEST_CASE("every rank occurs when k >= 2") {
  for (const Ambient& a : {Ambient::free(2, 2), Ambient::surface(2, 2)}) {
    auto list = enumerate_aut_fixed(a, 20);
    std::set<std::size_t> ranks;
    bool aleph = false;
    for (const auto& t : list) {
      auto r = rank_of(t);
      if (r.infinite)
        aleph = true;
      else
        ranks.insert(r.value);
    }
    for (std::size_t n = 0; n <= 20; ++n) CHECK(ranks.count(n) == 1);
    CHECK(aleph);
  }
  auto small = enumerate_aut_fixed(Ambient::free(2, 2), 3);
  for (const auto& t : small)
    if (!rank_of(t).infinite) CHECK(rank_of(t).value <= 3);
}
