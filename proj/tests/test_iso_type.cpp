#include "doctest.h"

#include "fixsub/errors.hpp"
#include "fixsub/iso_type.hpp"

using namespace fixsub;

TEST_CASE("normalization folds F_0, F_1 into the abelian part") {
  CHECK(IsoType::normalize(IsoBase::free, 1, 1) == IsoType::trivial(2));
  CHECK(IsoType::normalize(IsoBase::free, 0, 3) == IsoType::trivial(3));
  CHECK(IsoType::normalize(IsoBase::free, 3, 2).base() == IsoBase::free);
  CHECK(IsoType::normalize(IsoBase::surface, 2, 0) == IsoType::surface(2));
  CHECK(IsoType::normalize(IsoBase::surface, 1, 0) == IsoType::trivial(2));
  for (auto a : {IsoType::free(1, 4), IsoType::surface(3, 1), IsoType::free_infinite(2)})
    CHECK(IsoType::normalize(a.base(), a.param(), a.abelian_rank()) == a);
}

TEST_CASE("equality") {
  CHECK(iso_equal(IsoType::free(2, 1), IsoType::free(2, 1)));
  CHECK_FALSE(iso_equal(IsoType::surface(2), IsoType::free(4)));
  CHECK_FALSE(iso_equal(IsoType::free_infinite(1), IsoType::free_infinite(2)));
  CHECK_FALSE(iso_equal(IsoType::free(3), IsoType::free(3, 1)));
}

TEST_CASE("rank_of") {
  CHECK(rank_of(IsoType::surface(3, 2)) == Rank{false, 8});
  CHECK(rank_of(IsoType::free(5, 1)) == Rank{false, 6});
  CHECK(rank_of(IsoType::trivial()) == Rank{false, 0});
  CHECK(rank_of(IsoType::free_infinite(1)).infinite);
}

TEST_CASE("canonical strings") {
  CHECK(to_string(IsoType::trivial()) == "1");
  CHECK(to_string(IsoType::trivial(1)) == "Z");
  CHECK(to_string(IsoType::trivial(3)) == "Z^3");
  CHECK(to_string(IsoType::free(5)) == "F_5");
  CHECK(to_string(IsoType::free(2, 1)) == "F_2 x Z");
  CHECK(to_string(IsoType::free(2, 2)) == "F_2 x Z^2");
  CHECK(to_string(IsoType::free_infinite(1)) == "Finf x Z");
  CHECK(to_string(IsoType::free_infinite()) == "Finf");
  CHECK(to_string(IsoType::surface(3, 1)) == "S_3 x Z");
}

TEST_CASE("parsing") {
  CHECK(parse_iso("1") == IsoType::trivial());
  CHECK(parse_iso("Z") == IsoType::trivial(1));
  CHECK(parse_iso("z^1") == IsoType::trivial(1));
  CHECK(parse_iso("Z^4") == IsoType::trivial(4));
  CHECK(parse_iso("F_100 x Z") == IsoType::free(100, 1));
  CHECK(parse_iso("f_4 X z^2") == IsoType::free(4, 2));
  CHECK(parse_iso("F_3 x Z^0") == IsoType::free(3));
  CHECK(parse_iso("Finf") == IsoType::free_infinite());
  CHECK(parse_iso("FINF x Z^2") == IsoType::free_infinite(2));
  CHECK(parse_iso("S_5 x Z") == IsoType::surface(5, 1));
  CHECK(parse_iso("F_1 x Z") == IsoType::trivial(2));
  CHECK_THROWS_AS(parse_iso("G_2"), ParseError);
  CHECK_THROWS_AS(parse_iso("F_2 x"), ParseError);
  CHECK_THROWS_AS(parse_iso("Z x Z"), ParseError);
  for (auto a : {IsoType::trivial(), IsoType::trivial(2), IsoType::free(7, 3), IsoType::free_infinite(1),
                 IsoType::surface(2)})
    CHECK(parse_iso(to_string(a)) == a);
}
