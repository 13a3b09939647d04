#include "doctest.h"

#include <functional>
#include <random>

#include "fixsub/intlat.hpp"

using namespace fixsub;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> e(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = e(rng);
  return m;
}

void check_smith(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  REQUIRE(s.U * s.D * s.V == m);
  CHECK(s.U * s.U_inv == IntMatrix::identity(m.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(m.cols()));
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
  IntVector d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    if (d[i] == 0 && i + 1 < d.size()) CHECK(d[i + 1] == 0);
  }
  if (m.square()) {
    Integer prod = 1;
    for (const auto& x : d) prod *= x;
    CHECK(abs(determinant(m)) == prod);
  }
}

}  // namespace

TEST_CASE("smith normal form on small cases") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).D == IntMatrix::identity(2));
  auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.D == (IntMatrix{{1, 0}, {0, 6}}));
  check_smith(IntMatrix{{2, 0}, {0, 3}});
  CHECK(smith_normal_form(IntMatrix(3, 2)).D.is_zero());
  check_smith(IntMatrix(3, 2));
  check_smith(IntMatrix(0, 0));
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(2, 0));
}

TEST_CASE("smith normal form identities on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int trial = 0; trial < 500; ++trial) check_smith(random_matrix(rng, dim(rng), dim(rng), 20));
}

TEST_CASE("kernel basis") {
  auto L = IntMatrix::identity(2);
  CHECK(kernel_basis(L - IntMatrix::identity(2)).size() == 2);
  IntMatrix phi{{3, 2}, {1, 1}};
  CHECK(determinant(phi - IntMatrix::identity(2)) == -2);
  CHECK(kernel_basis(phi - IntMatrix::identity(2)).empty());
  IntMatrix psi{{1, 2}, {0, 1}};
  auto k = kernel_basis(psi - IntMatrix::identity(2));
  REQUIRE(k.size() == 1);
  CHECK((k[0] == IntVector{1, 0} || k[0] == IntVector{-1, 0}));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 5, 4);
    auto basis = kernel_basis(m);
    auto s = smith_normal_form(m);
    CHECK(basis.size() == m.cols() - s.rank);
    for (const auto& v : basis) CHECK(is_zero(m * v));
    // Saturation: the basis spans a direct summand (SNF of the basis has unit factors).
    if (!basis.empty()) {
      auto sb = smith_normal_form(IntMatrix::from_columns(m.cols(), basis));
      CHECK(sb.rank == basis.size());
      for (std::size_t i = 0; i < sb.rank; ++i) CHECK(sb.D.at(i, i) == 1);
    }
  }
}

TEST_CASE("solve_integer") {
  IntMatrix phi2{{2, 1}, {1, 1}};
  auto v = solve_integer(IntMatrix::identity(2) - phi2, IntVector{1, 0});
  REQUIRE(v);
  CHECK(*v == IntVector{0, -1});
  IntMatrix any{{4, 7}, {2, -3}};
  CHECK(*solve_integer(any, IntVector{0, 0}) == IntVector{0, 0});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, IntVector{3}));
  CHECK_THROWS(solve_integer(IntMatrix{{2}}, IntVector{3, 1}));
  CHECK(solve_integer(IntMatrix(0, 0), IntVector{}));
}

TEST_CASE("cokernel structure") {
  auto cs = cokernel(IntMatrix::identity(2) - IntMatrix{{1, 2}, {0, 1}});
  CHECK(cs.free_rank == 1);
  CHECK(cs.torsion == IntVector{2});
  IntVector p = project_to_cokernel(cs, IntVector{1, 0});
  CHECK(p[0] == 1);
  CHECK(cokernel(IntMatrix::identity(3)).trivial());
  auto z = cokernel(IntMatrix(3, 3));
  CHECK(z.free_rank == 3);
  CHECK(z.torsion.empty());
  CHECK(cokernel(IntMatrix(0, 0)).trivial());
}

TEST_CASE("solvability agrees with cokernel projection, and projection is additive") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = random_matrix(rng, r, c, 5);
    IntVector b(r), b2(r);
    for (auto& x : b) x = e(rng);
    for (auto& x : b2) x = e(rng);
    auto cs = cokernel(m);
    IntVector p = project_to_cokernel(cs, b);
    auto sol = solve_integer(m, b);
    CHECK(bool(sol) == is_zero(p));
    if (sol) CHECK(m * *sol == b);
    IntVector sum = project_to_cokernel(cs, b + b2);
    IntVector parts = project_to_cokernel(cs, b) + project_to_cokernel(cs, b2);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      if (cs.moduli[i] == 0)
        CHECK(sum[i] == parts[i]);
      else
        CHECK(mpz_divisible_p(Integer(sum[i] - parts[i]).get_mpz_t(), cs.moduli[i].get_mpz_t()));
    }
  }
}

TEST_CASE("determinant and integer inverse") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(IntMatrix{{4, 4}, {1, 0}}) == -4);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}) == -6);
  CHECK_THROWS(determinant(IntMatrix(2, 3)));
  IntMatrix l{{5, 4}, {1, 1}};
  auto inv = integer_inverse(l);
  REQUIRE(inv);
  CHECK(l * *inv == IntMatrix::identity(2));
  CHECK_FALSE(integer_inverse(IntMatrix{{3}}));

  // Cofactor expansion oracle on 4x4 random matrices.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, 9);
    std::function<Integer(const IntMatrix&)> cof = [&](const IntMatrix& a) -> Integer {
      if (a.rows() == 1) return a.at(0, 0);
      Integer total = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        IntMatrix minor(a.rows() - 1, a.cols() - 1);
        for (std::size_t r = 1; r < a.rows(); ++r)
          for (std::size_t c = 0, cc = 0; c < a.cols(); ++c)
            if (c != j) minor.at(r - 1, cc++) = a.at(r, c);
        Integer term = a.at(0, j) * cof(minor);
        total += (j % 2 ? -term : term);
      }
      return total;
    };
    CHECK(determinant(m) == cof(m));
  }
}
