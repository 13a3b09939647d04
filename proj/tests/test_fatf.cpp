#include "doctest.h"

#include "fixsub/errors.hpp"
#include "fixsub/fatf.hpp"
#include "fixsub/surface.hpp"

using namespace fixsub;

namespace {

Word sw(std::string_view s, std::size_t g) { return parse_word(s, 2 * g, Alphabet::surface); }

// F_2 x Z^2, alpha = id, Gamma(a1) = (1, 0), L = [[t, t-1], [1, 1]].
StdEndo phi_like(long t) {
  StdEndo e = identity_endo(Ambient::free(2, 2));
  e.gamma.at(0, 0) = 1;
  e.L = IntMatrix{{t, t - 1}, {1, 1}};
  return e;
}

// Sigma_2, b2 -> b2 a2.
AlphaSpec psi2(std::optional<FixCertificate> fix) {
  auto images = identity_map(4);
  images[3] = sw("b2 a2", 2);
  return {images, std::move(fix), true};
}

}  // namespace

TEST_CASE("ambient strings") {
  CHECK(to_string(Ambient::free(3, 2)) == "free:g=3,k=2");
  CHECK(parse_ambient("surface:g=2,k=1") == Ambient::surface(2, 1));
  CHECK(parse_ambient("free:g=4") == Ambient::free(4, 0));
  CHECK_THROWS_AS(parse_ambient("free:g=1,k=0"), ParseError);
  CHECK_THROWS_AS(parse_ambient("torus:g=2"), ParseError);
  CHECK(Ambient::surface(3, 0).word_rank() == 6);
}

TEST_CASE("group elements") {
  Ambient a = Ambient::free(2, 1);
  GroupElement x{parse_word("a1 a2", 2), {Integer(3)}};
  GroupElement y = invert(a, x);
  CHECK(to_string(a, y) == "[A2 A1] (-3)");
  CHECK(element_equal(a, multiply(a, x, y), identity_element(a)));

  Ambient s = Ambient::surface(2, 0);
  GroupElement r{relator(2), {}};
  CHECK(element_equal(s, r, identity_element(s)));
}

TEST_CASE("validation") {
  StdEndo e = phi_like(3);
  CHECK_NOTHROW(e.validate());
  StdEndo bad = e;
  bad.L = IntMatrix::identity(3);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  StdEndo s = identity_endo(Ambient::surface(2, 0));
  s.alpha.images[0] = sw("a1 a1", 2);
  s.alpha.fix.reset();
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  StdEndo moved = identity_endo(Ambient::surface(2, 0));
  moved.alpha = psi2(FixCertificate::whole());
  CHECK_THROWS_AS(moved.validate(), CertificateError);
  moved.alpha = psi2(FixCertificate::free_basis({sw("b2", 2)}));
  CHECK_THROWS_AS(moved.validate(), CertificateError);
  moved.alpha = psi2(FixCertificate::free_basis({sw("a1", 2), sw("b1", 2), sw("a2", 2)}));
  CHECK_NOTHROW(moved.validate());
}

TEST_CASE("evaluation and the standard form") {
  StdEndo e = phi_like(3);
  GroupElement x{parse_word("a1 a1 a2", 2), {Integer(1), Integer(-1)}};
  GroupElement y = eval_endo(e, x);
  CHECK(y.u == x.u);
  // Gamma ab = (2, 0); L v = (3 - 2, 1 - 1) = (1, 0).
  CHECK(y.v == IntVector{Integer(3), Integer(0)});
}

TEST_CASE("formula inverse and automorphism check") {
  for (long t = 2; t <= 6; ++t) {
    StdEndo e = phi_like(t);
    auto inv = formula_inverse(e, identity_map(2));
    REQUIRE(inv);
    CHECK(verify_automorphism(e, *inv));
    CHECK(compose(e, *inv).L == IntMatrix::identity(2));
  }
  StdEndo endo = identity_endo(Ambient::free(2, 1));
  endo.L = IntMatrix{{3}};
  CHECK_FALSE(formula_inverse(endo, identity_map(2)));
  CHECK_FALSE(verify_automorphism(endo, endo));

  // A non-trivial alpha: a1 -> a1 a2, with inverse a1 -> a1 A2.
  StdEndo n = identity_endo(Ambient::free(2, 1));
  n.alpha = {{parse_word("a1 a2", 2), parse_word("a2", 2)}, FixCertificate::free_basis({parse_word("a2", 2)}), true};
  n.gamma.at(0, 1) = 2;
  n.L = IntMatrix{{-1}};
  auto n_inv = formula_inverse(n, {parse_word("a1 A2", 2), parse_word("a2", 2)});
  REQUIRE(n_inv);
  CHECK(verify_automorphism(n, *n_inv));
  n_inv->gamma.at(0, 0) += 1;
  CHECK_FALSE(verify_automorphism(n, *n_inv));
}

TEST_CASE("direct sums") {
  StdEndo e = identity_endo(Ambient::free(2, 0));
  StdEndo d = direct_sum(e, IntMatrix{{1, 0}, {0, -1}});
  CHECK(d.ambient == Ambient::free(2, 2));
  CHECK(d.claims_automorphism);
  CHECK(*d.expected_iso == IsoType::free(2, 1));
  CHECK_FALSE(direct_sum(e, IntMatrix{{2}}).claims_automorphism);
}

TEST_CASE("containers") {
  Ambient a = Ambient::free(3, 0);
  Container c(a, FixCertificate::free_basis({parse_word("a1 a2", 3), parse_word("a2", 3)}));
  CHECK(c.rank() == 2);
  CHECK(c.contains(parse_word("a1", 3)));
  CHECK_FALSE(c.contains(parse_word("a3", 3)));
  CHECK(Container(a, FixCertificate::whole()).rank() == 3);

  Ambient s = Ambient::surface(2, 0);
  Container h(s, FixCertificate::free_basis({sw("a1", 2), sw("b1", 2)}));
  // [a1, b1] = [a2, b2]^-1 in the surface group.
  CHECK(h.contains(sw("b2 a2 B2 A2", 2)));
  CHECK_FALSE(h.contains(sw("a2", 2)));
  CHECK_THROWS_AS(Container(s, FixCertificate::free_basis({sw("a1", 2), sw("a1 a1", 2)})), CertificateError);

  // b2 a2 B2 = a1 b1 A1 B1 a2, so its powers lie in <a1, b1, a2> without
  // containing it as a subword.
  Container psi_fix(s, FixCertificate::free_basis({sw("a1", 2), sw("b1", 2), sw("a2", 2)}));
  CHECK(psi_fix.contains(sw("b2 a2 a2 a2 B2", 2)));
  CHECK(psi_fix.contains(sw("a1 b2 A2 A2 B2 b1", 2)));
  CHECK_FALSE(psi_fix.contains(sw("b2", 2)));
  CHECK_FALSE(psi_fix.contains(sw("b2 a1 B2", 2)));
}

TEST_CASE("certificate completeness by brute force") {
  Ambient s = Ambient::surface(2, 0);
  auto full = psi2(FixCertificate::free_basis({sw("a1", 2), sw("b1", 2), sw("a2", 2)}));
  auto report = validate_certificate(full, s, 4);
  CHECK(report.verified_fixed);
  CHECK(report.complete());
  CHECK(report.fixed_words_seen > 0);

  auto partial = psi2(FixCertificate::free_basis({sw("a1", 2)}));
  auto r2 = validate_certificate(partial, s, 3);
  CHECK_FALSE(r2.complete());
  CHECK(r2.summary().find("outside") != std::string::npos);
}
