#include "fixsub/constructions.hpp"

#include <stdexcept>

#include "fixsub/classify.hpp"
#include "fixsub/surface.hpp"
#include "fixsub/surface_maps.hpp"

namespace fixsub {

namespace {

std::string p(const std::string& name, std::size_t value) { return name + "=" + std::to_string(value); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// diag(I_plus, -I_minus).
IntMatrix sign_block(std::size_t plus, std::size_t minus) {
  IntMatrix out = IntMatrix::identity(plus + minus);
  for (std::size_t i = plus; i < plus + minus; ++i) out.at(i, i) = -1;
  return out;
}

// Appends `extra` (assumed unimodular) to the recipe and its inverse.
Recipe extend(Recipe r, const IntMatrix& extra) {
  if (extra.rows() == 0) return r;
  r.endo = direct_sum(r.endo, extra);
  if (r.inverse) r.inverse = direct_sum(*r.inverse, *integer_inverse(extra));
  r.expected = *r.endo.expected_iso;
  r.params += "," + p("k", r.endo.ambient.k);
  return r;
}

Recipe finish(std::string id, std::string params, StdEndo e, std::optional<std::vector<Word>> alpha_inverse) {
  Recipe r;
  r.id = std::move(id);
  r.params = std::move(params);
  e.claims_automorphism = alpha_inverse.has_value();
  if (alpha_inverse) {
    auto inv = formula_inverse(e, *alpha_inverse);
    if (!inv) throw std::logic_error("recipe " + r.id + " has a non-invertible L");
    r.inverse = std::move(*inv);
  }
  r.expected = *e.expected_iso;
  r.endo = std::move(e);
  return r;
}

StdEndo base_endo(const Ambient& a, AlphaSpec alpha, IsoType expected) {
  StdEndo e;
  e.ambient = a;
  e.alpha = std::move(alpha);
  e.gamma = IntMatrix(a.k, a.word_rank());
  if (a.k > 0) e.gamma.at(0, 0) = 1;
  e.L = IntMatrix::identity(a.k);
  e.expected_iso = expected;
  return e;
}

// a_i fixed for i <= t, inverted after; certificate <a_1..a_t>.
AlphaSpec prop27_alpha(std::size_t n, std::size_t t) {
  AlphaSpec spec;
  std::vector<Word> basis;
  for (std::uint32_t i = 1; i <= n; ++i) {
    spec.images.push_back(Word::generator(n, i, i <= t ? 1 : -1));
    if (i <= t) basis.push_back(Word::generator(n, i));
  }
  spec.fix = FixCertificate::free_basis(std::move(basis));
  return spec;
}

AlphaSpec surface_alpha(const SurfaceMap& f, FixCertificate cert, bool complete) {
  return {f.images, std::move(cert), complete};
}

// F_g x Z^k: Fix(alpha) = F_t, Gamma(a_1) = e_1, L = diag(-1, I_s, -I),
// so p(Fix) is the index-2 kernel of u -> ab_1(u) mod 2.
Recipe index2_free(std::size_t g, std::size_t t, std::size_t k, std::size_t s) {
  require(t >= 1 && t <= g && k >= 1 && s + 1 <= k, "index-2 construction out of range");
  StdEndo e = base_endo(Ambient::free(g, k), prop27_alpha(g, t), IsoType::free(2 * t - 1, s));
  e.L = block_diagonal(IntMatrix{{-1}}, sign_block(s, k - 1 - s));
  return finish("thm33", p("g", g) + "," + p("t", t), std::move(e), prop27_alpha(g, t).images);
}

Recipe index2_surface(std::size_t g, std::size_t k, std::size_t s) {
  require(g >= 2 && k >= 1 && s + 1 <= k, "index-2 construction out of range");
  StdEndo e = base_endo(Ambient::surface(g, k), {identity_map(2 * g), FixCertificate::whole(), true},
                        IsoType::surface(2 * g - 1, s));
  e.L = block_diagonal(IntMatrix{{-1}}, sign_block(s, k - 1 - s));
  return finish("index2", p("g", g) + "," + p("k", k) + "," + p("s", s), std::move(e), identity_map(2 * g));
}

Recipe identity_recipe(const Ambient& a) {
  StdEndo e = identity_endo(a.with_k(0));
  return finish("identity", p("g", a.g), std::move(e), identity_map(a.word_rank()));
}

Recipe surface_aleph(std::size_t g) {
  StdEndo e = base_endo(Ambient::surface(g, 1), {identity_map(2 * g), FixCertificate::whole(), true},
                        IsoType::free_infinite(1));
  return finish("aleph", p("g", g), std::move(e), identity_map(2 * g));
}

// Sigma_g x Z^0 with a chain of twists; completeness of the certificate is
// only brute-force checked.
Recipe surface_chain(std::size_t g, const SurfaceMap& f, FixCertificate cert, IsoType expected, std::string id) {
  StdEndo e = base_endo(Ambient::surface(g, 0), surface_alpha(f, std::move(cert), false), expected);
  Recipe r = finish(std::move(id), p("g", g), std::move(e), f.inverse);
  r.notes.push_back("Fix(alpha) certificate checked by brute force only");
  return r;
}

Recipe pseudo_anosov(std::size_t g) {
  return surface_chain(g, closed_pseudo_anosov(g), FixCertificate::free_basis({}), IsoType::trivial(), "pseudo_anosov");
}

}  // namespace

Recipe prop27_aut(std::size_t n, std::size_t t) {
  require(n >= 2 && t <= n, "prop27 needs n >= 2 and 0 <= t <= n");
  StdEndo e = base_endo(Ambient::free(n, 0), prop27_alpha(n, t), IsoType::free(t));
  return finish("prop27", p("g", n) + "," + p("t", t), std::move(e), prop27_alpha(n, t).images);
}

namespace {

Recipe phi_or_psi(std::string id, std::size_t g, std::size_t t, IntMatrix L, IsoType expected) {
  require(g >= 2 && t >= 2, id + " needs g >= 2 and t >= 2");
  StdEndo e = base_endo(Ambient::free(g, 2), prop27_alpha(g, 2), expected);
  e.L = std::move(L);
  return finish(std::move(id), p("g", g) + "," + p("t", t), std::move(e), prop27_alpha(g, 2).images);
}

}  // namespace

Recipe phi_t(std::size_t g, std::size_t t) {
  const long T = static_cast<long>(t);
  return phi_or_psi("phi_t", g, t, {{T, T - 1}, {1, 1}}, IsoType::free(t));
}

Recipe psi_t(std::size_t g, std::size_t t) {
  const long T = static_cast<long>(t);
  return phi_or_psi("psi_t", g, t, {{1, T - 1}, {0, 1}}, IsoType::free(t, 1));
}

Recipe endo_m(std::size_t g, std::size_t m) {
  require(g >= 2 && m >= 1, "endo_m needs g >= 2 and m >= 1");
  StdEndo e = base_endo(Ambient::free(g, 1), {identity_map(g), FixCertificate::whole(), true},
                        IsoType::free(m * (g - 1) + 1));
  e.L = IntMatrix{{static_cast<long>(m) + 1}};
  return finish("endo_m", p("g", g) + "," + p("m", m), std::move(e), std::nullopt);
}

Recipe aleph_aut(std::size_t g) {
  require(g >= 2, "aleph needs g >= 2");
  StdEndo e = base_endo(Ambient::free(g, 1), prop27_alpha(g, 2), IsoType::free_infinite(1));
  return finish("aleph", p("g", g), std::move(e), prop27_alpha(g, 2).images);
}

Recipe theorem33_witness(std::size_t g, const IsoType& target) {
  const Ambient a = Ambient::free(g, 1);
  auto v = is_aut_fixed(a, target);
  if (!v.answer) throw std::invalid_argument(to_string(target) + " is not aut-fixed in " + to_string(a));
  const RawForm& x = *v.witness_form;
  Recipe r;
  if (*v.witness == "prop27")
    r = extend(prop27_aut(g, x.param), sign_block(x.s, 1 - x.s));
  else if (*v.witness == "thm33")
    r = index2_free(g, (x.param + 1) / 2, 1, 0);
  else
    r = aleph_aut(g);
  r.id = "thm33";
  r.params = p("g", g) + ",target=" + to_string(target);
  return r;
}

IntMatrix a_ell_matrix(std::size_t ell, std::size_t m) {
  require(ell >= 2 && m >= 1, "a_ell_matrix needs ell >= 2 and m >= 1");
  IntMatrix out(ell, ell);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t j = 0; j < ell; ++j) {
      if (i == 0)
        out.at(i, j) = j == 0 ? long(m) + 1 : long(m);
      else
        out.at(i, j) = j <= i ? 1 : 0;
    }
  return out;
}

Recipe surface_endo(std::size_t g, std::size_t k, std::size_t m, std::size_t s, AlphaChoice alpha) {
  require(g >= 2 && k >= 2 && m >= 1 && s + 1 <= k, "surface_endo needs g, k >= 2, m >= 1, 0 <= s <= k-1");
  const Ambient a = Ambient::surface(g, k);
  SurfaceMap f = alpha == AlphaChoice::identity ? identity_surface_map(g) : phi1(g);
  AlphaSpec spec = alpha == AlphaChoice::identity
                       ? AlphaSpec{f.images, FixCertificate::whole(), true}
                       : surface_alpha(f, FixCertificate::free_basis({Word::generator(2 * g, a_gen(1)), Word::generator(2 * g, b_gen(1))}), false);
  IsoType expected = alpha == AlphaChoice::identity ? IsoType::surface(m * (g - 1) + 1, s) : IsoType::free(m + 1, s);
  StdEndo e = base_endo(a, std::move(spec), expected);
  const long M = static_cast<long>(m);
  if (s + 2 <= k)
    e.L = block_diagonal(a_ell_matrix(k - s, m), IntMatrix::identity(s));
  else
    e.L = block_diagonal(IntMatrix{{1, M}, {0, 1}}, IntMatrix::identity(k - 2));
  Recipe r = finish("surface_endo",
                    p("g", g) + "," + p("k", k) + "," + p("m", m) + "," + p("s", s) +
                        (alpha == AlphaChoice::identity ? ",alpha=identity" : ",alpha=phi1"),
                    std::move(e), f.inverse);
  if (alpha == AlphaChoice::phi1) r.notes.push_back("Fix(alpha) certificate checked by brute force only");
  return r;
}

Recipe surface_psi(std::size_t g) {
  require(g >= 2, "surface_psi needs g >= 2");
  std::vector<Word> basis;
  for (std::uint32_t gen = 1; gen < 2 * g; ++gen) basis.push_back(Word::generator(2 * g, gen));
  SurfaceMap f = psi_map(g);
  StdEndo e = base_endo(Ambient::surface(g, 0), surface_alpha(f, FixCertificate::free_basis(std::move(basis)), true),
                        IsoType::free(2 * g - 1));
  return finish("surface_psi", p("g", g), std::move(e), f.inverse);
}

Recipe rank_witness(const Ambient& a, std::optional<std::size_t> n) {
  a.validate();
  require(a.k >= 2, "rank_witness needs k >= 2");
  const std::size_t g = a.g, k = a.k;
  Recipe r;
  if (!a.is_surface()) {
    if (!n)
      r = extend(aleph_aut(g), sign_block(0, k - 1));
    else if (*n <= 1)
      r = extend(prop27_aut(g, *n), sign_block(0, k));
    else
      r = extend(phi_t(g, *n), sign_block(0, k - 2));
  } else if (!n) {
    r = extend(surface_aleph(g), sign_block(0, k - 1));
  } else if (*n <= 1) {
    r = extend(pseudo_anosov(g), sign_block(*n, k - *n));
  } else {
    std::optional<Recipe> found;
    for (std::size_t s = 0; s + 1 <= k && !found; ++s)
      for (std::size_t m = 1; 2 * (m * (g - 1) + 1) + s <= *n && !found; ++m)
        if (2 * (m * (g - 1) + 1) + s == *n) found = surface_endo(g, k, m, s, AlphaChoice::identity);
    r = found ? *found : surface_endo(g, k, *n - 1, 0, AlphaChoice::phi1);
  }
  r.notes.push_back("built as " + r.id + "(" + r.params + ")");
  r.id = "rank_witness";
  r.params = to_string(a) + ",n=" + (n ? std::to_string(*n) : std::string("aleph0"));
  return r;
}

std::optional<Recipe> realize(const Ambient& a, const IsoType& target) {
  auto v = is_aut_fixed(a, target);
  if (!v.answer || !v.witness) return std::nullopt;
  const RawForm& x = *v.witness_form;
  const std::string& id = *v.witness;
  const std::size_t g = a.g, k = a.k, s = x.s;
  if (id == "prop27") return extend(prop27_aut(g, x.param), sign_block(s, k - s));
  if (id == "thm33") return index2_free(g, (x.param + 1) / 2, k, s);
  if (id == "phi_t") return extend(phi_t(g, x.param), sign_block(s, k - 2 - s));
  if (id == "psi_t") return extend(psi_t(g, x.param), sign_block(s - 1, k - 1 - s));
  if (id == "aleph") {
    Recipe base = a.is_surface() ? surface_aleph(g) : aleph_aut(g);
    return extend(base, sign_block(s - 1, k - s));
  }
  if (id == "identity") return extend(identity_recipe(a), sign_block(s, k - s));
  if (id == "index2") return index2_surface(g, k, s);
  if (id == "surface_psi") return extend(surface_psi(g), sign_block(s, k - s));
  if (id == "surface_endo") {
    if (x.base == IsoBase::surface) return surface_endo(g, k, (x.param - 1) / (g - 1), s, AlphaChoice::identity);
    return surface_endo(g, k, x.param - 1, s, AlphaChoice::phi1);
  }
  throw std::logic_error("no builder for witness " + id);
}

const std::vector<std::string>& recipe_ids() {
  static const std::vector<std::string> ids{"prop27", "phi_t", "psi_t", "endo_m", "aleph",
                                            "thm33", "surface_endo", "surface_psi", "rank_witness"};
  return ids;
}

Recipe build_recipe(const std::string& id, const RecipeParams& q) {
  if (id == "prop27") return prop27_aut(q.g, q.t);
  if (id == "phi_t") return phi_t(q.g, q.t);
  if (id == "psi_t") return psi_t(q.g, q.t);
  if (id == "endo_m") return endo_m(q.g, q.m);
  if (id == "aleph") return aleph_aut(q.g);
  if (id == "thm33") {
    require(q.target.has_value(), "thm33 needs a target type");
    return theorem33_witness(q.g, *q.target);
  }
  if (id == "surface_endo") return surface_endo(q.g, q.k, q.m, q.s, q.alpha);
  if (id == "surface_psi") return surface_psi(q.g);
  if (id == "rank_witness") return rank_witness(q.ambient ? *q.ambient : Ambient::free(q.g, q.k), q.n);
  throw std::invalid_argument("unknown recipe \"" + id + "\"");
}

std::vector<Recipe> smallest_catalog() {
  return {prop27_aut(2, 0),
          phi_t(2, 2),
          psi_t(2, 2),
          endo_m(2, 1),
          aleph_aut(2),
          theorem33_witness(2, IsoType::free(3)),
          surface_endo(2, 2, 1, 0, AlphaChoice::identity),
          surface_endo(2, 2, 1, 0, AlphaChoice::phi1),
          surface_psi(2),
          rank_witness(Ambient::free(2, 2), 0),
          rank_witness(Ambient::surface(2, 2), 0)};
}

}  // namespace fixsub
