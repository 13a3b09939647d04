#include "fixsub/fixpipe.hpp"

#include <stdexcept>

#include "fixsub/enumerate.hpp"
#include "fixsub/errors.hpp"
#include "fixsub/surface.hpp"

namespace fixsub {

namespace {

IntMatrix i_minus(const IntMatrix& L) { return IntMatrix::identity(L.rows()) - L; }

IsoType whole_type(const Ambient& a) { return a.is_surface() ? IsoType::surface(a.g) : IsoType::free(a.g); }

bool trivial_word(const Ambient& a, const Word& u) { return a.is_surface() ? is_trivial(u, a.g) : u.empty(); }

std::vector<Word> all_words_up_to(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out{Word(rank)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (std::uint32_t key = 0; key < 2 * rank; ++key) {
      Letter x = Letter::from_order_key(key);
      if (!out[i].empty() && out[i][out[i].size() - 1] == x.inverse()) continue;
      out.push_back(multiply(out[i], Word::generator(rank, x.generator(), x.sign())));
    }
  }
  return out;
}

}  // namespace

FixedLattice fixed_lattice(const IntMatrix& L) {
  if (!L.square()) throw std::invalid_argument("fixed_lattice: L must be square");
  FixedLattice out;
  out.basis = kernel_basis(L - IntMatrix::identity(L.rows()));
  out.s = out.basis.size();
  return out;
}

std::string to_string(ProjectedTag t) {
  switch (t) {
    case ProjectedTag::full_fix_alpha:
      return "full";
    case ProjectedTag::finite_index_kernel:
      return "finite_index_kernel";
    case ProjectedTag::infinitely_generated:
      return "infinitely_generated";
    case ProjectedTag::trivial:
      return "trivial";
  }
  return "?";
}

CongruenceMap::CongruenceMap(const IntMatrix& gamma, const IntMatrix& L)
    : gamma_(gamma), quotient_(cokernel(i_minus(L))) {}

IntVector CongruenceMap::operator()(const Word& u) const {
  return project_to_cokernel(quotient_, gamma_ * abelianize(u));
}

bool CongruenceMap::torsion(const Word& u) const {
  IntVector y = (*this)(u);
  for (std::size_t i = quotient_.torsion.size(); i < y.size(); ++i)
    if (y[i] != 0) return false;
  return true;
}

ProjectedPart projected_fix(const FixCertificate& cert, const IntMatrix& gamma, const IntMatrix& L,
                            const Ambient& ambient, std::size_t max_vertices) {
  ProjectedPart p;
  p.container.emplace(ambient, cert);
  const Container& c = *p.container;
  const CongruenceMap h(gamma, L);

  if (c.rank() == 0) {
    p.tag = ProjectedTag::trivial;
    p.iso = IsoType::trivial();
    p.index = 1;
    if (!ambient.is_surface()) p.ambient_graph = c.graph();
    return p;
  }

  bool all_zero = true, all_torsion = true;
  for (const auto& w : c.basis()) {
    all_zero &= h.vanishes(w);
    all_torsion &= h.torsion(w);
  }

  if (all_zero) {
    p.tag = ProjectedTag::full_fix_alpha;
    p.index = 1;
    p.iso = c.whole_group() ? whole_type(ambient) : IsoType::free(c.rank());
    p.generators = c.basis();
    if (!ambient.is_surface()) p.ambient_graph = c.graph();
    return p;
  }

  if (all_torsion) {
    const std::size_t t = h.quotient().torsion.size();
    FiniteAbelianGroup group(h.quotient().torsion);
    std::vector<FiniteAbelianGroup::Element> images;
    for (const auto& w : c.basis()) {
      IntVector y = h(w);
      images.emplace_back(y.begin(), y.begin() + static_cast<long>(t));
    }
    p.kernel_graph = schreier_kernel_graph(c.rank(), group, images, max_vertices);
    p.tag = ProjectedTag::finite_index_kernel;
    p.index = p.kernel_graph->vertex_count();
    for (const auto& w : basis_of(*p.kernel_graph)) p.generators.push_back(apply_map(c.basis(), w));
    if (c.whole_group() && ambient.is_surface()) {
      p.iso = finite_index_subgroup_type(ambient.g, p.index);
    } else {
      p.iso = IsoType::free(graph_rank(*p.kernel_graph));
      if (graph_rank(*p.kernel_graph) != p.index * (c.rank() - 1) + 1)
        throw std::logic_error("kernel graph rank breaks the Schreier formula");
    }
    if (!ambient.is_surface()) p.ambient_graph = graph_from_basis(p.generators, ambient.word_rank());
    return p;
  }

  if (c.rank() >= 2) {
    p.tag = ProjectedTag::infinitely_generated;
    p.iso = infinite_index_normal_type(true, true);
    return p;
  }
  p.tag = ProjectedTag::trivial;
  p.iso = infinite_index_normal_type(false, false);
  p.notes.push_back("Fix(alpha) has rank 1 and h has infinite image, so h is injective and the projected part is trivial");
  if (!ambient.is_surface()) p.ambient_graph = graph_from_basis(std::vector<Word>{}, ambient.word_rank());
  return p;
}

std::optional<IntVector> particular_solution(const StdEndo& e, const Word& u) {
  return solve_integer(i_minus(e.L), gamma_of(e, u));
}

FixDescription fix_subgroup(const StdEndo& e, const FixOptions& options) {
  e.validate();
  if (!e.alpha.fix) throw CertificateError("fix_subgroup needs a Fix(alpha) certificate");
  FixDescription d;
  auto lattice = fixed_lattice(e.L);
  d.s = lattice.s;
  d.lattice_basis = lattice.basis;
  d.projected = projected_fix(*e.alpha.fix, e.gamma, e.L, e.ambient, options.max_vertices);
  d.iso = d.projected.iso.times_z(d.s);
  d.notes = d.projected.notes;
  if (!e.alpha.certified_complete) d.notes.push_back("Fix(alpha) certificate is not certified complete");

  auto snf = smith_normal_form(i_minus(e.L));
  for (const auto& u : d.projected.generators) {
    auto v = solve_integer(snf, gamma_of(e, u));
    if (!v) throw std::logic_error("projected generator " + to_string(u, e.ambient.alphabet()) + " has no lift");
    d.witnesses.push_back({u, *v});
  }
  if (d.projected.tag == ProjectedTag::infinitely_generated) {
    KernelStream stream(e, d.projected);
    for (std::size_t i = 0; i < options.infinite_witnesses; ++i) d.witnesses.push_back(stream.next());
  }
  for (const auto& b : d.lattice_basis) d.witnesses.push_back({Word(e.ambient.word_rank()), b});
  for (const auto& w : d.witnesses)
    if (!element_equal(e.ambient, eval_endo(e, w), w))
      throw std::logic_error("witness " + to_string(e.ambient, w) + " is not fixed");
  return d;
}

KernelStream::KernelStream(const StdEndo& e, const ProjectedPart& p) {
  if (p.tag != ProjectedTag::infinitely_generated || !p.container)
    throw std::invalid_argument("KernelStream needs an infinitely generated projected part");
  const CongruenceMap h(e.gamma, e.L);
  const auto& basis = p.container->basis();
  std::size_t ui = basis.size();
  for (std::size_t i = 0; i < basis.size() && ui == basis.size(); ++i)
    if (!h.torsion(basis[i])) ui = i;
  if (ui == basis.size()) throw std::logic_error("no basis element with infinite image");
  u_ = basis[ui];
  std::optional<Word> w;
  for (std::size_t i = 0; i < basis.size() && !w; ++i)
    if (i != ui && h.vanishes(basis[i])) w = basis[i];
  if (!w) w = commutator(u_, basis[ui == 0 ? 1 : 0]);
  w_ = *w;
  auto v = particular_solution(e, w_);
  if (!v) throw std::logic_error("kernel seed has no lift");
  v_ = *v;
}

GroupElement KernelStream::next() {
  long n = (step_ + 1) / 2;
  if (step_ % 2 == 0) n = -n;
  ++step_;
  Word c = power(u_, n);
  return {multiply(multiply(c, w_), invert(c)), v_};
}

bool projected_member(const StdEndo& e, const ProjectedPart& p, const Word& u) {
  const Ambient& a = e.ambient;
  switch (p.tag) {
    case ProjectedTag::trivial:
      return trivial_word(a, u);
    case ProjectedTag::full_fix_alpha:
      return p.container->contains(u);
    case ProjectedTag::finite_index_kernel:
      if (p.ambient_graph) return member(*p.ambient_graph, u);
      [[fallthrough]];
    case ProjectedTag::infinitely_generated:
      return CongruenceMap(e.gamma, e.L).vanishes(u) && p.container->contains(u);
  }
  return false;
}

BruteResult brute_fixed_elements(const StdEndo& e, std::size_t max_len, const BruteOptions& options) {
  e.validate();
  FixedWordQuery q{e.alpha.images, e.ambient.genus(), max_len, options.max_words};
  auto words = options.parallel ? fixed_words_parallel(q) : fixed_words_serial(q);
  BruteResult out;
  out.alpha_fixed_words = words.size();
  out.words_visited = count_reduced_words(e.ambient.word_rank(), max_len).get_ui();
  out.lattice = fixed_lattice(e.L).basis;
  auto snf = smith_normal_form(i_minus(e.L));
  for (auto& u : words) {
    auto v = solve_integer(snf, gamma_of(e, u));
    if (v) out.families.push_back({std::move(u), std::move(*v)});
  }
  return out;
}

bool index_bound_check(const StdEndo& e, const FixDescription& desc) {
  const auto tag = desc.projected.tag;
  if (tag == ProjectedTag::full_fix_alpha) return true;
  if (tag != ProjectedTag::finite_index_kernel)
    throw std::invalid_argument("index bound applies to finite-index projected parts only");
  Integer d = abs(determinant(e.L - IntMatrix::identity(e.L.rows())));
  if (d == 0) throw std::invalid_argument("index bound needs det(L - I) != 0");
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), d.get_mpz_t(), desc.projected.container->rank());
  return Integer(desc.projected.index) <= bound;
}

OracleReport check_oracle_agreement(const StdEndo& e, const FixDescription& desc, std::size_t max_len,
                                    const BruteOptions& options) {
  OracleReport report;
  const Ambient& a = e.ambient;
  auto brute = brute_fixed_elements(e, max_len, options);
  report.words_checked = brute.words_visited;
  report.fixed_elements = brute.families.size();
  auto fail = [&](const std::string& what) { report.discrepancies.push_back(what); };

  IntMatrix lattice_cols = IntMatrix::from_columns(a.k, desc.lattice_basis);
  for (const auto& f : brute.families) {
    GroupElement x{f.u, f.particular};
    if (!element_equal(a, eval_endo(e, x), x)) fail("brute element " + to_string(a, x) + " is not fixed");
    for (const auto& b : brute.lattice) {
      GroupElement y{f.u, f.particular + b};
      if (!element_equal(a, eval_endo(e, y), y)) fail("lattice shift of " + to_string(a, x) + " is not fixed");
    }
    if (!projected_member(e, desc.projected, f.u))
      fail("fixed word " + to_string(f.u, a.alphabet()) + " is outside the computed projected part");
    auto v = particular_solution(e, f.u);
    if (!v || !solve_integer(lattice_cols, f.particular - *v))
      fail("vector part of " + to_string(a, x) + " is not in v_u + fixed lattice");
  }

  // Converse in free ambients: every short word of the computed projected
  // part is fixed and lifts.
  if (!a.is_surface()) {
    std::size_t listed = 0;
    for (const auto& u : all_words_up_to(a.word_rank(), max_len)) {
      if (!projected_member(e, desc.projected, u)) continue;
      while (listed < brute.families.size() && brute.families[listed].u < u) ++listed;
      if (listed == brute.families.size() || !(brute.families[listed].u == u))
        fail("word " + to_string(u) + " is in the computed projected part but not fixed");
      if (desc.projected.tag == ProjectedTag::finite_index_kernel) {
        bool by_h = CongruenceMap(e.gamma, e.L).vanishes(u) && desc.projected.container->contains(u);
        if (!by_h) fail("kernel graph and congruence disagree on " + to_string(u));
      }
    }
  }

  for (const auto& w : desc.witnesses) {
    ++report.witnesses_checked;
    if (!element_equal(a, eval_endo(e, w), w)) fail("witness " + to_string(a, w) + " is not fixed");
    if (!projected_member(e, desc.projected, w.u)) fail("witness " + to_string(a, w) + " outside projected part");
  }
  return report;
}

}  // namespace fixsub
