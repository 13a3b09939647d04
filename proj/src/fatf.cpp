#include "fixsub/fatf.hpp"

#include <deque>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "fixsub/enumerate.hpp"
#include "fixsub/errors.hpp"
#include "fixsub/surface.hpp"

namespace fixsub {

namespace {

void require_same(const Ambient& a, const Ambient& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": ambient mismatch (" + to_string(a) + " vs " + to_string(b) + ")");
}

void check_element(const Ambient& a, const GroupElement& x) {
  if (x.u.rank() != a.word_rank() || x.v.size() != a.k)
    throw std::invalid_argument("element does not live in " + to_string(a));
}

bool words_equal(const Ambient& a, const Word& x, const Word& y) {
  if (x == y) return true;
  return a.is_surface() && surface_equal(x, y, a.g);
}

}  // namespace

Ambient Ambient::free(std::size_t g, std::size_t k) {
  Ambient a{AmbientKind::free_times_abelian, g, k};
  a.validate();
  return a;
}

Ambient Ambient::surface(std::size_t g, std::size_t k) {
  Ambient a{AmbientKind::surface_times_abelian, g, k};
  a.validate();
  return a;
}

void Ambient::validate() const {
  if (g < 2) throw std::invalid_argument("ambient needs g >= 2, got g = " + std::to_string(g));
}

std::string to_string(const Ambient& a) {
  return std::string(a.is_surface() ? "surface" : "free") + ":g=" + std::to_string(a.g) + ",k=" + std::to_string(a.k);
}

Ambient parse_ambient(std::string_view text) {
  static const std::regex form(R"(^\s*(free|surface)\s*:\s*g\s*=\s*(\d+)\s*(?:,\s*k\s*=\s*(\d+))?\s*$)", std::regex::icase);
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, form)) throw ParseError("cannot parse ambient \"" + s + "\" (expected e.g. free:g=3,k=2)");
  Ambient a;
  std::string kind = m[1].str();
  a.kind = (kind[0] == 's' || kind[0] == 'S') ? AmbientKind::surface_times_abelian : AmbientKind::free_times_abelian;
  a.g = std::stoul(m[2].str());
  a.k = m[3].matched ? std::stoul(m[3].str()) : 0;
  if (a.g < 2) throw ParseError("ambient \"" + s + "\": g must be at least 2");
  return a;
}

GroupElement identity_element(const Ambient& a) { return {Word(a.word_rank()), zero_vector(a.k)}; }

GroupElement multiply(const Ambient& a, const GroupElement& x, const GroupElement& y) {
  check_element(a, x);
  check_element(a, y);
  return {multiply(x.u, y.u), x.v + y.v};
}

GroupElement invert(const Ambient& a, const GroupElement& x) {
  check_element(a, x);
  return {invert(x.u), zero_vector(a.k) - x.v};
}

bool element_equal(const Ambient& a, const GroupElement& x, const GroupElement& y) {
  check_element(a, x);
  check_element(a, y);
  return x.v == y.v && words_equal(a, x.u, y.u);
}

std::string to_string(const Ambient& a, const GroupElement& x) {
  std::ostringstream out;
  out << '[' << to_string(x.u, a.alphabet()) << "] (";
  for (std::size_t i = 0; i < x.v.size(); ++i) out << (i ? ", " : "") << x.v[i];
  out << ')';
  return out.str();
}

void StdEndo::validate() const {
  ambient.validate();
  const std::size_t n = ambient.word_rank();
  if (alpha.images.size() != n)
    throw std::invalid_argument("alpha has " + std::to_string(alpha.images.size()) + " images, expected " + std::to_string(n));
  for (const auto& w : alpha.images)
    if (w.rank() != n) throw std::invalid_argument("alpha image over the wrong alphabet");
  if (gamma.rows() != ambient.k || gamma.cols() != n)
    throw std::invalid_argument("Gamma must be " + std::to_string(ambient.k) + " x " + std::to_string(n));
  if (L.rows() != ambient.k || L.cols() != ambient.k)
    throw std::invalid_argument("L must be " + std::to_string(ambient.k) + " x " + std::to_string(ambient.k));
  if (ambient.is_surface() && !is_trivial(apply_map(alpha.images, relator(ambient.g)), ambient.g))
    throw std::invalid_argument("alpha does not preserve the surface relation");
  if (alpha.fix) validate_certificate(alpha, ambient);
}

StdEndo identity_endo(const Ambient& a) {
  StdEndo e;
  e.ambient = a;
  e.alpha.images = identity_map(a.word_rank());
  e.alpha.fix = FixCertificate::whole();
  e.gamma = IntMatrix(a.k, a.word_rank());
  e.L = IntMatrix::identity(a.k);
  e.claims_automorphism = true;
  e.expected_iso = a.is_surface() ? IsoType::surface(a.g, a.k) : IsoType::free(a.g, a.k);
  return e;
}

IntVector gamma_of(const StdEndo& e, const Word& u) { return e.gamma * abelianize(u); }

GroupElement eval_endo(const StdEndo& e, const GroupElement& x) {
  check_element(e.ambient, x);
  return {apply_map(e.alpha.images, x.u), gamma_of(e, x.u) + e.L * x.v};
}

IntMatrix abelianization_matrix(std::span<const Word> images) {
  std::vector<IntVector> cols;
  for (const auto& w : images) cols.push_back(abelianize(w));
  return IntMatrix::from_columns(images.size(), cols);
}

StdEndo compose(const StdEndo& e1, const StdEndo& e2) {
  require_same(e1.ambient, e2.ambient, "compose");
  StdEndo out;
  out.ambient = e1.ambient;
  out.alpha.images = compose_maps(e1.alpha.images, e2.alpha.images);
  if (out.alpha.images == identity_map(out.ambient.word_rank())) out.alpha.fix = FixCertificate::whole();
  out.gamma = e1.gamma * abelianization_matrix(e2.alpha.images) + e1.L * e2.gamma;
  out.L = e1.L * e2.L;
  return out;
}

bool verify_automorphism(const StdEndo& e, const StdEndo& e_inv) {
  if (!(e.ambient == e_inv.ambient)) return false;
  try {
    e.validate();
    e_inv.validate();
  } catch (const std::exception&) {
    return false;
  }
  const Ambient& a = e.ambient;
  for (const StdEndo& c : {compose(e, e_inv), compose(e_inv, e)}) {
    for (std::uint32_t i = 1; i <= a.word_rank(); ++i) {
      GroupElement x{Word::generator(a.word_rank(), i), zero_vector(a.k)};
      if (!element_equal(a, eval_endo(c, x), x)) return false;
    }
    for (std::size_t j = 0; j < a.k; ++j) {
      GroupElement x = identity_element(a);
      x.v[j] = 1;
      if (!element_equal(a, eval_endo(c, x), x)) return false;
    }
  }
  return true;
}

std::optional<StdEndo> formula_inverse(const StdEndo& e, std::vector<Word> alpha_inverse_images) {
  auto l_inv = integer_inverse(e.L);
  if (!l_inv) return std::nullopt;
  StdEndo inv;
  inv.ambient = e.ambient;
  inv.alpha.images = std::move(alpha_inverse_images);
  inv.alpha.fix = e.alpha.fix;  // Fix(alpha^-1) = Fix(alpha)
  inv.alpha.certified_complete = e.alpha.certified_complete;
  inv.gamma = -(*l_inv * e.gamma * abelianization_matrix(inv.alpha.images));
  inv.L = *l_inv;
  inv.claims_automorphism = true;
  inv.expected_iso = e.expected_iso;
  return inv;
}

StdEndo direct_sum(const StdEndo& e, const IntMatrix& extra) {
  if (!extra.square()) throw std::invalid_argument("direct_sum: block must be square");
  StdEndo out = e;
  out.ambient.k = e.ambient.k + extra.rows();
  out.gamma = stack_rows(e.gamma, IntMatrix(extra.rows(), e.ambient.word_rank()));
  out.L = block_diagonal(e.L, extra);
  out.claims_automorphism = e.claims_automorphism && integer_inverse(extra).has_value();
  if (e.expected_iso) {
    std::size_t s = kernel_basis(extra - IntMatrix::identity(extra.rows())).size();
    out.expected_iso = e.expected_iso->times_z(s);
  }
  return out;
}

Container::Container(const Ambient& a, const FixCertificate& cert) : ambient_(a), whole_(cert.whole_group) {
  const std::size_t n = a.word_rank();
  if (whole_) {
    basis_ = identity_map(n);
    if (!a.is_surface()) graph_ = graph_from_basis(basis_, n);
    return;
  }
  for (const auto& w : cert.basis)
    if (w.rank() != n) throw CertificateError("certificate word over the wrong alphabet");
  graph_ = graph_from_basis(cert.basis, n);
  basis_ = basis_of(graph_);
  if (a.is_surface()) {
    std::size_t nonempty = 0;
    for (const auto& w : cert.basis) nonempty += !w.empty();
    if (basis_.size() != nonempty)
      throw CertificateError("surface certificate words do not freely generate a subgroup of rank " + std::to_string(nonempty));
  }
}

bool Container::contains(const Word& u) const {
  if (whole_) return true;
  if (member(graph_, u)) return true;
  return ambient_.is_surface() && surface_member_search(graph_, u, ambient_.g);
}

namespace {

// Partial coset table for H in the surface group, grown by sewing relator
// cycles at vertices in creation order and folding coincidences. Vertices
// are only identified when the relator forces it.
class CosetSearch {
 public:
  CosetSearch(const SubgroupGraph& graph, std::size_t genus)
      : slots_(4 * genus), relator_(relator(genus)) {
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) add_vertex();
    for (const auto& e : graph.edges()) define(e.source, Letter(e.generator, 1), e.target);
    settle();
  }

  std::size_t add_path(const Word& u) {
    std::size_t v = 0;
    for (Letter x : u.letters()) {
      auto next = follow(v, x);
      if (!next) {
        next = add_vertex();
        define(v, x, *next);
      }
      v = *next;
    }
    return v;
  }

  // Sews relators until `target` meets the basepoint or the cap is hit.
  bool reaches_base(std::size_t target, std::size_t max_vertices) {
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(target) == find(0)) return true;
      if (find(v) != v) continue;
      for (std::size_t rot = 0; rot < relator_.size() && find(v) == v; ++rot) {
        if (parent_.size() >= max_vertices) return false;
        sew(v, rot);
        settle();
      }
    }
    return find(target) == find(0);
  }

 private:
  std::size_t slots_;
  Word relator_;
  std::vector<std::vector<long>> adj_;
  std::vector<std::size_t> parent_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;

  std::size_t add_vertex() {
    adj_.emplace_back(slots_, -1);
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  std::optional<std::size_t> follow(std::size_t v, Letter x) {
    long t = adj_[find(v)][x.order_key()];
    if (t < 0) return std::nullopt;
    return find(static_cast<std::size_t>(t));
  }

  void set_edge(std::size_t v, std::uint32_t key, std::size_t w) {
    long& slot = adj_[v][key];
    if (slot < 0)
      slot = static_cast<long>(w);
    else if (find(static_cast<std::size_t>(slot)) != w)
      pending_.push_back({find(static_cast<std::size_t>(slot)), w});
  }

  void define(std::size_t v, Letter x, std::size_t w) {
    v = find(v);
    w = find(w);
    set_edge(v, x.order_key(), w);
    set_edge(w, x.inverse().order_key(), v);
  }

  void settle() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent_[b] = a;
      for (std::uint32_t key = 0; key < slots_; ++key) {
        long t = adj_[b][key];
        if (t >= 0) set_edge(a, key, find(static_cast<std::size_t>(t)));
      }
    }
  }

  // Closes the relator rotation starting at `rot` as a loop at v.
  void sew(std::size_t v, std::size_t rot) {
    const std::size_t n = relator_.size();
    auto letter = [&](std::size_t i) { return relator_[(rot + i) % n]; };
    std::size_t f = v, i = 0;
    while (true) {
      while (i < n) {
        auto next = follow(f, letter(i));
        if (!next) break;
        f = *next;
        ++i;
      }
      if (i == n) {
        if (find(f) != find(v)) pending_.push_back({f, v});
        return;
      }
      std::size_t b = find(v);
      std::size_t j = n;
      while (j > i) {
        auto prev = follow(b, letter(j - 1).inverse());
        if (!prev) break;
        b = *prev;
        --j;
      }
      if (j == i) {
        if (find(f) != find(b)) pending_.push_back({f, b});
        return;
      }
      if (j == i + 1) {
        define(f, letter(i), b);
        return;
      }
      std::size_t w = add_vertex();
      define(f, letter(i), w);
      f = w;
      ++i;
    }
  }
};

}  // namespace

bool surface_member_search(const SubgroupGraph& graph, const Word& u, std::size_t genus, std::size_t max_vertices) {
  if (member(graph, u)) return true;
  CosetSearch search(graph, genus);
  std::size_t end = search.add_path(u);
  return search.reaches_base(end, max_vertices);
}

std::string CertificateReport::summary() const {
  std::string s = verified_fixed ? "verified-fixed" : "unverified";
  if (brute_checked_to) {
    s += ", completeness brute-checked(" + std::to_string(*brute_checked_to) + "): " +
         std::to_string(fixed_words_seen) + " fixed words";
    if (!outside.empty()) s += ", " + std::to_string(outside.size()) + " outside the certificate";
  }
  return s;
}

CertificateReport validate_certificate(const AlphaSpec& spec, const Ambient& ambient,
                                       std::optional<std::size_t> brute_length) {
  if (!spec.fix) throw CertificateError("no Fix(alpha) certificate supplied");
  const std::size_t n = ambient.word_rank();
  if (spec.fix->whole_group) {
    for (std::uint32_t i = 1; i <= n; ++i)
      if (!words_equal(ambient, spec.images[i - 1], Word::generator(n, i)))
        throw CertificateError("certificate claims Fix(alpha) is everything, but generator " +
                               to_string(Word::generator(n, i), ambient.alphabet()) + " is moved");
  } else {
    for (const auto& w : spec.fix->basis) {
      if (w.rank() != n) throw CertificateError("certificate word over the wrong alphabet");
      if (!words_equal(ambient, apply_map(spec.images, w), w))
        throw CertificateError("certificate word " + to_string(w, ambient.alphabet()) + " is not fixed by alpha");
    }
  }
  CertificateReport report;
  report.verified_fixed = true;
  if (!brute_length) return report;
  Container container(ambient, *spec.fix);
  FixedWordQuery q{spec.images, ambient.genus(), *brute_length};
  auto fixed = fixed_words_parallel(q);
  report.brute_checked_to = *brute_length;
  report.fixed_words_seen = fixed.size();
  for (const auto& w : fixed)
    if (!container.contains(w)) report.outside.push_back(w);
  return report;
}

}  // namespace fixsub
