#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fixsub/intlat.hpp"
#include "fixsub/iso_type.hpp"
#include "fixsub/stallings.hpp"
#include "fixsub/words.hpp"

namespace fixsub {

enum class AmbientKind { free_times_abelian, surface_times_abelian };

// F_g x Z^k or pi_1(Sigma_g) x Z^k.
struct Ambient {
  AmbientKind kind = AmbientKind::free_times_abelian;
  std::size_t g = 2;
  std::size_t k = 0;

  static Ambient free(std::size_t g, std::size_t k);
  static Ambient surface(std::size_t g, std::size_t k);

  bool is_surface() const { return kind == AmbientKind::surface_times_abelian; }
  // Letters in the word factor: g, or 2g for surfaces.
  std::size_t word_rank() const { return is_surface() ? 2 * g : g; }
  Alphabet alphabet() const { return is_surface() ? Alphabet::surface : Alphabet::free; }
  std::optional<std::size_t> genus() const {
    return is_surface() ? std::optional<std::size_t>(g) : std::nullopt;
  }
  Ambient with_k(std::size_t new_k) const { return {kind, g, new_k}; }
  void validate() const;

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

// "free:g=3,k=2" / "surface:g=2,k=1".
std::string to_string(const Ambient& a);
Ambient parse_ambient(std::string_view text);

struct GroupElement {
  Word u;
  IntVector v;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(const Ambient& a);
GroupElement multiply(const Ambient& a, const GroupElement& x, const GroupElement& y);
GroupElement invert(const Ambient& a, const GroupElement& x);
// Word parts compared in the surface group for surface ambients.
bool element_equal(const Ambient& a, const GroupElement& x, const GroupElement& y);
std::string to_string(const Ambient& a, const GroupElement& x);

// What is known about Fix(alpha): everything, or a free basis.
struct FixCertificate {
  bool whole_group = false;
  std::vector<Word> basis;

  static FixCertificate whole() { return {true, {}}; }
  static FixCertificate free_basis(std::vector<Word> words) { return {false, std::move(words)}; }
  friend bool operator==(const FixCertificate&, const FixCertificate&) = default;
};

struct AlphaSpec {
  std::vector<Word> images;
  std::optional<FixCertificate> fix;
  // False when completeness of the certificate is only conjectural; only
  // recorded, never used to skip checks.
  bool certified_complete = true;
  friend bool operator==(const AlphaSpec&, const AlphaSpec&) = default;
};

// (u, v) |-> (alpha(u), Gamma ab(u) + L v).
struct StdEndo {
  Ambient ambient;
  AlphaSpec alpha;
  IntMatrix gamma;  // k x word_rank
  IntMatrix L;      // k x k
  bool claims_automorphism = false;
  std::optional<IsoType> expected_iso;

  // Shapes, alphabet, relator well-definedness, certificate words fixed.
  void validate() const;
  friend bool operator==(const StdEndo&, const StdEndo&) = default;
};

StdEndo identity_endo(const Ambient& a);
IntVector gamma_of(const StdEndo& e, const Word& u);
GroupElement eval_endo(const StdEndo& e, const GroupElement& x);
// compose(E1, E2) = E1 after E2.
StdEndo compose(const StdEndo& e1, const StdEndo& e2);
// Both composites fix every generator of the ambient.
bool verify_automorphism(const StdEndo& e, const StdEndo& e_inv);
// Inverse (alpha^-1 u, L^-1 (v - gamma(alpha^-1 u))) given alpha^-1; absent
// when L is not invertible over the integers.
std::optional<StdEndo> formula_inverse(const StdEndo& e, std::vector<Word> alpha_inverse_images);
// Appends a Z^k' factor acted on by `extra`; Gamma gains zero rows.
StdEndo direct_sum(const StdEndo& e, const IntMatrix& extra);

// Columns are the abelianized images: Ab(alpha) as a word_rank square matrix.
IntMatrix abelianization_matrix(std::span<const Word> images);

// The certified Fix(alpha), normalized to a Stallings basis when free.
class Container {
 public:
  Container(const Ambient& a, const FixCertificate& cert);

  bool whole_group() const { return whole_; }
  const std::vector<Word>& basis() const { return basis_; }
  // Generators of the word factor when whole; free rank otherwise.
  std::size_t rank() const { return basis_.size(); }
  const SubgroupGraph& graph() const { return graph_; }

  // Exact for free ambients; for surfaces a bounded coset enumeration, so
  // false there means "no proof found".
  bool contains(const Word& u) const;

 private:
  Ambient ambient_;
  bool whole_ = false;
  std::vector<Word> basis_;
  SubgroupGraph graph_;
};

// Membership in the surface group of u in the image of a free subgroup of
// F_2g, by coset enumeration capped at max_vertices. True is a proof;
// false means no proof was found within the cap.
bool surface_member_search(const SubgroupGraph& graph, const Word& u, std::size_t genus,
                           std::size_t max_vertices = 20000);

struct CertificateReport {
  bool verified_fixed = false;
  std::optional<std::size_t> brute_checked_to;
  std::size_t fixed_words_seen = 0;
  std::vector<Word> outside;  // alpha-fixed words missing from the certificate

  bool complete() const { return outside.empty(); }
  std::string summary() const;
};

// Throws CertificateError if a certificate word is moved by alpha.
CertificateReport validate_certificate(const AlphaSpec& spec, const Ambient& ambient,
                                       std::optional<std::size_t> brute_length = std::nullopt);

}  // namespace fixsub
