#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fixsub/fatf.hpp"
#include "fixsub/intlat.hpp"
#include "fixsub/iso_type.hpp"
#include "fixsub/stallings.hpp"

namespace fixsub {

struct FixedLattice {
  std::size_t s = 0;
  std::vector<IntVector> basis;
};

// ker(L - I).
FixedLattice fixed_lattice(const IntMatrix& L);

enum class ProjectedTag { full_fix_alpha, finite_index_kernel, infinitely_generated, trivial };
std::string to_string(ProjectedTag t);

// h: container -> Z^k / im(I - L), u |-> [Gamma ab(u)].
class CongruenceMap {
 public:
  CongruenceMap(const IntMatrix& gamma, const IntMatrix& L);

  const CokernelStructure& quotient() const { return quotient_; }
  IntVector operator()(const Word& u) const;
  bool vanishes(const Word& u) const { return is_zero((*this)(u)); }
  // Whether every free coordinate of h(u) is zero.
  bool torsion(const Word& u) const;

 private:
  IntMatrix gamma_;
  CokernelStructure quotient_;
};

// p(Fix phi) inside the certified Fix(alpha).
struct ProjectedPart {
  ProjectedTag tag = ProjectedTag::trivial;
  std::optional<Container> container;
  std::size_t index = 1;            // meaningful for full / finite-index
  IsoType iso;                      // of the projected part alone
  // Finite-index kernel: coset graph over the container basis letters
  // (abstract free group of rank container.rank()).
  std::optional<SubgroupGraph> kernel_graph;
  // Free ambient, finitely generated case: Stallings graph in F_g.
  std::optional<SubgroupGraph> ambient_graph;
  // Generators of the projected part as ambient words (empty when
  // infinitely generated).
  std::vector<Word> generators;
  std::vector<std::string> notes;
};

ProjectedPart projected_fix(const FixCertificate& cert, const IntMatrix& gamma, const IntMatrix& L,
                            const Ambient& ambient, std::size_t max_vertices = kDefaultVertexGuard);

struct FixDescription {
  std::size_t s = 0;
  std::vector<IntVector> lattice_basis;
  ProjectedPart projected;
  IsoType iso;
  // Projected generators paired with v_u, then (1, lattice vector) pairs.
  std::vector<GroupElement> witnesses;
  std::vector<std::string> notes;
};

struct FixOptions {
  std::size_t max_vertices = kDefaultVertexGuard;
  // Lazily generated kernel elements when infinitely generated.
  std::size_t infinite_witnesses = 0;
};

FixDescription fix_subgroup(const StdEndo& e, const FixOptions& options = {});

// Canonical particular solution of (I - L) v = Gamma ab(u), if any.
std::optional<IntVector> particular_solution(const StdEndo& e, const Word& u);

// u^n w u^-n for n = 0, 1, -1, 2, -2, ... inside an infinitely generated
// projected part, each paired with its particular solution.
class KernelStream {
 public:
  KernelStream(const StdEndo& e, const ProjectedPart& p);
  GroupElement next();
  const Word& conjugator() const { return u_; }
  const Word& seed() const { return w_; }

 private:
  Word u_, w_;
  IntVector v_;
  long step_ = 0;
};

bool projected_member(const StdEndo& e, const ProjectedPart& p, const Word& u);

struct BruteFamily {
  Word u;
  IntVector particular;
};

struct BruteResult {
  std::vector<BruteFamily> families;  // alpha-fixed words with a solvable system
  std::vector<IntVector> lattice;
  std::size_t alpha_fixed_words = 0;
  std::size_t words_visited = 0;
};

struct BruteOptions {
  bool parallel = true;
  std::size_t max_words = 20'000'000;
};

BruteResult brute_fixed_elements(const StdEndo& e, std::size_t max_len, const BruteOptions& options = {});

// index <= |det(L - I)|^r for finite-index kernels.
bool index_bound_check(const StdEndo& e, const FixDescription& desc);

struct OracleReport {
  std::size_t words_checked = 0;
  std::size_t fixed_elements = 0;
  std::size_t witnesses_checked = 0;
  std::vector<std::string> discrepancies;
  bool agree() const { return discrepancies.empty(); }
};

OracleReport check_oracle_agreement(const StdEndo& e, const FixDescription& desc, std::size_t max_len,
                                    const BruteOptions& options = {});

}  // namespace fixsub
