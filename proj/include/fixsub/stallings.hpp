#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fixsub/integer.hpp"
#include "fixsub/words.hpp"

namespace fixsub {

// Folded core graph of a finitely generated subgroup of F_r. Vertices are
// numbered in breadth-first order from the basepoint 0, exploring letters
// in alphabet order, so isomorphic graphs compare equal.
class SubgroupGraph {
 public:
  struct Edge {
    std::size_t source;
    std::uint32_t generator;
    std::size_t target;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  SubgroupGraph() = default;
  // Takes ownership of a folded adjacency table: slot 2(g-1) is the
  // outgoing g-edge, slot 2(g-1)+1 the incoming one; -1 when absent.
  SubgroupGraph(std::size_t rank, std::vector<std::vector<long>> adjacency);

  std::size_t rank() const { return rank_; }
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  std::size_t basepoint() const { return 0; }
  std::optional<std::size_t> follow(std::size_t vertex, Letter x) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const SubgroupGraph&, const SubgroupGraph&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::vector<long>> adj_;
};

SubgroupGraph graph_from_basis(std::span<const Word> words, std::size_t rank);
bool member(const SubgroupGraph& g, const Word& w);
std::size_t graph_rank(const SubgroupGraph& g);
std::vector<Word> basis_of(const SubgroupGraph& g);
std::optional<std::size_t> index_of(const SubgroupGraph& g);
std::string dump(const SubgroupGraph& g);

// Finite abelian group given by invariant factors, elements as coordinate
// tuples reduced into 0..d-1.
class FiniteAbelianGroup {
 public:
  using Element = IntVector;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(IntVector factors);

  const IntVector& factors() const { return factors_; }
  Integer order() const;
  Element zero() const { return zero_vector(factors_.size()); }
  Element normalize(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;

 private:
  IntVector factors_;
};

// Order of the subgroup generated by the given elements.
Integer generated_order(const FiniteAbelianGroup& group,
                        std::span<const FiniteAbelianGroup::Element> elements);

inline constexpr std::size_t kDefaultVertexGuard = 1'000'000;

// Coset graph of the kernel of F_r -> group, generator i |-> images[i-1].
// Vertices are the elements of the generated subgroup only.
SubgroupGraph schreier_kernel_graph(std::size_t rank, const FiniteAbelianGroup& group,
                                    std::span<const FiniteAbelianGroup::Element> images,
                                    std::size_t max_vertices = kDefaultVertexGuard);

}  // namespace fixsub
