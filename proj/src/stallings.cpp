#include "fixsub/stallings.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fixsub/errors.hpp"
#include "fixsub/intlat.hpp"

namespace fixsub {

namespace {

using Table = std::vector<std::vector<long>>;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller index as root so the basepoint stays 0.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct RawEdge {
  std::size_t source;
  std::uint32_t generator;
  std::size_t target;
};

// Removes dangling trees and renumbers vertices breadth-first from 0.
Table trim_and_canonicalize(std::size_t rank, Table adj) {
  const std::size_t slots = 2 * rank;
  const std::size_t n = adj.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (long t : adj[v])
      if (t >= 0) ++degree[v];
  std::deque<std::size_t> queue;
  for (std::size_t v = 1; v < n; ++v)
    if (degree[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (!alive[v] || degree[v] > 1) continue;
    alive[v] = false;
    for (std::size_t s = 0; s < slots; ++s) {
      long t = adj[v][s];
      if (t < 0) continue;
      adj[v][s] = -1;
      std::size_t w = static_cast<std::size_t>(t);
      adj[w][s ^ 1] = -1;
      --degree[w];
      if (w != 0 && alive[w] && degree[w] <= 1) queue.push_back(w);
    }
    degree[v] = 0;
  }

  std::vector<long> label(n, -1);
  std::vector<std::size_t> order{0};
  label[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < slots; ++s) {
      long t = adj[order[i]][s];
      if (t >= 0 && label[t] < 0) {
        label[t] = static_cast<long>(order.size());
        order.push_back(static_cast<std::size_t>(t));
      }
    }
  Table out(order.size(), std::vector<long>(slots, -1));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < slots; ++s) {
      long t = adj[order[i]][s];
      if (t >= 0) out[i][s] = label[t];
    }
  return out;
}

Table fold(std::size_t rank, std::size_t vertex_count, const std::vector<RawEdge>& edges) {
  const std::size_t slots = 2 * rank;
  DisjointSets sets(vertex_count);
  for (bool changed = true; changed;) {
    changed = false;
    Table adj(vertex_count, std::vector<long>(slots, -1));
    for (const auto& e : edges) {
      std::size_t s = sets.find(e.source), t = sets.find(e.target);
      std::size_t out_slot = 2 * (e.generator - 1), in_slot = out_slot + 1;
      long& fwd = adj[s][out_slot];
      if (fwd >= 0 && sets.find(static_cast<std::size_t>(fwd)) != t) {
        changed |= sets.unite(static_cast<std::size_t>(fwd), t);
        t = sets.find(t);
        s = sets.find(s);
      }
      adj[s][out_slot] = static_cast<long>(t);
      long& back = adj[t][in_slot];
      if (back >= 0 && sets.find(static_cast<std::size_t>(back)) != s) {
        changed |= sets.unite(static_cast<std::size_t>(back), s);
        s = sets.find(s);
      }
      adj[sets.find(t)][in_slot] = static_cast<long>(s);
    }
    if (!changed) {
      // Keep only root rows; non-root rows are empty by construction.
      return adj;
    }
  }
  return {};
}

}  // namespace

SubgroupGraph::SubgroupGraph(std::size_t rank, Table adjacency)
    : rank_(rank), adj_(std::move(adjacency)) {
  if (adj_.empty()) adj_.assign(1, std::vector<long>(2 * rank_, -1));
}

std::size_t SubgroupGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : adj_)
    for (std::size_t s = 0; s < row.size(); s += 2)
      if (row[s] >= 0) ++n;
  return n;
}

std::optional<std::size_t> SubgroupGraph::follow(std::size_t vertex, Letter x) const {
  long t = adj_[vertex][x.order_key()];
  if (t < 0) return std::nullopt;
  return static_cast<std::size_t>(t);
}

std::vector<SubgroupGraph::Edge> SubgroupGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    for (std::size_t s = 0; s < adj_[v].size(); s += 2)
      if (adj_[v][s] >= 0)
        out.push_back({v, static_cast<std::uint32_t>(s / 2 + 1), static_cast<std::size_t>(adj_[v][s])});
  return out;
}

SubgroupGraph graph_from_basis(std::span<const Word> words, std::size_t rank) {
  std::vector<RawEdge> edges;
  std::size_t next = 1;
  for (const auto& w : words) {
    if (w.rank() != rank)
      throw std::invalid_argument("graph_from_basis: word rank " + std::to_string(w.rank()) +
                                  " differs from ambient rank " + std::to_string(rank));
    if (w.empty()) continue;
    std::size_t at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t to = i + 1 == w.size() ? 0 : next++;
      Letter x = w[i];
      if (x.sign() > 0)
        edges.push_back({at, x.generator(), to});
      else
        edges.push_back({to, x.generator(), at});
      at = to;
    }
  }
  Table adj = fold(rank, next, edges);
  // Drop vertices merged away (rows with no edges other than the basepoint are
  // handled by trimming; unreachable rows vanish in the relabelling).
  return SubgroupGraph(rank, trim_and_canonicalize(rank, std::move(adj)));
}

bool member(const SubgroupGraph& g, const Word& w) {
  if (w.rank() != g.rank()) throw std::invalid_argument("member: rank mismatch");
  std::size_t at = g.basepoint();
  for (Letter x : w.letters()) {
    auto next = g.follow(at, x);
    if (!next) return false;
    at = *next;
  }
  return at == g.basepoint();
}

std::size_t graph_rank(const SubgroupGraph& g) {
  return g.edge_count() + 1 - g.vertex_count();
}

std::vector<Word> basis_of(const SubgroupGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Word> path(n, Word(g.rank()));
  std::vector<bool> seen(n, false);
  // tree[v] = (parent, slot) that discovered v
  std::vector<std::pair<long, std::uint32_t>> tree(n, {-1, 0});
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t u = order[i];
    for (std::uint32_t key = 0; key < 2 * g.rank(); ++key) {
      Letter x = Letter::from_order_key(key);
      auto t = g.follow(u, x);
      if (!t || seen[*t]) continue;
      seen[*t] = true;
      tree[*t] = {static_cast<long>(u), key};
      path[*t] = multiply(path[u], Word::generator(g.rank(), x.generator(), x.sign()));
      order.push_back(*t);
    }
  }
  std::vector<Word> out;
  for (const auto& e : g.edges()) {
    std::uint32_t fwd = 2 * (e.generator - 1), bwd = fwd + 1;
    bool is_tree = (tree[e.target].first == static_cast<long>(e.source) && tree[e.target].second == fwd) ||
                   (tree[e.source].first == static_cast<long>(e.target) && tree[e.source].second == bwd);
    if (is_tree) continue;
    Word w = multiply(multiply(path[e.source], Word::generator(g.rank(), e.generator)), invert(path[e.target]));
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<std::size_t> index_of(const SubgroupGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::uint32_t key = 0; key < 2 * g.rank(); ++key)
      if (!g.follow(v, Letter::from_order_key(key))) return std::nullopt;
  return g.vertex_count();
}

std::string dump(const SubgroupGraph& g) {
  std::ostringstream out;
  for (const auto& e : g.edges()) out << e.source << ' ' << e.generator << ' ' << e.target << '\n';
  return out.str();
}

FiniteAbelianGroup::FiniteAbelianGroup(IntVector factors) : factors_(std::move(factors)) {
  for (const auto& d : factors_)
    if (d < 2) throw std::invalid_argument("invariant factor below 2");
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::normalize(const Element& x) const {
  if (x.size() != factors_.size()) throw std::invalid_argument("element length mismatch");
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    mpz_fdiv_r(out[i].get_mpz_t(), x[i].get_mpz_t(), factors_[i].get_mpz_t());
  return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& x, const Element& y) const {
  return normalize(x + y);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::negate(const Element& x) const {
  return normalize(zero() - x);
}

Integer generated_order(const FiniteAbelianGroup& group,
                        std::span<const FiniteAbelianGroup::Element> elements) {
  const std::size_t t = group.factors().size();
  if (t == 0) return Integer(1);
  std::vector<IntVector> cols(elements.begin(), elements.end());
  for (std::size_t i = 0; i < t; ++i) {
    IntVector e = zero_vector(t);
    e[i] = group.factors()[i];
    cols.push_back(std::move(e));
  }
  auto snf = smith_normal_form(IntMatrix::from_columns(t, cols));
  Integer quotient = 1;
  for (std::size_t i = 0; i < snf.rank; ++i) quotient *= snf.D.at(i, i);
  return group.order() / quotient;
}

SubgroupGraph schreier_kernel_graph(std::size_t rank, const FiniteAbelianGroup& group,
                                    std::span<const FiniteAbelianGroup::Element> images,
                                    std::size_t max_vertices) {
  if (images.size() != rank) throw std::invalid_argument("schreier_kernel_graph: need one image per generator");
  std::vector<FiniteAbelianGroup::Element> img, neg;
  for (const auto& x : images) {
    img.push_back(group.normalize(x));
    neg.push_back(group.negate(img.back()));
  }
  Integer order = generated_order(group, img);
  if (order > max_vertices)
    throw BudgetExceeded("coset graph needs " + order.get_str() + " vertices, above the limit of " +
                         std::to_string(max_vertices));
  std::map<FiniteAbelianGroup::Element, std::size_t> index;
  std::vector<FiniteAbelianGroup::Element> elements{group.zero()};
  index.emplace(group.zero(), 0);
  Table adj;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    adj.emplace_back(2 * rank, -1);
    for (std::uint32_t key = 0; key < 2 * rank; ++key) {
      const auto& step = key % 2 ? neg[key / 2] : img[key / 2];
      auto next = group.add(elements[i], step);
      auto [it, fresh] = index.emplace(next, elements.size());
      if (fresh) elements.push_back(std::move(next));
      adj[i][key] = static_cast<long>(it->second);
    }
  }
  if (Integer(elements.size()) != order)
    throw std::logic_error("coset enumeration disagrees with the computed image order");
  return SubgroupGraph(rank, trim_and_canonicalize(rank, std::move(adj)));
}

}  // namespace fixsub
