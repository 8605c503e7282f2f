#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "totdom/bitset.hpp"

namespace totdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph construction requests (bad endpoints, loops, order too large).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of the vertices of a graph of fixed order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t order) : order_(order) { check_order(order); }
  VertexSet(std::size_t order, std::span<const Vertex> members);
  VertexSet(std::size_t order, std::initializer_list<Vertex> members)
      : VertexSet(order, std::span<const Vertex>(members.begin(), members.size())) {}
  /// Wraps raw bits; bits at or above `order` must be clear.
  VertexSet(std::size_t order, const Bitset& bits);

  static VertexSet all(std::size_t order) { return VertexSet(order, Bitset::prefix(order)); }

  std::size_t order() const { return order_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < order_ && bits_.test(static_cast<std::size_t>(v));
  }
  void insert(Vertex v);
  void erase(Vertex v);

  const Bitset& bits() const { return bits_; }
  std::vector<Vertex> to_vector() const;
  VertexSet complement() const { return VertexSet(order_, Bitset::prefix(order_) - bits_); }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename F>
  void for_each(F&& f) const {
    bits_.for_each([&](std::size_t i) { f(static_cast<Vertex>(i)); });
  }

 private:
  static void check_order(std::size_t order);
  void check_same_order(const VertexSet& o) const;

  std::size_t order_ = 0;
  Bitset bits_;
};

std::string to_string(const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Graphs are immutable values. Every derived graph (deletion, contraction,
/// induction, relabeling) is a new Graph, with a label map when labels move.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = Bitset::kBits;

  Graph() = default;
  /// Edgeless graph of order n.
  explicit Graph(std::size_t n);

  /// Builds a simple graph; duplicate pairs collapse. Throws GraphError on
  /// out-of-range endpoints or self-loops.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from adjacency rows; rows must be symmetric and irreflexive.
  static Graph from_rows(std::vector<Bitset> rows);

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const { return size_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t min_degree() const { return min_degree_; }

  std::size_t degree(Vertex v) const { return row(v).count(); }
  bool adjacent(Vertex u, Vertex v) const { return row(u).test(static_cast<std::size_t>(v)); }
  const Bitset& row(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
  VertexSet neighbors(Vertex v) const { return VertexSet(order(), row(v)); }
  /// N[v].
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }
  VertexSet vertices() const { return VertexSet::all(order()); }

  /// Edges (u,v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void recompute_cache();

  std::vector<Bitset> rows_;
  std::size_t size_ = 0;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
};

/// A derived graph together with the label correspondence to its parent.
struct Relabeled {
  Graph graph;
  /// Parent label of each new vertex.
  std::vector<Vertex> to_old;
  /// New label of each parent vertex, -1 when the vertex was removed.
  std::vector<Vertex> to_new;
};

/// G[S], survivors relabeled 0.. in ascending parent-label order.
Relabeled induce(const Graph& g, const VertexSet& keep);

/// G - S, survivors relabeled 0.. in ascending parent-label order.
Relabeled delete_vertices(const Graph& g, const VertexSet& removed);

/// Replaces x and y by one vertex adjacent to (N(x) ∪ N(y)) \ {x, y}. The merged
/// vertex takes the slot of min(x, y); max(x, y) is removed and later labels
/// shift down by one. Both x and y map to the merged label in `to_new`;
/// `to_old` of the merged vertex holds min(x, y).
Relabeled contract(const Graph& g, Vertex x, Vertex y);

/// pi(G): vertex v of g becomes perm[v] in the result. perm must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// G with the edge uv added (no-op when present).
Graph add_edge(const Graph& g, Vertex u, Vertex v);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

}  // namespace totdom
