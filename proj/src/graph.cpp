#include "totdom/graph.hpp"

#include <algorithm>
#include <sstream>

namespace totdom {

void VertexSet::check_order(std::size_t order) {
  if (order > Bitset::kBits)
    throw GraphError("order " + std::to_string(order) + " exceeds the supported maximum of " +
                     std::to_string(Bitset::kBits));
}

VertexSet::VertexSet(std::size_t order, std::span<const Vertex> members) : order_(order) {
  check_order(order);
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t order, const Bitset& bits) : order_(order), bits_(bits) {
  check_order(order);
  if (!bits.is_subset_of(Bitset::prefix(order))) throw GraphError("vertex set has members beyond its order");
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= order_)
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
  bits_.set(static_cast<std::size_t>(v));
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= order_)
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
  bits_.reset(static_cast<std::size_t>(v));
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_same_order(const VertexSet& o) const {
  if (o.order_ != order_) throw GraphError("vertex sets belong to graphs of different order");
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_order(o);
  bits_ |= o.bits_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_order(o);
  bits_ &= o.bits_;
  return *this;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out << ',';
    out << v;
    first = false;
  });
  out << '}';
  return out.str();
}

Graph::Graph(std::size_t n) {
  if (n > kMaxOrder)
    throw GraphError("order " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxOrder));
  rows_.assign(n, Bitset{});
  recompute_cache();
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(static_cast<long>(n) - 1));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    g.rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  g.recompute_cache();
  return g;
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  const std::size_t n = rows.size();
  Graph g(n);
  const Bitset inside = Bitset::prefix(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(inside)) throw GraphError("adjacency row has bits beyond the order");
    if (rows[v].test(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    rows[v].for_each([&](std::size_t u) {
      if (!rows[u].test(v)) throw GraphError("adjacency rows are not symmetric");
    });
  }
  g.rows_ = std::move(rows);
  g.recompute_cache();
  return g;
}

void Graph::recompute_cache() {
  std::size_t total = 0;
  max_degree_ = 0;
  min_degree_ = rows_.empty() ? 0 : Bitset::kBits;
  for (const auto& r : rows_) {
    const std::size_t d = r.count();
    total += d;
    max_degree_ = std::max(max_degree_, d);
    min_degree_ = std::min(min_degree_, d);
  }
  size_ = total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::size_t u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(rows_.size());
  for (const auto& r : rows_) d.push_back(r.count());
  return d;
}

Relabeled induce(const Graph& g, const VertexSet& keep) {
  if (keep.order() != g.order()) throw GraphError("vertex set does not belong to this graph");
  Relabeled out;
  out.to_new.assign(g.order(), -1);
  keep.for_each([&](Vertex v) {
    out.to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_old.size());
    out.to_old.push_back(v);
  });
  std::vector<Bitset> rows(out.to_old.size());
  for (std::size_t i = 0; i < out.to_old.size(); ++i) {
    (g.row(out.to_old[i]) & keep.bits()).for_each([&](std::size_t u) {
      rows[i].set(static_cast<std::size_t>(out.to_new[u]));
    });
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

Relabeled delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.order() != g.order()) throw GraphError("vertex set does not belong to this graph");
  return induce(g, removed.complement());
}

Relabeled contract(const Graph& g, Vertex x, Vertex y) {
  const auto n = g.order();
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n)
    throw GraphError("contraction endpoint out of range");
  if (x == y) throw GraphError("cannot contract a vertex with itself");
  const Vertex keep = std::min(x, y);
  const Vertex drop = std::max(x, y);

  Relabeled out;
  out.to_new.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<Vertex>(v) == drop) continue;
    out.to_new[v] = static_cast<Vertex>(out.to_old.size());
    out.to_old.push_back(static_cast<Vertex>(v));
  }
  out.to_new[static_cast<std::size_t>(drop)] = out.to_new[static_cast<std::size_t>(keep)];

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const Vertex a = out.to_new[static_cast<std::size_t>(u)];
    const Vertex b = out.to_new[static_cast<std::size_t>(v)];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph::from_edges(n - 1, edges);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const auto n = g.order();
  if (perm.size() != n) throw GraphError("permutation length does not match graph order");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      throw GraphError("relabeling map is not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Bitset> rows(n);
  for (std::size_t v = 0; v < n; ++v)
    g.row(static_cast<Vertex>(v)).for_each([&](std::size_t u) {
      rows[static_cast<std::size_t>(perm[v])].set(static_cast<std::size_t>(perm[u]));
    });
  return Graph::from_rows(std::move(rows));
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return Graph::from_edges(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

namespace {

Bitset component_of(const Graph& g, std::size_t start) {
  Bitset seen = Bitset::single(start);
  Bitset frontier = seen;
  while (frontier.any()) {
    Bitset next;
    frontier.for_each([&](std::size_t v) { next |= g.row(static_cast<Vertex>(v)); });
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return component_of(g, 0).count() == g.order();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Bitset remaining = Bitset::prefix(g.order());
  while (remaining.any()) {
    const Bitset comp = component_of(g, remaining.first());
    out.emplace_back(g.order(), comp);
    remaining -= comp;
  }
  return out;
}

}  // namespace totdom
