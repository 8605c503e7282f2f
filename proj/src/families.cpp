#include "totdom/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace totdom {

std::string to_string(const Role& r) {
  switch (r.kind) {
    case RoleKind::A: return "a" + std::to_string(r.index);
    case RoleKind::B: return "b" + std::to_string(r.index);
    case RoleKind::C: return "c" + std::to_string(r.index);
    case RoleKind::D: return "d" + std::to_string(r.index);
    case RoleKind::SubdivV: return "v" + std::to_string(r.index);
    case RoleKind::SubdivU: return "u" + std::to_string(r.index);
    case RoleKind::Hub: return "hub" + std::to_string(r.index);
    case RoleKind::Mid: return "mid" + std::to_string(r.index);
    case RoleKind::Leaf: return "leaf" + std::to_string(r.index);
    case RoleKind::Outer: return "outer" + std::to_string(r.index);
    case RoleKind::Inner: return "inner" + std::to_string(r.index);
    case RoleKind::Cycle: return "cycle" + std::to_string(r.index);
  }
  return "?";
}

std::string to_string(Family f) {
  switch (f) {
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::GP16: return "GP16";
    case Family::F: return "F";
    case Family::L: return "L";
    case Family::Corona: return "corona";
  }
  return "?";
}

std::optional<Vertex> FamilyMember::vertex_of(Role role) const {
  const auto it = std::find(roles.begin(), roles.end(), role);
  if (it == roles.end()) return std::nullopt;
  return static_cast<Vertex>(it - roles.begin());
}

namespace {

std::vector<Edge> base_edges(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= k; ++i) {
    e.emplace_back(label_a(k, i), label_b(k, i));
    e.emplace_back(label_c(k, i), label_d(k, i));
    if (i < k) {
      e.emplace_back(label_b(k, i), label_a(k, i + 1));
      e.emplace_back(label_d(k, i), label_c(k, i + 1));
    }
    e.emplace_back(label_a(k, i), label_d(k, i));
    e.emplace_back(label_b(k, i), label_c(k, i));
  }
  return e;
}

std::vector<Role> base_roles(std::size_t k) {
  std::vector<Role> roles;
  for (RoleKind kind : {RoleKind::A, RoleKind::B, RoleKind::C, RoleKind::D})
    for (std::size_t i = 1; i <= k; ++i) roles.push_back({kind, static_cast<int>(i)});
  return roles;
}

// Replaces edge xy by a path x s_1 s_2 s_3 y on fresh labels.
void subdivide_thrice(std::vector<Edge>& edges, std::vector<Role>& roles, Vertex x, Vertex y, RoleKind kind) {
  std::erase_if(edges, [&](const Edge& e) {
    return (e.first == x && e.second == y) || (e.first == y && e.second == x);
  });
  const auto s = static_cast<Vertex>(roles.size());
  for (int j = 1; j <= 3; ++j) roles.push_back({kind, j});
  edges.emplace_back(x, s);
  edges.emplace_back(s, s + 1);
  edges.emplace_back(s + 1, s + 2);
  edges.emplace_back(s + 2, y);
}

FamilyMember bare_cycle(std::size_t n, Family family) {
  FamilyMember m{gen_cycle(n), family, 0, {}};
  for (std::size_t i = 0; i < n; ++i) m.roles.push_back({RoleKind::Cycle, static_cast<int>(i)});
  return m;
}

}  // namespace

FamilyMember gen_G(std::size_t k) {
  if (k < 1) throw std::invalid_argument("G_k needs k >= 1");
  auto edges = base_edges(k);
  edges.emplace_back(label_a(k, 1), label_c(k, 1));
  edges.emplace_back(label_b(k, k), label_d(k, k));
  return {Graph::from_edges(4 * k, edges), Family::G, k, base_roles(k)};
}

FamilyMember gen_H(std::size_t k) {
  if (k < 2) throw std::invalid_argument("H_k needs k >= 2");
  auto edges = base_edges(k);
  edges.emplace_back(label_a(k, 1), label_b(k, k));
  edges.emplace_back(label_c(k, 1), label_d(k, k));
  return {Graph::from_edges(4 * k, edges), Family::H, k, base_roles(k)};
}

FamilyMember gen_GP16() {
  std::vector<Edge> edges;
  std::vector<Role> roles;
  for (int i = 0; i < 8; ++i) roles.push_back({RoleKind::Outer, i});
  for (int i = 0; i < 8; ++i) roles.push_back({RoleKind::Inner, i});
  for (int i = 0; i < 8; ++i) {
    edges.emplace_back(i, (i + 1) % 8);
    edges.emplace_back(i, 8 + i);
    edges.emplace_back(8 + i, 8 + (i + 3) % 8);
  }
  return {Graph::from_edges(16, edges), Family::GP16, 0, roles};
}

FamilyMember gen_F(std::size_t k) {
  if (k == 0) return bare_cycle(3, Family::F);
  auto edges = base_edges(k);
  edges.emplace_back(label_a(k, 1), label_c(k, 1));
  edges.emplace_back(label_b(k, k), label_d(k, k));
  auto roles = base_roles(k);
  subdivide_thrice(edges, roles, label_a(k, 1), label_c(k, 1), RoleKind::SubdivV);
  return {Graph::from_edges(roles.size(), edges), Family::F, k, roles};
}

FamilyMember gen_L(std::size_t k) {
  if (k == 0) return bare_cycle(6, Family::L);
  auto edges = base_edges(k);
  edges.emplace_back(label_a(k, 1), label_c(k, 1));
  edges.emplace_back(label_b(k, k), label_d(k, k));
  auto roles = base_roles(k);
  subdivide_thrice(edges, roles, label_a(k, 1), label_c(k, 1), RoleKind::SubdivV);
  subdivide_thrice(edges, roles, label_b(k, k), label_d(k, k), RoleKind::SubdivU);
  return {Graph::from_edges(roles.size(), edges), Family::L, k, roles};
}

FamilyMember two_corona(const Graph& h) {
  const std::size_t n = h.order();
  if (n < 1) throw std::invalid_argument("2-corona needs a non-empty graph");
  auto edges = h.edges();
  std::vector<Role> roles(3 * n, Role{RoleKind::Hub, 0});
  for (std::size_t i = 0; i < n; ++i) {
    const auto hub = static_cast<Vertex>(i);
    const auto mid = static_cast<Vertex>(n + i);
    const auto leaf = static_cast<Vertex>(2 * n + i);
    edges.emplace_back(hub, mid);
    edges.emplace_back(mid, leaf);
    roles[i] = {RoleKind::Hub, static_cast<int>(i)};
    roles[n + i] = {RoleKind::Mid, static_cast<int>(i)};
    roles[2 * n + i] = {RoleKind::Leaf, static_cast<int>(i)};
  }
  return {Graph::from_edges(3 * n, edges), Family::Corona, n, roles};
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph gen_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, edges);
}

Graph gen_complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, edges);
}

}  // namespace totdom
