#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "totdom/graph.hpp"

namespace totdom {

enum class RoleKind {
  A,        // a_i
  B,        // b_i
  C,        // c_i
  D,        // d_i
  SubdivV,  // v_j on the subdivided a_1c_1
  SubdivU,  // u_j on the subdivided b_kd_k
  Hub,      // vertex of H in H∘P_2
  Mid,      // middle vertex of the attached path
  Leaf,     // end of the attached path
  Outer,    // GP_16 outer cycle u_i
  Inner,    // GP_16 inner vertex w_i
  Cycle,    // position on a bare cycle (C_3 = F_0, C_6 = L_0)
};

struct Role {
  RoleKind kind;
  int index;  // 1-based for a/b/c/d/v/u, 0-based for the others

  friend bool operator==(const Role&, const Role&) = default;
};

std::string to_string(const Role& r);

enum class Family { G, H, GP16, F, L, Corona };

std::string to_string(Family f);

/// A generated family member together with the role of every vertex.
struct FamilyMember {
  Graph graph;
  Family family;
  std::size_t k = 0;
  std::vector<Role> roles;  // indexed by vertex

  /// The vertex carrying `role`, if any.
  std::optional<Vertex> vertex_of(Role role) const;
};

// Base G_k layout shared by G_k, H_k, F_k, L_k: a_1..a_k, b_1..b_k, c_1..c_k,
// d_1..d_k at labels 0..4k-1; F_k appends v_1..v_3, L_k then appends u_1..u_3.
inline Vertex label_a(std::size_t /*k*/, std::size_t i) { return static_cast<Vertex>(i - 1); }
inline Vertex label_b(std::size_t k, std::size_t i) { return static_cast<Vertex>(k + i - 1); }
inline Vertex label_c(std::size_t k, std::size_t i) { return static_cast<Vertex>(2 * k + i - 1); }
inline Vertex label_d(std::size_t k, std::size_t i) { return static_cast<Vertex>(3 * k + i - 1); }

/// Cubic G_k of order 4k; G_1 = K_4.
FamilyMember gen_G(std::size_t k);
/// G_k with a_1c_1, b_kd_k replaced by a_1b_k, c_1d_k; k >= 2.
FamilyMember gen_H(std::size_t k);
/// GP(8,3): outer cycle u_0..u_7, spokes u_i w_i, inner edges w_i w_{i+3 mod 8}.
FamilyMember gen_GP16();
/// G_k with a_1c_1 subdivided three times; F_0 = C_3.
FamilyMember gen_F(std::size_t k);
/// G_k with a_1c_1 and b_kd_k each subdivided three times; L_0 = C_6.
FamilyMember gen_L(std::size_t k);
/// H∘P_2: hubs keep H's labels 0..n-1, mids are n..2n-1, leaves 2n..3n-1.
FamilyMember two_corona(const Graph& h);

Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);

}  // namespace totdom
