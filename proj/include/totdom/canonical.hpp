#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "totdom/graph.hpp"

namespace totdom {

/// Isomorphism-invariant key: equal keys iff the graphs are isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  /// Vertex v of the input sits at position `perm[v]` in the canonical graph.
  std::vector<Vertex> perm;
  Graph graph;
  CanonicalForm form;
};

/// Canonical labeling by colour refinement and individualization with
/// automorphism pruning. Practical up to order ~64.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// graph6 of the canonically relabeled graph (order <= 62).
std::string canonical_graph6(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// An isomorphism as a map from vertices of `a` to vertices of `b`, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace totdom

template <>
struct std::hash<totdom::CanonicalForm> {
  std::size_t operator()(const totdom::CanonicalForm& f) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : f.bytes) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};
