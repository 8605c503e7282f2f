#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "totdom/graph.hpp"

namespace totdom {

/// The graph has an isolated vertex, so no total dominating set exists.
class NoTotalDominatingSet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Minimum total dominating set: `witness` is a TD-set of size `value`.
struct TDCertificate {
  std::size_t value = 0;
  VertexSet witness;
};

/// Minimum almost total dominating set with respect to `anchor`.
struct ATDCertificate {
  Vertex anchor = 0;
  std::size_t value = 0;
  VertexSet witness;
};

/// Largest order the subset-enumeration oracle accepts.
inline constexpr std::size_t kOracleMaxOrder = 24;

/// Every vertex of G has a neighbour in S.
bool is_total_dominating(const Graph& g, const VertexSet& s);

/// v ∈ S, no neighbour of v in S, and every vertex other than v has a neighbour in S.
bool is_almost_total_dominating(const Graph& g, const VertexSet& s, Vertex v);

/// Exhaustive search over subsets by increasing size, lexicographic within a
/// size; the first TD-set found is returned. Refuses orders above kOracleMaxOrder.
TDCertificate gamma_t_oracle(const Graph& g);

/// Exact total domination number by branch and bound, solved per component.
/// The witness is the lexicographically smallest minimum TD-set.
TDCertificate gamma_t(const Graph& g);

/// Exact almost total domination number with respect to v, or nullopt when no
/// ATD-set exists. The witness is the lexicographically smallest one.
std::optional<ATDCertificate> gamma_t_almost(const Graph& g, Vertex v);

/// floor(n/2) + ceil(n/4) - floor(n/4), the value for P_n and C_n; n >= 3.
std::size_t gamma_t_path_cycle(std::size_t n);

}  // namespace totdom
