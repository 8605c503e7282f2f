#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "totdom/families.hpp"
#include "totdom/graph.hpp"

namespace totdom {

/// v1 v2 v3 v4 v5 with degree-2 interior, and x, y the two common
/// neighbours of v1 and v5; v1, v5, x, y all have degree 3.
struct SpecialTwoPath {
  Vertex v1, v2, v3, v4, v5;
  Vertex x, y;  // x < y

  friend bool operator==(const SpecialTwoPath&, const SpecialTwoPath&) = default;
};

enum class Verdict { Gdone, GdtwoF, GdtwoL, GcubG, GcubH, GcubGP16, NotInFamilies };

std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::NotInFamilies;
  std::size_t k = 0;  // unused for GcubGP16 and NotInFamilies
  /// Isomorphism from the input onto the generated family member.
  std::optional<std::vector<Vertex>> witness;
  /// Why a graph was rejected outright (e.g. disconnected), otherwise empty.
  std::string note;

  bool in_families() const { return verdict != Verdict::NotInFamilies; }
};

/// The two recognition routes for a family disagreed, or a computed quantity
/// contradicts a proven bound. Never expected; always fatal.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// m > Δ(n − γ_t): would falsify the bound itself.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 3 when Δ(G) = 2, otherwise Δ(G). Rejects Δ(G) <= 1.
std::size_t effective_delta(const Graph& g);

struct ExtremalityReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t effective_delta = 0;
  std::size_t gamma_t = 0;
  std::size_t bound = 0;
  bool extremal = false;
  Classification classification;
};

/// Exact γ_t, the bound Δ(n − γ_t) and the family verdict. Every component
/// must have order >= 3 (std::invalid_argument otherwise). Throws
/// BoundViolation if m exceeds the bound.
ExtremalityReport check_bound(const Graph& g);

/// All special 2-paths, each once, oriented so that v1 < v5.
std::vector<SpecialTwoPath> find_special_two_paths(const Graph& g);

/// Whether p is a special 2-path of g (either orientation).
bool is_special_two_path(const Graph& g, const SpecialTwoPath& p);

/// Contracts v1 with v5 and deletes v2, v3, v4; the result has order n - 4.
Relabeled reduce_special(const Graph& g, const SpecialTwoPath& p);

Classification is_in_Gdone(const Graph& g);
Classification is_in_Gdtwo(const Graph& g);
Classification is_in_Gcub(const Graph& g);

/// First accepting test among Gdone, Gdtwo, Gcub; disconnected input is
/// NotInFamilies with a note.
Classification classify(const Graph& g);

/// The generated member a verdict names (not defined for NotInFamilies).
FamilyMember member_for(Verdict v, std::size_t k);

}  // namespace totdom
