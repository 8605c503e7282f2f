#include "totdom/recognition.hpp"

#include <algorithm>
#include <unordered_set>

#include "totdom/canonical.hpp"
#include "totdom/domination.hpp"

namespace totdom {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Gdone: return "Gdone";
    case Verdict::GdtwoF: return "GdtwoF";
    case Verdict::GdtwoL: return "GdtwoL";
    case Verdict::GcubG: return "GcubG";
    case Verdict::GcubH: return "GcubH";
    case Verdict::GcubGP16: return "GcubGP16";
    case Verdict::NotInFamilies: return "None";
  }
  return "?";
}

FamilyMember member_for(Verdict v, std::size_t k) {
  switch (v) {
    case Verdict::Gdone: return two_corona(gen_cycle(k));
    case Verdict::GdtwoF: return gen_F(k);
    case Verdict::GdtwoL: return gen_L(k);
    case Verdict::GcubG: return gen_G(k);
    case Verdict::GcubH: return gen_H(k);
    case Verdict::GcubGP16: return gen_GP16();
    case Verdict::NotInFamilies: break;
  }
  throw std::invalid_argument("no family member for verdict None");
}

std::size_t effective_delta(const Graph& g) {
  const std::size_t d = g.max_degree();
  if (d <= 1) throw std::invalid_argument("effective Δ needs Δ(G) >= 2, got " + std::to_string(d));
  return d == 2 ? 3 : d;
}

namespace {

Vertex other_neighbour(const Graph& g, Vertex v, Vertex not_this) {
  const Bitset rest = g.row(v) - Bitset::single(static_cast<std::size_t>(not_this));
  return static_cast<Vertex>(rest.first());
}

// Walks v1 -> v2 along degree-2 vertices; fills the path when it is special.
std::optional<SpecialTwoPath> special_from(const Graph& g, Vertex v1, Vertex v2) {
  if (g.degree(v1) != 3 || !g.adjacent(v1, v2) || g.degree(v2) != 2) return std::nullopt;
  const Vertex v3 = other_neighbour(g, v2, v1);
  if (g.degree(v3) != 2) return std::nullopt;
  const Vertex v4 = other_neighbour(g, v3, v2);
  if (v4 == v2 || g.degree(v4) != 2) return std::nullopt;
  const Vertex v5 = other_neighbour(g, v4, v3);
  if (v5 == v1 || g.degree(v5) != 3) return std::nullopt;
  const Bitset common = g.row(v1) - Bitset::single(static_cast<std::size_t>(v2));
  if (common != g.row(v5) - Bitset::single(static_cast<std::size_t>(v4))) return std::nullopt;
  const auto x = static_cast<Vertex>(common.first());
  const auto y = static_cast<Vertex>(common.next(static_cast<std::size_t>(x)));
  if (g.degree(x) != 3 || g.degree(y) != 3) return std::nullopt;
  return SpecialTwoPath{v1, v2, v3, v4, v5, x, y};
}

SpecialTwoPath reversed(const SpecialTwoPath& p) { return {p.v5, p.v4, p.v3, p.v2, p.v1, p.x, p.y}; }

bool same_shape(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

Classification accept(Verdict v, std::size_t k, const Graph& g, const FamilyMember& member) {
  Classification c{v, k, find_isomorphism(g, member.graph), {}};
  if (!c.witness) throw InternalInconsistency("accepted as " + to_string(v) + " but not isomorphic to the member");
  return c;
}

// Reduction route: δ >= 2 and connected at every level, base cases C_3 and
// C_6, otherwise some special 2-path reduces to a member.
class DtwoReducer {
 public:
  bool reduces(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3 || g.min_degree() < 2 || !is_connected(g)) return false;
    if (n == 3) return are_isomorphic(g, gen_cycle(3));
    if (n == 6) return are_isomorphic(g, gen_cycle(6));
    if (n < 7 || n % 4 == 0 || n % 4 == 1) return false;
    const auto paths = find_special_two_paths(g);
    if (paths.empty()) return false;
    std::optional<CanonicalForm> key;
    if (paths.size() > 1) {
      key = canonical_form(g);
      if (failed_.contains(*key)) return false;
    }
    for (const auto& p : paths)
      if (reduces(reduce_special(g, p).graph)) return true;
    if (key) failed_.insert(std::move(*key));
    return false;
  }

 private:
  std::unordered_set<CanonicalForm> failed_;
};

}  // namespace

bool is_special_two_path(const Graph& g, const SpecialTwoPath& p) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v : {p.v1, p.v2, p.v3, p.v4, p.v5, p.x, p.y})
    if (v < 0 || v >= n) return false;
  for (const auto& q : {p, reversed(p)}) {
    const auto found = special_from(g, q.v1, q.v2);
    if (!found) continue;
    const bool same_path = found->v3 == q.v3 && found->v4 == q.v4 && found->v5 == q.v5;
    const bool same_pair = std::minmax(q.x, q.y) == std::minmax(found->x, found->y);
    if (same_path && same_pair) return true;
  }
  return false;
}

std::vector<SpecialTwoPath> find_special_two_paths(const Graph& g) {
  std::vector<SpecialTwoPath> out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto v1 = static_cast<Vertex>(v);
    if (g.degree(v1) != 3) continue;
    g.row(v1).for_each([&](std::size_t u) {
      const auto p = special_from(g, v1, static_cast<Vertex>(u));
      if (p && p->v1 < p->v5) out.push_back(*p);
    });
  }
  return out;
}

Relabeled reduce_special(const Graph& g, const SpecialTwoPath& p) {
  if (!is_special_two_path(g, p)) throw std::invalid_argument("not a special 2-path of this graph");
  const auto merged = contract(g, p.v1, p.v5);
  VertexSet interior(merged.graph.order());
  for (Vertex v : {p.v2, p.v3, p.v4}) interior.insert(merged.to_new[static_cast<std::size_t>(v)]);
  const auto reduced = delete_vertices(merged.graph, interior);

  Relabeled out;
  out.graph = reduced.graph;
  out.to_new.assign(g.order(), -1);
  for (std::size_t v = 0; v < g.order(); ++v) {
    const Vertex mid = merged.to_new[v];
    out.to_new[v] = reduced.to_new[static_cast<std::size_t>(mid)];
  }
  for (Vertex mid : reduced.to_old) out.to_old.push_back(merged.to_old[static_cast<std::size_t>(mid)]);
  return out;
}

Classification is_in_Gdone(const Graph& g) {
  const std::size_t n = g.order();
  const bool shape_ok = n >= 9 && n % 3 == 0;
  const std::size_t k = n / 3;

  bool structural = shape_ok && is_connected(g);
  if (structural) {
    Bitset hubs;
    std::size_t leaves = 0;
    for (std::size_t v = 0; v < n && structural; ++v) {
      const auto leaf = static_cast<Vertex>(v);
      if (g.degree(leaf) != 1) continue;
      ++leaves;
      const auto mid = static_cast<Vertex>(g.row(leaf).first());
      if (g.degree(mid) != 2) {
        structural = false;
        break;
      }
      const Vertex hub = other_neighbour(g, mid, leaf);
      if (g.degree(hub) != 3 || hubs.test(static_cast<std::size_t>(hub))) {
        structural = false;
        break;
      }
      hubs.set(static_cast<std::size_t>(hub));
    }
    structural = structural && leaves == k && hubs.count() == k;
    if (structural) {
      const auto core = induce(g, VertexSet(n, hubs));
      structural = core.graph.min_degree() == 2 && core.graph.max_degree() == 2 && is_connected(core.graph);
    }
  }

  bool isomorphic = false;
  std::optional<FamilyMember> member;
  if (shape_ok) {
    member = two_corona(gen_cycle(k));
    isomorphic = same_shape(g, member->graph) && are_isomorphic(g, member->graph);
  }
  if (structural != isomorphic)
    throw InternalInconsistency("2-corona structure test and isomorphism test disagree");
  if (!structural) return {};
  return accept(Verdict::Gdone, k, g, *member);
}

Classification is_in_Gdtwo(const Graph& g) {
  const std::size_t n = g.order();
  DtwoReducer reducer;
  const bool reduces = reducer.reduces(g);

  std::optional<FamilyMember> member;
  Verdict verdict = Verdict::NotInFamilies;
  std::size_t k = 0;
  if (n >= 3 && n % 4 == 3) {
    k = (n - 3) / 4;
    member = gen_F(k);
    verdict = Verdict::GdtwoF;
  } else if (n >= 6 && n % 4 == 2) {
    k = (n - 6) / 4;
    member = gen_L(k);
    verdict = Verdict::GdtwoL;
  }
  const bool isomorphic = member && same_shape(g, member->graph) && are_isomorphic(g, member->graph);
  if (reduces != isomorphic)
    throw InternalInconsistency("special 2-path reduction and isomorphism test disagree on " + to_string(verdict));
  if (!reduces) return {};
  return accept(verdict, k, g, *member);
}

Classification is_in_Gcub(const Graph& g) {
  const std::size_t n = g.order();
  const bool connected = n > 0 && is_connected(g);

  Classification found;
  if (connected && g.min_degree() == 3 && g.max_degree() == 3 && n % 4 == 0) {
    const std::size_t k = n / 4;
    std::vector<std::pair<Verdict, FamilyMember>> candidates;
    candidates.emplace_back(Verdict::GcubG, gen_G(k));
    if (k >= 2) candidates.emplace_back(Verdict::GcubH, gen_H(k));
    if (n == 16) candidates.emplace_back(Verdict::GcubGP16, gen_GP16());
    for (const auto& [verdict, member] : candidates) {
      if (!are_isomorphic(g, member.graph)) continue;
      found = accept(verdict, verdict == Verdict::GcubGP16 ? 0 : k, g, member);
      break;
    }
  }

  // A connected graph with δ >= 3 has γ_t = n/2 exactly for the cubic family.
  if (connected && g.min_degree() >= 3) {
    const bool half = 2 * gamma_t(g).value == n;
    if (half != found.in_families())
      throw InternalInconsistency("cubic family membership disagrees with γ_t = n/2");
  }
  return found;
}

Classification classify(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    Classification c;
    c.note = "disconnected input; the characterization covers connected graphs";
    return c;
  }
  const Classification tests[] = {is_in_Gdone(g), is_in_Gdtwo(g), is_in_Gcub(g)};
  const auto accepted = std::count_if(std::begin(tests), std::end(tests), [](const auto& c) { return c.in_families(); });
  if (accepted > 1) throw InternalInconsistency("graph accepted by more than one family");
  for (const auto& c : tests)
    if (c.in_families()) return c;
  return {};
}

ExtremalityReport check_bound(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  for (const auto& comp : components(g))
    if (comp.size() < 3)
      throw std::invalid_argument("component of order " + std::to_string(comp.size()) + " (< 3)");

  ExtremalityReport r;
  r.n = g.order();
  r.m = g.size();
  r.max_degree = g.max_degree();
  r.effective_delta = effective_delta(g);
  r.gamma_t = gamma_t(g).value;
  r.bound = r.effective_delta * (r.n - r.gamma_t);
  if (r.m > r.bound)
    throw BoundViolation("m = " + std::to_string(r.m) + " exceeds Δ(n − γ_t) = " + std::to_string(r.bound));
  r.extremal = r.m == r.bound;
  r.classification = classify(g);
  return r;
}

}  // namespace totdom
