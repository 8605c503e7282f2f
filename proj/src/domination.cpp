#include "totdom/domination.hpp"

#include <string>
#include <vector>

namespace totdom {

namespace {

void require_no_isolated(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 0)
      throw NoTotalDominatingSet("vertex " + std::to_string(v) + " is isolated; no TD-set exists");
}

// Branch and bound over "which neighbour dominates the most constrained
// undominated target". Finds S with forced ⊆ S ⊆ forced ∪ allowed and
// targets ⊆ N(S), of size below `limit`.
class DominationSearch {
 public:
  DominationSearch(const Graph& g, Bitset targets, Bitset allowed, Bitset forced)
      : g_(g), targets_(targets), allowed_(allowed - forced), forced_(forced) {
    reach_ = g.max_degree() == 0 ? 1 : g.max_degree();
  }

  /// Smallest solution, or nullopt if none is smaller than `limit`.
  std::optional<Bitset> minimize(std::size_t limit) {
    limit_ = limit;
    stop_at_first_ = false;
    run();
    return best_;
  }

  /// Any solution of size at most `budget`.
  std::optional<Bitset> find_within(std::size_t budget) {
    limit_ = budget + 1;
    stop_at_first_ = true;
    run();
    return best_;
  }

 private:
  void run() {
    best_.reset();
    done_ = false;
    Bitset dominated;
    forced_.for_each([&](std::size_t v) { dominated |= g_.row(static_cast<Vertex>(v)); });
    recurse(forced_, forced_.count(), dominated, allowed_);
  }

  void recurse(const Bitset& chosen, std::size_t count, const Bitset& dominated, Bitset allowed) {
    const Bitset open = targets_ - dominated;
    const std::size_t open_count = open.count();
    if (open_count == 0) {
      if (count < limit_) {
        best_ = chosen;
        limit_ = count;
        if (stop_at_first_) done_ = true;
      }
      return;
    }
    if (count + (open_count + reach_ - 1) / reach_ >= limit_) return;

    // Most constrained open target; ties go to the smallest label.
    std::size_t pick = Bitset::kBits;
    std::size_t fewest = Bitset::kBits + 1;
    open.for_each([&](std::size_t u) {
      const std::size_t options = (g_.row(static_cast<Vertex>(u)) & allowed).count();
      if (options < fewest) {
        fewest = options;
        pick = u;
      }
    });
    if (fewest == 0) return;

    const Bitset options = g_.row(static_cast<Vertex>(pick)) & allowed;
    for (std::size_t w = options.first(); w < Bitset::kBits; w = options.next(w)) {
      allowed.reset(w);
      Bitset next = chosen;
      next.set(w);
      recurse(next, count + 1, dominated | g_.row(static_cast<Vertex>(w)), allowed);
      if (done_) return;
      if (count + (open_count + reach_ - 1) / reach_ >= limit_) return;
    }
  }

  const Graph& g_;
  Bitset targets_;
  Bitset allowed_;
  Bitset forced_;
  std::size_t reach_ = 1;
  std::size_t limit_ = 0;
  bool stop_at_first_ = false;
  bool done_ = false;
  std::optional<Bitset> best_;
};

// Lexicographically smallest solution of size `value`: take each vertex in
// label order whenever a solution extending the current choice exists.
Bitset lexicographic_witness(const Graph& g, const Bitset& targets, const Bitset& allowed, Bitset forced,
                             std::size_t value) {
  Bitset excluded;
  for (std::size_t v = 0; v < g.order() && forced.count() < value; ++v) {
    if (forced.test(v) || !allowed.test(v)) continue;
    Bitset trial = forced;
    trial.set(v);
    DominationSearch search(g, targets, allowed - excluded, trial);
    if (search.find_within(value)) {
      forced = trial;
    } else {
      excluded.set(v);
    }
  }
  return forced;
}

TDCertificate solve_connected(const Graph& g) {
  const Bitset all = Bitset::prefix(g.order());
  DominationSearch search(g, all, all, Bitset{});
  const auto best = search.minimize(g.order() + 1);
  if (!best) throw NoTotalDominatingSet("no TD-set exists");
  const std::size_t value = best->count();
  return {value, VertexSet(g.order(), lexicographic_witness(g, all, all, Bitset{}, value))};
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_total_dominating(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) throw GraphError("vertex set does not belong to this graph");
  Bitset covered;
  s.for_each([&](Vertex v) { covered |= g.row(v); });
  return covered == Bitset::prefix(g.order());
}

bool is_almost_total_dominating(const Graph& g, const VertexSet& s, Vertex v) {
  if (s.order() != g.order()) throw GraphError("vertex set does not belong to this graph");
  if (!s.contains(v)) return false;
  if (g.row(v).intersects(s.bits())) return false;
  Bitset covered;
  s.for_each([&](Vertex u) { covered |= g.row(u); });
  Bitset others = Bitset::prefix(g.order());
  others.reset(static_cast<std::size_t>(v));
  return others.is_subset_of(covered);
}

TDCertificate gamma_t_oracle(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kOracleMaxOrder)
    throw std::invalid_argument("oracle refuses order " + std::to_string(n) + " (limit " +
                                std::to_string(kOracleMaxOrder) + ")");
  require_no_isolated(g);
  const Bitset all = Bitset::prefix(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      Bitset covered;
      Bitset chosen;
      for (auto v : idx) {
        covered |= g.row(static_cast<Vertex>(v));
        chosen.set(v);
      }
      if (covered == all) return {k, VertexSet(n, chosen)};
    } while (next_combination(idx, n));
  }
  throw NoTotalDominatingSet("no TD-set exists");
}

TDCertificate gamma_t(const Graph& g) {
  require_no_isolated(g);
  TDCertificate total{0, VertexSet(g.order())};
  for (const auto& comp : components(g)) {
    const auto part = induce(g, comp);
    const auto cert = solve_connected(part.graph);
    total.value += cert.value;
    cert.witness.for_each([&](Vertex v) { total.witness.insert(part.to_old[static_cast<std::size_t>(v)]); });
  }
  return total;
}

std::optional<ATDCertificate> gamma_t_almost(const Graph& g, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw GraphError("anchor vertex out of range");
  const std::size_t n = g.order();
  Bitset targets = Bitset::prefix(n);
  targets.reset(static_cast<std::size_t>(v));
  const Bitset allowed = Bitset::prefix(n) - g.row(v);
  const Bitset forced = Bitset::single(static_cast<std::size_t>(v));

  DominationSearch search(g, targets, allowed, forced);
  const auto best = search.minimize(n + 1);
  if (!best) return std::nullopt;
  const std::size_t value = best->count();
  return ATDCertificate{v, value, VertexSet(n, lexicographic_witness(g, targets, allowed, forced, value))};
}

std::size_t gamma_t_path_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("path/cycle formula needs n >= 3");
  return n / 2 + (n + 3) / 4 - n / 4;
}

}  // namespace totdom
