#include "totdom/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "totdom/graph6.hpp"

namespace totdom {

namespace {

// Ordered partition stored as one colour per vertex; a colour is the start
// position of the vertex's cell, so a cell of size s with colour c occupies
// positions c..c+s-1 and a discrete partition is a labeling.
using Colouring = std::vector<int>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Colouring colour(n_, 0);
    refine(colour);
    std::vector<Vertex> path;
    search(colour, path);

    CanonicalLabeling out;
    out.perm.assign(best_lab_.begin(), best_lab_.end());
    out.graph = Graph::from_rows(best_rows_);
    out.form = encode(best_rows_);
    return out;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable.
  void refine(Colouring& colour) const {
    std::vector<int> order(n_);
    std::vector<std::vector<int>> sig(n_, std::vector<int>(n_));
    std::size_t cells = count_cells(colour);
    while (cells < n_) {
      for (std::size_t v = 0; v < n_; ++v) {
        std::fill(sig[v].begin(), sig[v].end(), 0);
        g_.row(static_cast<Vertex>(v)).for_each([&](std::size_t u) { ++sig[v][static_cast<std::size_t>(colour[u])]; });
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (colour[a] != colour[b]) return colour[a] < colour[b];
        return sig[a] < sig[b];
      });
      Colouring next(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        const int v = order[i];
        const bool same_as_prev =
            i > 0 && colour[order[i - 1]] == colour[v] && sig[order[i - 1]] == sig[v];
        next[v] = same_as_prev ? next[order[i - 1]] : static_cast<int>(i);
      }
      const std::size_t refined = count_cells(next);
      colour = std::move(next);
      if (refined == cells) break;
      cells = refined;
    }
  }

  static std::size_t count_cells(const Colouring& colour) {
    std::vector<int> c(colour);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Returns the depth to unwind to, or -1 to continue normally.
  int search(const Colouring& colour, std::vector<Vertex>& path) {
    // Target cell: the non-singleton cell at the smallest position.
    std::vector<int> size(n_, 0);
    for (int c : colour) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) return leaf(colour, path);

    std::vector<Vertex> cell;
    for (std::size_t v = 0; v < n_; ++v)
      if (colour[v] == target) cell.push_back(static_cast<Vertex>(v));

    const int depth = static_cast<int>(path.size());
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (!tried.empty()) {
        const auto orbit = orbits_fixing(path);
        const bool equivalent =
            std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return orbit[t] == orbit[v]; });
        if (equivalent) continue;
      }
      tried.push_back(v);
      Colouring child(colour);
      for (auto& c : child)
        if (c == target) c = target + 1;
      child[static_cast<std::size_t>(v)] = target;
      refine(child);
      path.push_back(v);
      const int jump = search(child, path);
      path.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  int leaf(const Colouring& colour, const std::vector<Vertex>& path) {
    std::vector<Bitset> rows(n_);
    for (std::size_t v = 0; v < n_; ++v)
      g_.row(static_cast<Vertex>(v)).for_each([&](std::size_t u) {
        rows[static_cast<std::size_t>(colour[v])].set(static_cast<std::size_t>(colour[u]));
      });

    if (first_lab_.empty()) {
      first_lab_ = colour;
      first_rows_ = rows;
      first_path_ = path;
      best_lab_ = colour;
      best_rows_ = std::move(rows);
      return -1;
    }
    if (rows == first_rows_) {
      record_automorphism(first_lab_, colour);
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() && path[common] == first_path_[common]) ++common;
      return static_cast<int>(common);
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      record_automorphism(best_lab_, colour);
    } else if (cmp < 0) {
      best_lab_ = colour;
      best_rows_ = std::move(rows);
    }
    return -1;
  }

  static int compare(const std::vector<Bitset>& a, const std::vector<Bitset>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t w = Bitset::kWords; w-- > 0;) {
        if (a[i].word(w) != b[i].word(w)) return a[i].word(w) < b[i].word(w) ? -1 : 1;
      }
    return 0;
  }

  // Two labelings giving the same relabeled graph differ by an automorphism
  // v -> lab_a^{-1}(lab_b(v)).
  void record_automorphism(const Colouring& lab_a, const Colouring& lab_b) {
    std::vector<Vertex> inverse_a(n_);
    for (std::size_t v = 0; v < n_; ++v) inverse_a[static_cast<std::size_t>(lab_a[v])] = static_cast<Vertex>(v);
    std::vector<Vertex> gamma(n_);
    for (std::size_t v = 0; v < n_; ++v) gamma[v] = inverse_a[static_cast<std::size_t>(lab_b[v])];
    automorphisms_.push_back(std::move(gamma));
  }

  // Orbit representative per vertex under the known automorphisms that fix
  // every vertex of `fixed`.
  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& fixed) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(fixed.begin(), fixed.end(),
                                     [&](Vertex f) { return gamma[static_cast<std::size_t>(f)] == f; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const Vertex a = find(static_cast<Vertex>(v));
        const Vertex b = find(gamma[v]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    std::vector<Vertex> rep(n_);
    for (std::size_t v = 0; v < n_; ++v) rep[v] = find(static_cast<Vertex>(v));
    return rep;
  }

  CanonicalForm encode(const std::vector<Bitset>& rows) const {
    CanonicalForm f;
    f.bytes.push_back(static_cast<std::uint8_t>(n_));
    std::uint8_t acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        acc = static_cast<std::uint8_t>((acc << 1) | (rows[i].test(j) ? 1 : 0));
        if (++filled == 8) {
          f.bytes.push_back(acc);
          acc = 0;
          filled = 0;
        }
      }
    if (filled > 0) f.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return f;
  }

  const Graph& g_;
  std::size_t n_;
  Colouring first_lab_;
  Colouring best_lab_;
  std::vector<Bitset> first_rows_;
  std::vector<Bitset> best_rows_;
  std::vector<Vertex> first_path_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {{}, Graph{}, CanonicalForm{{0}}};
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::string canonical_graph6(const Graph& g) { return graph6_encode(canonical_labeling(g).graph); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const auto la = canonical_labeling(a);
  const auto lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  std::vector<Vertex> b_at(b.order());
  for (std::size_t v = 0; v < b.order(); ++v) b_at[static_cast<std::size_t>(lb.perm[v])] = static_cast<Vertex>(v);
  std::vector<Vertex> map(a.order());
  for (std::size_t v = 0; v < a.order(); ++v) map[v] = b_at[static_cast<std::size_t>(la.perm[v])];
  return map;
}

}  // namespace totdom
