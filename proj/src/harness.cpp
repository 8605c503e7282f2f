#include "totdom/harness.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <optional>
#include <thread>
#include <unordered_map>

#include "totdom/canonical.hpp"
#include "totdom/graph6.hpp"

namespace totdom {

std::vector<Graph> enumerate_connected(std::size_t n) {
  if (n < 1 || n > kEnumerateMaxOrder)
    throw std::invalid_argument("internal enumeration covers orders 1.." + std::to_string(kEnumerateMaxOrder) +
                                "; supply larger graphs as graph6");
  std::vector<Graph> level{Graph(1)};
  for (std::size_t order = 2; order <= n; ++order) {
    std::unordered_map<CanonicalForm, Graph> seen;
    const std::size_t prev = order - 1;
    for (const auto& g : level) {
      std::vector<Bitset> rows(order);
      for (std::size_t v = 0; v < prev; ++v) rows[v] = g.row(static_cast<Vertex>(v));
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << prev); ++mask) {
        std::vector<Bitset> grown(rows);
        for (std::size_t v = 0; v < prev; ++v)
          if ((mask >> v) & 1U) {
            grown[v].set(prev);
            grown[prev].set(v);
          }
        auto labeled = canonical_labeling(Graph::from_rows(std::move(grown)));
        seen.try_emplace(std::move(labeled.form), std::move(labeled.graph));
      }
    }
    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(seen.size());
    for (auto& [form, graph] : seen) keyed.emplace_back(graph6_encode(graph), std::move(graph));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, graph] : keyed) level.push_back(std::move(graph));
  }
  return level;
}

int EnumerationSummary::exit_code() const {
  if (!violations.empty()) return 1;
  if (malformed > 0) return 2;
  return 0;
}

namespace {

struct WorkItem {
  std::size_t line = 0;
  Graph graph;
};

struct WorkResult {
  std::size_t order = 0;
  bool skipped = false;
  std::optional<CensusEntry> extremal;
  std::optional<Violation> violation;
};

WorkResult examine(const WorkItem& item) {
  WorkResult r;
  const Graph& g = item.graph;
  r.order = g.order();
  if (g.order() < 3 || !is_connected(g)) {
    r.skipped = true;
    return r;
  }
  const std::string code = canonical_graph6(g);
  try {
    const auto report = check_bound(g);
    if (report.extremal != report.classification.in_families()) {
      r.violation = Violation{code, item.line,
                              report.extremal ? "extremal but in none of the families"
                                              : "in " + to_string(report.classification.verdict) +
                                                    " but not extremal"};
    } else if (report.extremal) {
      r.extremal = CensusEntry{code, item.line, report.gamma_t, report.classification};
    }
  } catch (const BoundViolation& e) {
    r.violation = Violation{code, item.line, e.what()};
  } catch (const InternalInconsistency& e) {
    r.violation = Violation{code, item.line, std::string("internal inconsistency: ") + e.what()};
  }
  return r;
}

// Workers own the shards i, i+J, i+2J, ... and write into their own slots;
// the merge below is single-threaded and sorts, so output is independent of J.
void run_items(const std::vector<WorkItem>& items, std::size_t jobs, EnumerationSummary& summary) {
  jobs = std::max<std::size_t>(1, std::min(jobs, std::max<std::size_t>(1, items.size())));
  std::vector<WorkResult> results(items.size());
  auto work = [&](std::size_t shard) {
    for (std::size_t i = shard; i < items.size(); i += jobs) results[i] = examine(items[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work, j);
  }

  for (auto& r : results) {
    if (r.skipped) {
      ++summary.skipped;
      continue;
    }
    ++summary.verified;
    ++summary.examined_by_order[r.order];
    if (r.extremal) summary.extremal.push_back(std::move(*r.extremal));
    if (r.violation) summary.violations.push_back(std::move(*r.violation));
  }
  std::sort(summary.extremal.begin(), summary.extremal.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return std::tie(a.graph6, a.line) < std::tie(b.graph6, b.line);
  });
  std::sort(summary.violations.begin(), summary.violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.graph6, a.line) < std::tie(b.graph6, b.line);
  });
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

EnumerationSummary verify_enumerated(std::size_t max_n, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  if (max_n > kEnumerateMaxOrder)
    throw std::invalid_argument("--max-n above " + std::to_string(kEnumerateMaxOrder) + " is not supported");
  std::vector<WorkItem> items;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : enumerate_connected(n)) items.push_back({0, std::move(g)});

  EnumerationSummary s;
  s.inputs = items.size();
  run_items(items, jobs, s);
  s.wall_seconds = seconds_since(start);
  return s;
}

EnumerationSummary verify_stream(std::istream& in, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationSummary s;
  std::vector<WorkItem> items;
  for (const auto& line : read_graph6_lines(in)) {
    ++s.inputs;
    if (line.text.empty()) {
      ++s.skipped;
      continue;
    }
    try {
      items.push_back({line.line_number, graph6_decode(line.text)});
    } catch (const Graph6Error& e) {
      ++s.malformed;
      s.errors.push_back({line.line_number, e.what()});
    }
  }
  run_items(items, jobs, s);
  s.wall_seconds = seconds_since(start);
  return s;
}

nlohmann::ordered_json to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["family"] = to_string(c.verdict);
  if (c.verdict == Verdict::NotInFamilies || c.verdict == Verdict::GcubGP16) {
    j["k"] = nullptr;
  } else {
    j["k"] = c.k;
  }
  return j;
}

nlohmann::ordered_json to_json(const ExtremalityReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["max_degree"] = r.max_degree;
  j["effective_delta"] = r.effective_delta;
  j["gamma_t"] = r.gamma_t;
  j["bound"] = r.bound;
  j["extremal"] = r.extremal;
  j["classification"] = to_json(r.classification);
  return j;
}

nlohmann::ordered_json to_json(const EnumerationSummary& s) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json examined = nlohmann::ordered_json::object();
  for (const auto& [order, count] : s.examined_by_order) examined[std::to_string(order)] = count;
  j["examined"] = examined;
  j["inputs"] = s.inputs;
  j["verified"] = s.verified;
  j["skipped"] = s.skipped;
  j["malformed"] = s.malformed;
  auto& extremal = j["extremal"] = nlohmann::ordered_json::array();
  for (const auto& e : s.extremal) {
    nlohmann::ordered_json entry;
    entry["graph6"] = e.graph6;
    if (e.line > 0) entry["line"] = e.line;
    entry["gamma_t"] = e.gamma_t;
    entry["classification"] = to_json(e.classification);
    extremal.push_back(entry);
  }
  auto& violations = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : s.violations) {
    nlohmann::ordered_json entry;
    entry["graph6"] = v.graph6;
    if (v.line > 0) entry["line"] = v.line;
    entry["reason"] = v.reason;
    violations.push_back(entry);
  }
  auto& errors = j["errors"] = nlohmann::ordered_json::array();
  for (const auto& e : s.errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  return j;
}

}  // namespace totdom
