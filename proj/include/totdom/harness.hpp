#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "totdom/graph.hpp"
#include "totdom/recognition.hpp"

namespace totdom {

inline constexpr std::size_t kEnumerateMaxOrder = 8;

/// One representative per isomorphism class of connected graphs of order n,
/// each in canonical labeling, sorted by graph6. Built by adding a vertex
/// with every non-empty neighbourhood to each connected graph of order n-1
/// (every connected graph has a non-cut vertex) and deduplicating by
/// canonical form. Refuses n > 8.
std::vector<Graph> enumerate_connected(std::size_t n);

struct CensusEntry {
  std::string graph6;  // canonical
  std::size_t line = 0;  // input line, 0 for enumerated graphs
  std::size_t gamma_t = 0;
  Classification classification;
};

struct Violation {
  std::string graph6;
  std::size_t line = 0;
  std::string reason;
};

struct InputError {
  std::size_t line = 0;
  std::string message;
};

struct EnumerationSummary {
  /// Connected graphs of order >= 3 checked, by order.
  std::map<std::size_t, std::size_t> examined_by_order;
  std::vector<CensusEntry> extremal;
  std::vector<Violation> violations;
  std::vector<InputError> errors;
  std::size_t inputs = 0;  // graphs enumerated, or lines read
  std::size_t verified = 0;
  std::size_t skipped = 0;  // blank/header lines, disconnected or order < 3
  std::size_t malformed = 0;
  double wall_seconds = 0.0;

  /// 1 on any violation, else 2 on malformed input, else 0.
  int exit_code() const;
};

/// Checks the bound and the equality characterization on every connected
/// graph of order 3..max_n.
EnumerationSummary verify_enumerated(std::size_t max_n, std::size_t jobs = 1);

/// Same over a graph6 stream; inputs that are disconnected or of order < 3
/// are counted as skipped.
EnumerationSummary verify_stream(std::istream& in, std::size_t jobs = 1);

nlohmann::ordered_json to_json(const Classification& c);
nlohmann::ordered_json to_json(const ExtremalityReport& r);
/// Deterministic: omits wall time.
nlohmann::ordered_json to_json(const EnumerationSummary& s);

/// Command-line entry point; returns the process exit code.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace totdom
