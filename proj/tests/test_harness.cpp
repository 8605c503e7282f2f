#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "totdom/canonical.hpp"
#include "totdom/families.hpp"
#include "totdom/graph6.hpp"
#include "totdom/harness.hpp"

using namespace totdom;

namespace {

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const auto& g : graphs) out.insert(canonical_form(g));
  return out;
}

std::set<CanonicalForm> census_forms(const EnumerationSummary& s) {
  std::set<CanonicalForm> out;
  for (const auto& e : s.extremal) out.insert(canonical_form(graph6_decode(e.graph6)));
  return out;
}

}  // namespace

TEST_CASE("enumeration counts match brute force over edge masks") {
  CHECK(enumerate_connected(1).size() == 1);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(enumerate_connected(n).size() == testing::brute_count_connected(n));
  CHECK(enumerate_connected(3).size() == 2);
  CHECK(enumerate_connected(4).size() == 6);
}

TEST_CASE("enumeration matches the networkx atlas class for class") {
  for (std::size_t n = 3; n <= 7; ++n) {
    std::vector<Graph> atlas;
    for (const auto& line : testing::read_lines(testing::data_path("atlas_connected" + std::to_string(n) + ".g6")))
      atlas.push_back(graph6_decode(line));
    const auto ours = enumerate_connected(n);
    CHECK(ours.size() == atlas.size());
    CHECK(forms_of(ours) == forms_of(atlas));
    for (const auto& g : ours) {
      CHECK(is_connected(g));
      CHECK(canonical_labeling(g).graph == g);
    }
  }
}

TEST_CASE("enumeration is sorted and refuses large orders") {
  const auto six = enumerate_connected(6);
  for (std::size_t i = 1; i < six.size(); ++i) CHECK(graph6_encode(six[i - 1]) < graph6_encode(six[i]));
  CHECK_THROWS_AS(enumerate_connected(9), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
}

TEST_CASE("census up to order 7") {
  const auto s = verify_enumerated(7);
  CHECK(s.violations.empty());
  CHECK(s.exit_code() == 0);
  CHECK(s.examined_by_order.at(3) == 2);
  CHECK(s.examined_by_order.at(7) == 853);
  CHECK(s.verified == 2 + 6 + 21 + 112 + 853);
  CHECK(s.skipped == 2);  // orders 1 and 2
  REQUIRE(s.extremal.size() == 4);
  CHECK(census_forms(s) ==
        forms_of({gen_cycle(3), gen_complete(4), gen_cycle(6), gen_F(1).graph}));
}

TEST_CASE("the census does not depend on the number of jobs") {
  const auto one = to_json(verify_enumerated(7, 1)).dump();
  CHECK(one == to_json(verify_enumerated(7, 4)).dump());
  CHECK(one == to_json(verify_enumerated(7, 3)).dump());
  CHECK(one == to_json(verify_enumerated(7, 1)).dump());
}

TEST_CASE("census graphs are extremal again when fed back") {
  const auto s = verify_enumerated(7);
  for (const auto& e : s.extremal) {
    const auto r = check_bound(graph6_decode(e.graph6));
    CHECK(r.extremal);
    CHECK(r.gamma_t == e.gamma_t);
    CHECK(r.classification.verdict == e.classification.verdict);
  }
}

TEST_CASE("stream accounting") {
  std::istringstream in(">>graph6<<Bw\n\nA_\n@\nBg\nE???\nnot graph6\nCF\nE]~o\n");
  const auto s = verify_stream(in, 2);
  CHECK(s.inputs == 9);
  CHECK(s.malformed == 1);
  CHECK(s.verified == 4);  // K_3, P_3, K_{1,3}, and E]~o
  CHECK(s.skipped == 4);   // blank line, K_2, K_1, and the edgeless order-6 graph
  CHECK(s.inputs == s.verified + s.skipped + s.malformed);
  REQUIRE(s.errors.size() == 1);
  CHECK(s.errors[0].line == 7);
  CHECK(s.exit_code() == 2);
  REQUIRE_FALSE(s.extremal.empty());
  CHECK(s.extremal[0].line == 1);
}

TEST_CASE("external catalog of connected cubic graphs on 12 vertices") {
  std::ifstream file(testing::data_path("cubic12_connected.g6"));
  REQUIRE(file);
  const auto s = verify_stream(file, 4);
  CHECK(s.verified == 85);
  CHECK(s.violations.empty());
  REQUIRE(s.extremal.size() == 2);
  std::set<Verdict> verdicts;
  for (const auto& e : s.extremal) {
    CHECK(e.classification.k == 3);
    verdicts.insert(e.classification.verdict);
  }
  CHECK(verdicts == std::set<Verdict>{Verdict::GcubG, Verdict::GcubH});
}

TEST_CASE("summary JSON layout") {
  std::istringstream in("Bw\n");
  const auto j = to_json(verify_stream(in));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"examined", "inputs", "verified", "skipped", "malformed", "extremal",
                                         "violations", "errors"});
  CHECK(j["extremal"][0]["classification"]["family"] == "GdtwoF");
  CHECK(j["extremal"][0]["classification"]["k"] == 0);
}
