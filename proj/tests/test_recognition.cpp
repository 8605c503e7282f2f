#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "totdom/canonical.hpp"
#include "totdom/domination.hpp"
#include "totdom/families.hpp"
#include "totdom/recognition.hpp"

using namespace totdom;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + i);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edges(leaves + 1, e);
}

struct Named {
  FamilyMember member;
  Verdict verdict;
};

std::vector<Named> all_members() {
  std::vector<Named> out;
  for (std::size_t k = 1; k <= 5; ++k) out.push_back({gen_G(k), Verdict::GcubG});
  for (std::size_t k = 2; k <= 5; ++k) out.push_back({gen_H(k), Verdict::GcubH});
  for (std::size_t k = 0; k <= 4; ++k) {
    out.push_back({gen_F(k), Verdict::GdtwoF});
    out.push_back({gen_L(k), Verdict::GdtwoL});
  }
  out.push_back({gen_GP16(), Verdict::GcubGP16});
  for (std::size_t j = 3; j <= 7; ++j) out.push_back({two_corona(gen_cycle(j)), Verdict::Gdone});
  return out;
}

std::size_t expected_k(const Named& n) {
  if (n.verdict == Verdict::Gdone) return n.member.graph.order() / 3;
  return n.member.k;
}

}  // namespace

TEST_CASE("effective degree parameter") {
  CHECK(effective_delta(gen_cycle(5)) == 3);
  CHECK(effective_delta(gen_path(3)) == 3);
  CHECK(effective_delta(gen_complete(4)) == 3);
  CHECK(effective_delta(gen_complete(5)) == 4);
  CHECK_THROWS_AS(effective_delta(gen_complete(2)), std::invalid_argument);
  CHECK_THROWS_AS(effective_delta(Graph(3)), std::invalid_argument);
}

TEST_CASE("check_bound examples") {
  const auto p3 = check_bound(gen_path(3));
  CHECK(p3.m == 2);
  CHECK(p3.bound == 3);
  CHECK_FALSE(p3.extremal);
  CHECK(p3.classification.verdict == Verdict::NotInFamilies);

  const auto c6 = check_bound(gen_cycle(6));
  CHECK(c6.extremal);
  CHECK(c6.classification.verdict == Verdict::GdtwoL);
  CHECK(c6.classification.k == 0);

  const auto k4 = check_bound(gen_complete(4));
  CHECK(k4.extremal);
  CHECK(k4.m == 6);
  CHECK(k4.bound == 6);
  CHECK(k4.classification.verdict == Verdict::GcubG);
  CHECK(k4.classification.k == 1);

  const auto k13 = check_bound(star(3));
  CHECK(k13.gamma_t == 2);
  CHECK(k13.bound == 6);
  CHECK_FALSE(k13.extremal);

  const auto k5 = check_bound(gen_complete(5));
  CHECK(k5.effective_delta == 4);
  CHECK(k5.bound == 12);
  CHECK_FALSE(k5.extremal);
}

TEST_CASE("check_bound rejects small components") {
  CHECK_THROWS_AS(check_bound(gen_complete(2)), std::invalid_argument);
  CHECK_THROWS_AS(check_bound(disjoint_union(gen_cycle(3), gen_complete(2))), std::invalid_argument);
  CHECK_THROWS_AS(check_bound(Graph(0)), std::invalid_argument);

  // two triangles: bound holds per component, and the union is not a family member
  const auto two = check_bound(disjoint_union(gen_cycle(3), gen_cycle(3)));
  CHECK(two.m == 6);
  CHECK(two.bound == 6);
  CHECK(two.extremal);
  CHECK(two.classification.verdict == Verdict::NotInFamilies);
  CHECK_FALSE(two.classification.note.empty());
}

TEST_CASE("special 2-paths") {
  const auto f1 = gen_F(1);
  const auto paths = find_special_two_paths(f1.graph);
  REQUIRE(paths.size() == 1);
  const auto& p = paths[0];
  CHECK(p.v1 == *f1.vertex_of({RoleKind::A, 1}));
  CHECK(p.v2 == *f1.vertex_of({RoleKind::SubdivV, 1}));
  CHECK(p.v3 == *f1.vertex_of({RoleKind::SubdivV, 2}));
  CHECK(p.v4 == *f1.vertex_of({RoleKind::SubdivV, 3}));
  CHECK(p.v5 == *f1.vertex_of({RoleKind::C, 1}));
  CHECK(p.x == *f1.vertex_of({RoleKind::B, 1}));
  CHECK(p.y == *f1.vertex_of({RoleKind::D, 1}));
  CHECK(is_special_two_path(f1.graph, p));
  CHECK(is_special_two_path(f1.graph, {p.v5, p.v4, p.v3, p.v2, p.v1, p.x, p.y}));

  CHECK(find_special_two_paths(gen_L(2).graph).size() == 2);
  CHECK(find_special_two_paths(gen_G(3).graph).empty());
  CHECK(find_special_two_paths(gen_cycle(7)).empty());
  for (std::size_t k = 1; k <= 5; ++k) CHECK(find_special_two_paths(gen_F(k).graph).size() == 1);
}

TEST_CASE("invalid special 2-paths are rejected") {
  const auto f1 = gen_F(1);
  const auto p = find_special_two_paths(f1.graph).at(0);
  auto bad = p;
  bad.x = p.v3;
  CHECK_FALSE(is_special_two_path(f1.graph, bad));
  CHECK_THROWS_AS(reduce_special(f1.graph, bad), std::invalid_argument);
  bad = p;
  std::swap(bad.v2, bad.v3);
  CHECK_FALSE(is_special_two_path(f1.graph, bad));
  bad = p;
  bad.v5 = 99;
  CHECK_FALSE(is_special_two_path(f1.graph, bad));
  CHECK(find_special_two_paths(gen_cycle(4)).empty());
}

TEST_CASE("reduction shrinks family members by four") {
  auto reduce_once = [](const Graph& g) {
    const auto paths = find_special_two_paths(g);
    REQUIRE_FALSE(paths.empty());
    const auto& p = paths[0];
    const auto r = reduce_special(g, p);
    CHECK(r.graph.order() == g.order() - 4);
    CHECK(r.graph.min_degree() >= 2);
    const Vertex w = r.to_new[static_cast<std::size_t>(p.v1)];
    CHECK(w == r.to_new[static_cast<std::size_t>(p.v5)]);
    const Vertex x = r.to_new[static_cast<std::size_t>(p.x)];
    const Vertex y = r.to_new[static_cast<std::size_t>(p.y)];
    CHECK(r.graph.degree(x) == 2);
    CHECK(r.graph.degree(y) == 2);
    CHECK(r.graph.adjacent(x, w));
    CHECK(r.graph.adjacent(y, w));
    for (auto gone : {p.v2, p.v3, p.v4}) CHECK(r.to_new[static_cast<std::size_t>(gone)] == -1);
    return r.graph;
  };
  CHECK(are_isomorphic(reduce_once(gen_F(1).graph), gen_cycle(3)));
  CHECK(are_isomorphic(reduce_once(gen_L(1).graph), gen_cycle(6)));
  CHECK(are_isomorphic(reduce_once(gen_F(2).graph), gen_F(1).graph));
  for (std::size_t k = 2; k <= 5; ++k) {
    CHECK(are_isomorphic(reduce_once(gen_F(k).graph), gen_F(k - 1).graph));
    CHECK(are_isomorphic(reduce_once(gen_L(k).graph), gen_L(k - 1).graph));
  }
}

TEST_CASE("membership examples") {
  CHECK(is_in_Gdtwo(gen_F(3).graph).verdict == Verdict::GdtwoF);
  CHECK(is_in_Gdtwo(gen_F(3).graph).k == 3);
  CHECK(is_in_Gdtwo(gen_L(1).graph).verdict == Verdict::GdtwoL);
  CHECK(is_in_Gdtwo(gen_L(1).graph).k == 1);
  CHECK(is_in_Gdtwo(gen_cycle(7)).verdict == Verdict::NotInFamilies);
  CHECK(is_in_Gdtwo(gen_cycle(4)).verdict == Verdict::NotInFamilies);
  CHECK(is_in_Gdtwo(gen_cycle(5)).verdict == Verdict::NotInFamilies);

  const auto c4 = is_in_Gdone(two_corona(gen_cycle(4)).graph);
  CHECK(c4.verdict == Verdict::Gdone);
  CHECK(c4.k == 4);
  CHECK(is_in_Gdone(two_corona(gen_complete(4)).graph).verdict == Verdict::NotInFamilies);
  CHECK(is_in_Gdone(two_corona(gen_path(4)).graph).verdict == Verdict::NotInFamilies);
  CHECK(is_in_Gdone(gen_cycle(9)).verdict == Verdict::NotInFamilies);

  CHECK(is_in_Gcub(gen_H(2).graph).verdict == Verdict::GcubH);
  CHECK(is_in_Gcub(gen_H(2).graph).k == 2);
  CHECK(is_in_Gcub(gen_GP16().graph).verdict == Verdict::GcubGP16);
  CHECK(is_in_Gcub(petersen()).verdict == Verdict::NotInFamilies);
  CHECK(gamma_t_oracle(petersen()).value < 5);

  CHECK(classify(two_corona(gen_cycle(5)).graph).verdict == Verdict::Gdone);
  const auto c3 = classify(gen_F(0).graph);
  CHECK(c3.verdict == Verdict::GdtwoF);
  CHECK(c3.k == 0);
  CHECK(classify(gen_complete(5)).verdict == Verdict::NotInFamilies);
  CHECK(classify(petersen()).verdict == Verdict::NotInFamilies);
  CHECK(to_string(Verdict::NotInFamilies) == "None");
}

TEST_CASE("classification of generated members round-trips and families are disjoint") {
  for (const auto& n : all_members()) {
    const auto& g = n.member.graph;
    const auto c = classify(g);
    CHECK(c.verdict == n.verdict);
    CHECK(c.k == expected_k(n));
    REQUIRE(c.witness.has_value());
    const auto target = member_for(c.verdict, c.k).graph;
    for (const auto& [u, v] : g.edges()) CHECK(target.adjacent((*c.witness)[u], (*c.witness)[v]));

    int accepted = 0;
    accepted += is_in_Gdone(g).in_families();
    accepted += is_in_Gdtwo(g).in_families();
    accepted += is_in_Gcub(g).in_families();
    CHECK(accepted == 1);
  }
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937 rng(17);
  for (const auto& n : all_members()) {
    const auto& g = n.member.graph;
    const auto base = classify(g);
    for (int t = 0; t < 3; ++t) {
      const auto c = classify(relabel(g, testing::random_permutation(g.order(), rng)));
      CHECK(c.verdict == base.verdict);
      CHECK(c.k == base.k);
    }
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng() % 10;
    const auto g = testing::random_connected_graph(n, 0.2, rng);
    const auto base = classify(g);
    const auto c = classify(relabel(g, testing::random_permutation(n, rng)));
    CHECK(c.verdict == base.verdict);
    CHECK(c.k == base.k);
  }
}

TEST_CASE("near misses are rejected") {
  const auto f2 = gen_F(2).graph;
  const auto f2v = gen_F(2);
  CHECK(classify(add_edge(f2, *f2v.vertex_of({RoleKind::SubdivV, 2}), *f2v.vertex_of({RoleKind::B, 2}))).verdict ==
        Verdict::NotInFamilies);
  CHECK(classify(add_edge(gen_cycle(6), 0, 3)).verdict == Verdict::NotInFamilies);
  CHECK(classify(disjoint_union(gen_cycle(3), gen_cycle(3))).verdict == Verdict::NotInFamilies);
  CHECK(classify(gen_cycle(10)).verdict == Verdict::NotInFamilies);
  CHECK(classify(two_corona(gen_cycle(3)).graph).verdict == Verdict::Gdone);
  CHECK(classify(two_corona(gen_complete(2)).graph).verdict == Verdict::NotInFamilies);
}
