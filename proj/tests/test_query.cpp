#include <catch2/catch_amalgamated.hpp>

#include "dhcl/oracle.hpp"
#include "dhcl/query.hpp"
#include "support/gen.hpp"

using namespace dhcl;

namespace {

// Unidirectional reference for the landmark-free bounded search: full BFS
// that skips landmarks, then apply the bound.
Dist ref_sparse(const Graph& g, const Landmarks& lm, Vertex u, Vertex v, Dist bound) {
  if (u == v) return Dist::zero();
  std::vector<Dist> dist(g.vertex_count(), Dist::inf());
  std::vector<Vertex> frontier{u}, next;
  dist[u] = Dist::zero();
  std::uint32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (const Vertex x : frontier)
      for (const Vertex w : g.neighbors(x)) {
        if (lm.is_landmark(w) || dist[w].reachable()) continue;
        dist[w] = Dist(d);
        next.push_back(w);
      }
    frontier.swap(next);
  }
  return dist[v] < bound ? dist[v] : Dist::inf();
}

}  // namespace

TEST_CASE("root_distance recovers landmark distances through the highway") {
  const Graph p5 = gen::make_path(5);
  const Labelling gamma = build_labelling(p5, Landmarks({0, 2}, 5));
  // vertex 3 has no rank-0 entry; the route is entry (2,1) plus highway 0..2
  REQUIRE(root_distance(gamma, 0, 3) == Dist(3));
  REQUIRE(root_distance(gamma, 1, 3) == Dist(1));
  REQUIRE(root_distance(gamma, 0, 2) == Dist(2));  // landmark target: highway cell
  REQUIRE(root_distance(gamma, 0, 0) == Dist::zero());
  REQUIRE_THROWS_AS(root_distance(gamma, 2, 1), std::out_of_range);

  Graph split(4);
  split.insert_edge(0, 1);
  split.insert_edge(2, 3);
  const Labelling gs = build_labelling(split, Landmarks({0}, 4));
  REQUIRE_FALSE(root_distance(gs, 0, 3).reachable());
}

TEST_CASE("upper bound runs through same-landmark pairs too") {
  const Graph p5 = gen::make_path(5);
  const Labelling gamma = build_labelling(p5, Landmarks({0, 4}, 5));
  // best pair is (0,0): 1 + 0 + 3, tighter than the cross pair 1+4+1
  REQUIRE(upper_bound(gamma, 1, 3) == Dist(4));
  REQUIRE_THROWS_AS(upper_bound(gamma, 0, 3), std::logic_error);
}

TEST_CASE("bounded sparse search on the path") {
  const Graph p5 = gen::make_path(5);
  const Landmarks ends({0, 4}, 5);
  SearchScratch s;

  std::uint32_t expanded = 0, max_depth = 0;
  REQUIRE(bounded_sparse_bfs(p5, ends, 1, 3, Dist(3), s, &expanded, &max_depth) == Dist(2));
  REQUIRE(expanded == 3);  // touches exactly 1, 2, 3
  REQUIRE(max_depth + 2 <= 3);

  // bound 2 rules the answer out before anything past depth 0 expands
  REQUIRE_FALSE(bounded_sparse_bfs(p5, ends, 1, 3, Dist(2), s).reachable());

  const Landmarks middle({2}, 5);
  REQUIRE_FALSE(bounded_sparse_bfs(p5, middle, 1, 3, Dist(10), s).reachable());

  REQUIRE(bounded_sparse_bfs(p5, ends, 3, 3, Dist(1), s) == Dist::zero());
  REQUIRE_THROWS_AS(bounded_sparse_bfs(p5, ends, 0, 3, Dist(9), s), std::logic_error);
}

TEST_CASE("query on the frozen path fixture") {
  const Graph p5 = gen::make_path(5);
  const Labelling gamma = build_labelling(p5, Landmarks({0, 4}, 5));
  SearchScratch s;

  const QueryResult q = query(p5, gamma, 1, 3, s);
  REQUIRE(q.distance == Dist(2));
  REQUIRE(q.bound_used == Dist(4));

  REQUIRE(query(p5, gamma, 0, 3, s).distance == Dist(3));  // landmark endpoint
  REQUIRE(query(p5, gamma, 3, 4, s).distance == Dist(1));
  REQUIRE(query(p5, gamma, 2, 2, s).distance == Dist::zero());
  REQUIRE(query(p5, gamma, 0, 4, s).distance == Dist(4));

  REQUIRE_THROWS_AS(query(p5, gamma, 0, 9, s), std::out_of_range);

  const Labelling mismatched = build_labelling(gen::make_path(4), Landmarks({0}, 4));
  REQUIRE_THROWS_AS(query(p5, mismatched, 1, 2, s), std::invalid_argument);
}

TEST_CASE("queries agree with plain BFS everywhere") {
  struct Case {
    Graph g;
    std::uint32_t k;
  };
  std::vector<Case> cases;
  cases.push_back({gen::make_er(150, 350, 17), 5});
  cases.push_back({gen::make_pa(200, 2, 3), 8});
  cases.push_back({gen::make_grid(9, 11), 4});
  cases.push_back({gen::disjoint_union(gen::make_er(60, 120, 5), gen::make_cycle(40)), 6});
  cases.push_back({gen::make_star(30), 1});

  for (const Case& c : cases) {
    const Labelling gamma = build_labelling(c.g, select_landmarks(c.g, c.k));
    SearchScratch s;
    for (Vertex u = 0; u < c.g.vertex_count(); u += 7) {
      const std::vector<Dist> truth = bfs_all_distances(c.g, u);
      for (Vertex v = 0; v < c.g.vertex_count(); v += 3) {
        const QueryResult q = query(c.g, gamma, u, v, s);
        INFO("u=" << u << " v=" << v);
        REQUIRE(q.distance == truth[v]);
        REQUIRE(q.distance <= q.bound_used);
      }
    }
  }
}

TEST_CASE("bidirectional bounded search matches the unidirectional reference") {
  const Graph g = gen::make_er(120, 260, 23);
  const Landmarks lm = select_landmarks(g, 6);
  SearchScratch s;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    Vertex u = Vertex(bounded(rng, g.vertex_count()));
    Vertex v = Vertex(bounded(rng, g.vertex_count()));
    if (lm.is_landmark(u) || lm.is_landmark(v)) continue;
    const Dist bound = i % 3 == 0 ? Dist::inf() : Dist(std::uint32_t(bounded(rng, 9)));
    std::uint32_t max_depth = 0;
    const Dist got = bounded_sparse_bfs(g, lm, u, v, bound, s, nullptr, &max_depth);
    REQUIRE(got == ref_sparse(g, lm, u, v, bound));
    if (bound.reachable() && bound.raw() >= 2) REQUIRE(max_depth <= bound.raw() - 2);
  }
}
