#include <catch2/catch_amalgamated.hpp>

#include "dhcl/oracle.hpp"
#include "support/gen.hpp"

using namespace dhcl;

TEST_CASE("single-source distances") {
  const std::vector<Dist> path = bfs_all_distances(gen::make_path(5), 0);
  REQUIRE(path == std::vector<Dist>{Dist(0), Dist(1), Dist(2), Dist(3), Dist(4)});

  Graph split(4);
  split.insert_edge(0, 1);
  const std::vector<Dist> d = bfs_all_distances(split, 0);
  REQUIRE(d == std::vector<Dist>{Dist(0), Dist(1), Dist::inf(), Dist::inf()});

  const std::vector<Dist> ring = bfs_all_distances(gen::make_cycle(6), 2);
  REQUIRE(ring == std::vector<Dist>{Dist(2), Dist(1), Dist(0), Dist(1), Dist(2), Dist(3)});
}

TEST_CASE("reference labelling of the five-vertex path") {
  const Graph g = gen::make_path(5);
  const Labelling gamma = canonical_labelling(g, Landmarks({0, 4}, 5));

  REQUIRE(gamma.highway.at(0, 1) == Dist(4));
  REQUIRE(gamma.labels[0].empty());
  REQUIRE(gamma.labels[4].empty());
  REQUIRE(gamma.labels[1].entries() == std::vector<LabelEntry>{{0, Dist(1)}, {1, Dist(3)}});
  REQUIRE(gamma.labels[2].entries() == std::vector<LabelEntry>{{0, Dist(2)}, {1, Dist(2)}});
  REQUIRE(gamma.labels[3].entries() == std::vector<LabelEntry>{{0, Dist(3)}, {1, Dist(1)}});
}

TEST_CASE("brute-force affected sets") {
  Graph p5 = gen::make_path(5);
  p5.insert_edge(0, 3);
  REQUIRE(affected_oracle(p5, 0, 3, 0) == std::vector<Vertex>{2, 3, 4});

  Graph shortcut = gen::make_path(5);
  shortcut.insert_edge(0, 4);
  REQUIRE(affected_oracle(shortcut, 0, 4, 0) == std::vector<Vertex>{3, 4});
  REQUIRE(affected_oracle(shortcut, 4, 0, 4) == std::vector<Vertex>{0, 1});

  Graph c4 = gen::make_cycle(4);
  c4.insert_edge(1, 3);
  REQUIRE(affected_oracle(c4, 1, 3, 0).empty());

  Graph split(5);
  split.insert_edge(0, 1);
  split.insert_edge(2, 3);
  split.insert_edge(3, 4);
  REQUIRE(affected_oracle(split, 3, 4, 0).empty());  // root cannot reach the edge
}

TEST_CASE("labelling diff pinpoints entry and highway changes") {
  const Graph before = gen::make_path(5);
  Graph after = before;
  after.insert_edge(0, 4);
  const Landmarks lm({0, 4}, 5);
  const Labelling x = canonical_labelling(before, lm);
  const Labelling y = canonical_labelling(after, lm);

  const LabellingDiff d = diff_labellings(x, y);
  REQUIRE(d.entries.size() == 2);
  REQUIRE(d.entries[0].vertex == 1);
  REQUIRE(d.entries[0].landmark_id == 4);
  REQUIRE(d.entries[0].lhs == Dist(3));
  REQUIRE_FALSE(d.entries[0].rhs.has_value());
  REQUIRE(d.entries[1].vertex == 3);
  REQUIRE(d.entries[1].landmark_id == 0);
  REQUIRE(d.entries[1].lhs == Dist(3));
  REQUIRE_FALSE(d.entries[1].rhs.has_value());
  REQUIRE(d.highway.size() == 1);
  REQUIRE(d.highway[0].id_a == 0);
  REQUIRE(d.highway[0].id_b == 4);
  REQUIRE(d.highway[0].lhs == Dist(4));
  REQUIRE(d.highway[0].rhs == Dist(1));

  const std::string s = d.to_string();
  REQUIRE(s.find("label v3 / landmark 0: 3 vs none") != std::string::npos);
  REQUIRE(s.find("highway 0..4: 4 vs 1") != std::string::npos);

  const std::string capped = d.to_string(1);
  REQUIRE(capped.find("(2 more)") != std::string::npos);

  REQUIRE(diff_labellings(x, x).empty());
}

TEST_CASE("diff ignores rank order but rejects different landmark sets") {
  const Graph g = gen::make_path(5);
  const Labelling a = canonical_labelling(g, Landmarks({0, 4}, 5));
  const Labelling b = canonical_labelling(g, Landmarks({4, 0}, 5));
  REQUIRE(diff_labellings(a, b).empty());
  REQUIRE_FALSE(a == b);  // ranks differ even though the content agrees

  const Labelling other = canonical_labelling(g, Landmarks({0, 2}, 5));
  REQUIRE_THROWS_AS(diff_labellings(a, other), std::invalid_argument);

  const Labelling one = canonical_labelling(g, Landmarks({0}, 5));
  REQUIRE_THROWS_AS(diff_labellings(a, one), std::invalid_argument);

  const Graph g6 = gen::make_path(6);
  const Labelling wide = canonical_labelling(g6, Landmarks({0, 4}, 6));
  REQUIRE_THROWS_AS(diff_labellings(a, wide), std::invalid_argument);
}
