#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "dhcl/workload.hpp"
#include "support/gen.hpp"

using namespace dhcl;

namespace {

bool same_ops(const Workload& x, const Workload& y) {
  if (x.inserts.size() != y.inserts.size()) return false;
  for (std::size_t i = 0; i < x.inserts.size(); ++i) {
    const InsertOp &a = x.inserts[i], &b = y.inserts[i];
    if (a.kind != b.kind || a.attach != b.attach) return false;
    if (a.edge.a != b.edge.a || a.edge.b != b.edge.b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("insertion sampling yields distinct absent edges") {
  const Graph g = gen::make_er(60, 150, 7);
  const Workload w = gen_insert_workload(g, 40, 1234);  // sparse request, rejection path
  REQUIRE(w.kind == WorkloadKind::InsertTrace);
  REQUIRE(w.seed == 1234);
  REQUIRE(w.inserts.size() == 40);

  std::set<std::pair<Vertex, Vertex>> seen;
  for (const InsertOp& op : w.inserts) {
    REQUIRE(op.kind == InsertOp::Kind::Edge);
    const auto [a, b] = op.edge;
    REQUIRE(a < 60);
    REQUIRE(b < 60);
    REQUIRE(a != b);
    REQUIRE_FALSE(g.has_edge(a, b));
    REQUIRE(seen.insert({std::min(a, b), std::max(a, b)}).second);
  }

  REQUIRE(same_ops(w, gen_insert_workload(g, 40, 1234)));
  REQUIRE_FALSE(same_ops(w, gen_insert_workload(g, 40, 1235)));

  // dense request takes the enumerate-and-shuffle path
  const Graph small = gen::make_er(30, 100, 8);
  const Workload dense = gen_insert_workload(small, 150, 5);
  REQUIRE(dense.inserts.size() == 150);
  std::set<std::pair<Vertex, Vertex>> ds;
  for (const InsertOp& op : dense.inserts) {
    REQUIRE_FALSE(small.has_edge(op.edge.a, op.edge.b));
    REQUIRE(ds.insert({std::min(op.edge.a, op.edge.b), std::max(op.edge.a, op.edge.b)}).second);
  }
}

TEST_CASE("asking for every non-edge returns exactly the complement") {
  const Graph p5 = gen::make_path(5);
  const Workload w = gen_insert_workload(p5, 6, 42);
  std::set<std::pair<Vertex, Vertex>> got;
  for (const InsertOp& op : w.inserts)
    got.insert({std::min(op.edge.a, op.edge.b), std::max(op.edge.a, op.edge.b)});
  const std::set<std::pair<Vertex, Vertex>> want{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}};
  REQUIRE(got == want);

  REQUIRE_THROWS_AS(gen_insert_workload(p5, 7, 42), std::invalid_argument);
}

TEST_CASE("query sampling covers the vertex range deterministically") {
  const Graph g = gen::make_er(50, 120, 9);
  const Workload w = gen_query_workload(g, 500, 77);
  REQUIRE(w.kind == WorkloadKind::QueryPairs);
  REQUIRE(w.pairs.size() == 500);
  for (const auto& [u, v] : w.pairs) {
    REQUIRE(u < 50);
    REQUIRE(v < 50);
  }
  REQUIRE(gen_query_workload(g, 500, 77).pairs == w.pairs);

  REQUIRE_THROWS_AS(gen_query_workload(Graph(0), 5, 1), std::invalid_argument);
}

TEST_CASE("workload files roundtrip including the seed") {
  SECTION("insert trace") {
    const Graph g = gen::make_er(40, 80, 3);
    Workload w = gen_insert_workload(g, 25, 99);
    w.inserts.push_back({InsertOp::Kind::Vertex, {0, 0}, {4, 17}});
    std::stringstream buf;
    save_workload(buf, w);
    const Workload back = load_insert_trace(buf);
    REQUIRE(back.seed == 99);
    REQUIRE(same_ops(back, w));
  }
  SECTION("query pairs") {
    const Graph g = gen::make_er(40, 80, 3);
    const Workload w = gen_query_workload(g, 30, 12);
    std::stringstream buf;
    save_workload(buf, w);
    const Workload back = load_query_pairs(buf);
    REQUIRE(back.seed == 12);
    REQUIRE(back.pairs == w.pairs);
  }
}

TEST_CASE("trace parser accepts the documented line forms") {
  std::stringstream in(
      "# dhcl workload kind=insert seed=99\n"
      "E 0 3\r\n"
      "V 1 2\n"
      "\n"
      "% stray comment\n"
      "4 0\n");
  const Workload w = load_insert_trace(in);
  REQUIRE(w.seed == 99);
  REQUIRE(w.inserts.size() == 3);
  REQUIRE(w.inserts[0].kind == InsertOp::Kind::Edge);
  REQUIRE(w.inserts[0].edge.a == 0);
  REQUIRE(w.inserts[0].edge.b == 3);
  REQUIRE(w.inserts[1].kind == InsertOp::Kind::Vertex);
  REQUIRE(w.inserts[1].attach == std::vector<Vertex>{1, 2});
  REQUIRE(w.inserts[2].edge.a == 4);
  REQUIRE(w.inserts[2].edge.b == 0);
}

TEST_CASE("trace parser reports the offending line") {
  auto load = [](const char* text) {
    std::stringstream in(text);
    return load_insert_trace(in);
  };
  REQUIRE_THROWS_WITH(load("# seed=1\nE 1\n"), "line 2: edge op needs exactly two vertex ids");
  REQUIRE_THROWS_WITH(load("V\n"), "line 1: vertex op needs at least one neighbor");
  REQUIRE_THROWS_WITH(load("E x y\n"), "line 1: bad vertex id");
  REQUIRE_THROWS_WITH(load("1 2 3\n"), "line 1: expected 'E u v', 'V n1 n2 ...', or 'u v'");
  REQUIRE_THROWS_WITH(load("E 1 4294967296\n"), "line 1: vertex id too large");

  std::stringstream q("0 1\n1 2 3\n");
  REQUIRE_THROWS_WITH(load_query_pairs(q), "line 2: expected 'u v'");
}
