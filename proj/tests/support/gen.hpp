#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "dhcl/graph.hpp"
#include "dhcl/workload.hpp"

// Small graph builders shared by the tests. Deterministic for a given seed.

namespace gen {

using dhcl::bounded;
using dhcl::Graph;
using dhcl::Vertex;

inline Graph make_path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1);
  return g;
}

inline Graph make_cycle(std::size_t n) {
  Graph g = make_path(n);
  if (n >= 3) g.insert_edge(0, Vertex(n - 1));
  return g;
}

inline Graph make_star(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.insert_edge(0, v);
  return g;
}

inline Graph make_grid(std::size_t rows, std::size_t cols) {
  Graph g(rows * cols);
  auto at = [cols](std::size_t r, std::size_t c) { return Vertex(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.insert_edge(at(r, c), at(r, c + 1));
      if (r + 1 < rows) g.insert_edge(at(r, c), at(r + 1, c));
    }
  return g;
}

inline Graph make_er(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > n * (n - 1) / 2) throw std::invalid_argument("too many edges requested");
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::size_t placed = 0;
  while (placed < m) {
    const Vertex a = Vertex(bounded(rng, n));
    const Vertex b = Vertex(bounded(rng, n));
    if (g.insert_edge(a, b)) ++placed;
  }
  return g;
}

// Preferential attachment: each new vertex wires to `attach` distinct earlier
// vertices drawn proportionally to degree. Gives the heavy-tailed degrees the
// landmark picker likes.
inline Graph make_pa(std::size_t n, std::size_t attach, std::uint64_t seed) {
  if (attach == 0 || n <= attach) throw std::invalid_argument("bad attachment count");
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> chances;
  for (Vertex v = 1; v <= attach; ++v) {
    g.insert_edge(0, v);
    chances.push_back(0);
    chances.push_back(v);
  }
  for (Vertex v = Vertex(attach) + 1; v < n; ++v) {
    std::vector<Vertex> targets;
    while (targets.size() < attach) {
      const Vertex t = chances[bounded(rng, chances.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (const Vertex t : targets) {
      g.insert_edge(v, t);
      chances.push_back(v);
      chances.push_back(t);
    }
  }
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    for (const Vertex w : a.neighbors(v))
      if (v < w) g.insert_edge(v, w);
  const Vertex off = Vertex(a.vertex_count());
  for (Vertex v = 0; v < b.vertex_count(); ++v)
    for (const Vertex w : b.neighbors(v))
      if (v < w) g.insert_edge(v + off, w + off);
  return g;
}

inline dhcl::EdgeInsertion random_non_edge(const Graph& g, std::mt19937_64& rng) {
  for (int tries = 0; tries < 1'000'000; ++tries) {
    const Vertex a = Vertex(bounded(rng, g.vertex_count()));
    const Vertex b = Vertex(bounded(rng, g.vertex_count()));
    if (a != b && !g.has_edge(a, b)) return {a, b};
  }
  throw std::runtime_error("graph too dense to sample a non-edge");
}

}  // namespace gen
