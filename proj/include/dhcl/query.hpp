#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dhcl/epoch_array.hpp"
#include "dhcl/labelling.hpp"

namespace dhcl {

struct QueryResult {
  Dist distance;
  Dist bound_used;
  std::uint32_t search_expanded = 0;
};

// Distance from landmark (by rank) to any vertex, recovered from the vertex
// label routed through the highway. Exact, not just an upper bound, as long
// as the labelling is intact.
inline Dist root_distance(const Labelling& gamma, std::uint32_t rank, Vertex v) {
  if (rank >= gamma.landmarks.size()) throw std::out_of_range("landmark rank out of range");
  if (v >= gamma.labels.size()) throw std::out_of_range("vertex id out of range");
  const std::uint32_t vr = gamma.landmarks.rank_of(v);
  if (vr != Landmarks::kNoRank) return gamma.highway.at(rank, vr);
  Dist best = Dist::inf();
  for (const LabelEntry& e : gamma.labels[v]) {
    const Dist cand = e.dist + gamma.highway.at(rank, e.rank);
    if (cand < best) best = cand;
  }
  return best;
}

// Length of the best u..v walk through a pair of labelled landmarks. Upper
// bound on the true distance; exact whenever some shortest path meets a
// landmark. Both endpoints must be non-landmarks.
inline Dist upper_bound(const Labelling& gamma, Vertex u, Vertex v) {
  if (u >= gamma.labels.size() || v >= gamma.labels.size())
    throw std::out_of_range("vertex id out of range");
  if (gamma.landmarks.is_landmark(u) || gamma.landmarks.is_landmark(v))
    throw std::logic_error("upper_bound expects non-landmark endpoints");
  Dist best = Dist::inf();
  for (const LabelEntry& eu : gamma.labels[u])
    for (const LabelEntry& ev : gamma.labels[v]) {
      const Dist cand = eu.dist + gamma.highway.at(eu.rank, ev.rank) + ev.dist;
      if (cand < best) best = cand;
    }
  return best;
}

// Reusable bidirectional-BFS state. One per worker; queries never share one.
class SearchScratch {
 public:
  void ensure(std::size_t n) {
    depth_[0].resize(n);
    depth_[1].resize(n);
  }
  void begin() {
    depth_[0].clear();
    depth_[1].clear();
    frontier_[0].clear();
    frontier_[1].clear();
    next_[0].clear();
    next_[1].clear();
  }
  EpochArray<std::uint32_t>& depth(int s) { return depth_[s]; }
  std::vector<Vertex>& frontier(int s) { return frontier_[s]; }
  std::vector<Vertex>& next(int s) { return next_[s]; }

 private:
  EpochArray<std::uint32_t> depth_[2];
  std::vector<Vertex> frontier_[2], next_[2];
};

// Exact distance between two non-landmark vertices in the graph with all
// landmarks deleted, considering only paths shorter than `bound`
// (unreachable bound = unbounded). Bidirectional BFS expanding the smaller
// frontier; no vertex is expanded once the two completed depths rule out a
// path shorter than the bound. Returns the unreachable sentinel when no
// qualifying path exists.
inline Dist bounded_sparse_bfs(const Graph& g, const Landmarks& landmarks, Vertex u, Vertex v,
                               Dist bound, SearchScratch& s,
                               std::uint32_t* expanded_out = nullptr,
                               std::uint32_t* max_depth_expanded_out = nullptr) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw std::out_of_range("vertex id out of range");
  if (landmarks.is_landmark(u) || landmarks.is_landmark(v))
    throw std::logic_error("bounded_sparse_bfs expects non-landmark endpoints");
  if (expanded_out) *expanded_out = 0;
  if (max_depth_expanded_out) *max_depth_expanded_out = 0;
  if (u == v) return Dist::zero();

  s.ensure(g.vertex_count());
  s.begin();
  s.depth(0).set(u, 0);
  s.frontier(0).push_back(u);
  s.depth(1).set(v, 0);
  s.frontier(1).push_back(v);
  std::uint32_t expanded = 2;
  std::uint32_t done_depth[2] = {0, 0};
  std::uint32_t max_depth_expanded = 0;

  Dist result = Dist::inf();
  while (!s.frontier(0).empty() && !s.frontier(1).empty()) {
    // The next candidate meeting has length done_depth[0]+done_depth[1]+1;
    // once that reaches the bound nothing shorter can still be found.
    if (bound.reachable() &&
        std::uint64_t(done_depth[0]) + done_depth[1] + 1 >= bound.raw())
      break;
    const int side = s.frontier(0).size() <= s.frontier(1).size() ? 0 : 1;
    const std::uint32_t next_depth = done_depth[side] + 1;
    if (done_depth[side] > max_depth_expanded) max_depth_expanded = done_depth[side];
    auto& nxt = s.next(side);
    nxt.clear();
    for (const Vertex x : s.frontier(side)) {
      for (const Vertex w : g.neighbors(x)) {
        if (landmarks.is_landmark(w)) continue;
        if (s.depth(side).contains(w)) continue;
        if (const std::uint32_t* od = s.depth(1 - side).find(w)) {
          // First meeting during a full-level expansion is the exact distance.
          result = Dist(next_depth + *od);
          goto done;
        }
        s.depth(side).set(w, next_depth);
        nxt.push_back(w);
        ++expanded;
      }
    }
    s.frontier(side).swap(nxt);
    done_depth[side] = next_depth;
  }
done:
  if (expanded_out) *expanded_out = expanded;
  if (max_depth_expanded_out) *max_depth_expanded_out = max_depth_expanded;
  return result;
}

// Exact distance. Landmark endpoints resolve through the highway; the
// general case runs the label upper bound, then tries to beat it with a
// landmark-free search capped at that bound.
inline QueryResult query(const Graph& g, const Labelling& gamma, Vertex u, Vertex v,
                         SearchScratch& scratch) {
  if (gamma.labels.size() != g.vertex_count())
    throw std::invalid_argument("labelling and graph disagree on vertex count");
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw std::out_of_range("vertex id out of range");
  if (u == v) return {Dist::zero(), Dist::zero(), 0};

  const std::uint32_t ru = gamma.landmarks.rank_of(u);
  if (ru != Landmarks::kNoRank) {
    const Dist d = root_distance(gamma, ru, v);
    return {d, d, 0};
  }
  const std::uint32_t rv = gamma.landmarks.rank_of(v);
  if (rv != Landmarks::kNoRank) {
    const Dist d = root_distance(gamma, rv, u);
    return {d, d, 0};
  }

  const Dist bound = upper_bound(gamma, u, v);
  std::uint32_t expanded = 0;
  const Dist sparse = bounded_sparse_bfs(g, gamma.landmarks, u, v, bound, scratch, &expanded);
  return {sparse < bound ? sparse : bound, bound, expanded};
}

inline QueryResult query(const Graph& g, const Labelling& gamma, Vertex u, Vertex v) {
  SearchScratch scratch;
  return query(g, gamma, u, v, scratch);
}

}  // namespace dhcl
