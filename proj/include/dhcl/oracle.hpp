#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dhcl/labelling.hpp"

// Slow reference implementations used to check the real ones. Everything
// here recomputes from scratch with plain BFS and the textbook definitions;
// none of it shares code paths with the incremental machinery.

namespace dhcl {

inline std::vector<Dist> bfs_all_distances(const Graph& g, Vertex s) {
  if (s >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
  std::vector<Dist> dist(g.vertex_count(), Dist::inf());
  std::vector<Vertex> frontier{s}, next;
  dist[s] = Dist::zero();
  std::uint32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (const Vertex x : frontier)
      for (const Vertex w : g.neighbors(x))
        if (!dist[w].reachable()) {
          dist[w] = Dist(d);
          next.push_back(w);
        }
    frontier.swap(next);
  }
  return dist;
}

// Ground-truth labelling built from full BFS trees. A vertex keeps its entry
// for landmark r unless some other landmark s sits on a shortest r..v path,
// which is exactly the triangle identity d(r,s) + d(s,v) == d(r,v).
inline Labelling canonical_labelling(const Graph& g, Landmarks landmarks) {
  const std::uint32_t k = landmarks.size();
  std::vector<std::vector<Dist>> dist(k);
  for (std::uint32_t r = 0; r < k; ++r) dist[r] = bfs_all_distances(g, landmarks.id_of(r));

  Labelling gamma{std::move(landmarks), Highway(k), std::vector<VertexLabel>(g.vertex_count())};
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j)
      gamma.highway.set(i, j, dist[i][gamma.landmarks.id_of(j)]);

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (gamma.landmarks.is_landmark(v)) continue;
    for (std::uint32_t r = 0; r < k; ++r) {
      const Dist d = dist[r][v];
      if (!d.reachable()) continue;
      bool covered = false;
      for (std::uint32_t s = 0; s < k && !covered; ++s) {
        if (s == r) continue;
        covered = dist[r][gamma.landmarks.id_of(s)] + dist[s][v] == d;
      }
      if (!covered) gamma.labels[v].push_back({r, d});
    }
  }
  return gamma;
}

// Vertices whose distance from `root` drops (or that gain a new shortest
// path) when edge a-b lands, straight from the definition: post-insertion
// BFS from root and from b, membership iff some shortest root..v path runs
// root ..a-b.. v. Ascending vertex order.
inline std::vector<Vertex> affected_oracle(const Graph& g_after, Vertex a, Vertex b, Vertex root) {
  const std::vector<Dist> dr = bfs_all_distances(g_after, root);
  const std::vector<Dist> db = bfs_all_distances(g_after, b);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g_after.vertex_count(); ++v) {
    if (!dr[v].reachable() || !db[v].reachable()) continue;
    if (dr[a] + 1u + db[v] == dr[v]) out.push_back(v);
  }
  return out;
}

struct LabellingDiff {
  struct EntryDelta {
    Vertex vertex;
    Vertex landmark_id;
    std::optional<Dist> lhs, rhs;
  };
  struct HighwayDelta {
    Vertex id_a, id_b;
    Dist lhs, rhs;
  };
  std::vector<EntryDelta> entries;
  std::vector<HighwayDelta> highway;

  bool empty() const { return entries.empty() && highway.empty(); }

  std::string to_string(std::size_t max_items = 10) const {
    std::ostringstream os;
    auto fmt = [](std::optional<Dist> d) -> std::string {
      if (!d) return "none";
      if (!d->reachable()) return "inf";
      return std::to_string(d->raw());
    };
    std::size_t shown = 0;
    for (const EntryDelta& e : entries) {
      if (shown == max_items) break;
      os << "label v" << e.vertex << " / landmark " << e.landmark_id << ": " << fmt(e.lhs)
         << " vs " << fmt(e.rhs) << "\n";
      ++shown;
    }
    for (const HighwayDelta& h : highway) {
      if (shown == max_items) break;
      os << "highway " << h.id_a << ".." << h.id_b << ": " << fmt(h.lhs) << " vs " << fmt(h.rhs)
         << "\n";
      ++shown;
    }
    const std::size_t total = entries.size() + highway.size();
    if (total > shown) os << "(" << total - shown << " more)\n";
    return os.str();
  }
};

// Structural comparison keyed by landmark vertex id, so two labellings that
// picked the same landmarks in different rank order still compare equal.
inline LabellingDiff diff_labellings(const Labelling& x, const Labelling& y) {
  if (x.labels.size() != y.labels.size())
    throw std::invalid_argument("labellings cover different vertex counts");
  const std::uint32_t k = x.landmarks.size();
  if (k != y.landmarks.size())
    throw std::invalid_argument("labellings use different landmark counts");
  for (const Vertex id : x.landmarks.ids())
    if (y.landmarks.rank_of(id) == Landmarks::kNoRank)
      throw std::invalid_argument("labellings use different landmark sets");

  LabellingDiff diff;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) {
      const Vertex ia = x.landmarks.id_of(i), ib = x.landmarks.id_of(j);
      const Dist dx = x.highway.at(i, j);
      const Dist dy = y.highway.at(y.landmarks.rank_of(ia), y.landmarks.rank_of(ib));
      if (dx != dy) diff.highway.push_back({ia, ib, dx, dy});
    }

  for (Vertex v = 0; v < x.labels.size(); ++v) {
    std::unordered_map<Vertex, Dist> lhs, rhs;
    for (const LabelEntry& e : x.labels[v]) lhs.emplace(x.landmarks.id_of(e.rank), e.dist);
    for (const LabelEntry& e : y.labels[v]) rhs.emplace(y.landmarks.id_of(e.rank), e.dist);
    for (const auto& [id, d] : lhs) {
      const auto it = rhs.find(id);
      if (it == rhs.end())
        diff.entries.push_back({v, id, d, std::nullopt});
      else if (it->second != d)
        diff.entries.push_back({v, id, d, it->second});
    }
    for (const auto& [id, d] : rhs)
      if (!lhs.count(id)) diff.entries.push_back({v, id, std::nullopt, d});
  }
  return diff;
}

}  // namespace dhcl
