#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dhcl/epoch_array.hpp"
#include "dhcl/query.hpp"

namespace dhcl {

// Inserted edge seen from one landmark: `near` is the endpoint the landmark
// reaches first. Insertions the landmark is equidistant from (or cannot
// reach at all) change none of its distances and are filtered out here.
struct OrientedInsertion {
  Vertex near, far;
  Dist near_dist;
};

inline std::optional<OrientedInsertion> orient_and_filter(const Graph&, const Labelling& gamma,
                                                          EdgeInsertion e, std::uint32_t rank) {
  const Dist da = root_distance(gamma, rank, e.a);
  const Dist db = root_distance(gamma, rank, e.b);
  if (da == db) return std::nullopt;
  if (da < db) return OrientedInsertion{e.a, e.b, da};
  return OrientedInsertion{e.b, e.a, db};
}

// Per-landmark scratch. new_depth doubles as the claimed set during the
// affected search and as the new-distance lookup during repair. old_dist
// memoizes pre-insertion distances of every vertex the search evaluated, so
// repair never reads label state that a later landmark's repair may have
// already rewritten.
class LandmarkWorkspace {
 public:
  static constexpr std::uint8_t kCovered = 1;
  static constexpr std::uint8_t kUncovered = 2;

  void begin(std::size_t n) {
    new_depth.resize(n);
    old_dist.resize(n);
    classification.resize(n);
    new_depth.clear();
    old_dist.clear();
    classification.clear();
    find_visited = 0;
  }

  EpochArray<std::uint32_t> new_depth;
  EpochArray<std::uint32_t> old_dist;
  EpochArray<std::uint8_t> classification;
  std::uint64_t find_visited = 0;
};

// Vertices whose distance from one landmark drops, in claim (BFS) order, so
// depths are nondecreasing and members doubles as the repair queue.
struct AffectedSet {
  std::uint32_t rank = 0;
  std::vector<Vertex> members;
  std::vector<Dist> depths;
};

// All vertices whose distance from the landmark shrinks once the edge goes
// in, each claimed at its post-insertion distance. Runs on the graph as it
// is before the insertion. A vertex at depth p+1 is affected iff its old
// distance was at least that; the FIFO order claims every vertex at its
// minimal achievable depth, which is exactly the new distance.
inline AffectedSet find_affected(const Graph& g_before, const OrientedInsertion& o,
                                 std::uint32_t rank, const Labelling& gamma,
                                 LandmarkWorkspace& ws) {
  ws.begin(g_before.vertex_count());
  AffectedSet aff;
  aff.rank = rank;
  ws.old_dist.set(o.near, o.near_dist.raw());
  ws.find_visited = 1;

  const std::uint32_t start_depth = (o.near_dist + 1u).raw();
  ws.new_depth.set(o.far, start_depth);
  aff.members.push_back(o.far);
  aff.depths.push_back(Dist(start_depth));

  for (std::size_t head = 0; head < aff.members.size(); ++head) {
    const Vertex x = aff.members[head];
    const std::uint32_t dx = aff.depths[head].raw();
    for (const Vertex w : g_before.neighbors(x)) {
      if (ws.new_depth.contains(w)) continue;
      std::uint32_t old;
      if (const std::uint32_t* memo = ws.old_dist.find(w)) {
        old = *memo;
      } else {
        old = root_distance(gamma, rank, w).raw();
        ws.old_dist.set(w, old);
        ++ws.find_visited;
      }
      if (Dist(old) >= Dist(dx + 1)) {
        ws.new_depth.set(w, dx + 1);
        aff.members.push_back(w);
        aff.depths.push_back(Dist(dx + 1));
      }
    }
  }
  ws.find_visited += aff.members.size();
  return aff;
}

// Does some shortest landmark..w path (in the post-insertion graph) pass
// through another landmark? Decided from w's parents one depth up: a parent
// that is another landmark, an unaffected vertex with no label entry for
// this landmark, or an affected vertex already classified covered, covers w.
// Parents outside both the affected set and the old-distance memo cannot lie
// on a shortest path and are skipped.
inline bool is_covered(const Graph& g_after, const Labelling& gamma, const LandmarkWorkspace& ws,
                       std::uint32_t rank, Vertex w, Dist depth) {
  const std::uint32_t wr = gamma.landmarks.rank_of(w);
  if (wr != Landmarks::kNoRank && wr != rank) return true;
  const std::uint32_t want = depth.raw() - 1;
  for (const Vertex p : g_after.neighbors(w)) {
    std::uint32_t dp;
    if (const std::uint32_t* nd = ws.new_depth.find(p)) {
      dp = *nd;
    } else if (const std::uint32_t* od = ws.old_dist.find(p)) {
      dp = *od;
    } else {
      continue;
    }
    if (dp != want) continue;
    const std::uint32_t pr = gamma.landmarks.rank_of(p);
    if (pr != Landmarks::kNoRank) {
      if (pr != rank) return true;
      continue;
    }
    if (const std::uint8_t* cls = ws.classification.find(p)) {
      if (*cls == LandmarkWorkspace::kCovered) return true;
      continue;
    }
    if (!gamma.labels[p].dist_to(rank)) return true;
  }
  return false;
}

struct RepairCounters {
  std::uint64_t processed = 0;
  std::uint64_t classify_scans = 0;
  std::uint64_t entries_added = 0;
  std::uint64_t entries_modified = 0;
  std::uint64_t entries_removed = 0;
  std::uint64_t highway_updates = 0;
};

// Rewrites labels and highway cells of the affected vertices to their
// post-insertion state. Level-synchronous: every vertex of depth d is
// classified (stamped) before anything at d+1 classifies, so the parent
// scans in is_covered only ever read settled verdicts. A child reached from
// a covered parent inherits covered outright: one covered parent on a
// shortest path is enough, no scan needed. Children that also have an
// uncovered parent are picked up by the uncovered sweep first and get the
// full scan there; both routes agree.
inline RepairCounters repair_affected(const Graph& g_after, const OrientedInsertion&,
                                      const AffectedSet& aff, std::uint32_t rank,
                                      Labelling& gamma, LandmarkWorkspace& ws) {
  RepairCounters c;
  if (aff.members.empty()) return c;

  auto apply_op = [&](Vertex w, std::uint32_t depth, bool covered) {
    const std::uint32_t wr = gamma.landmarks.rank_of(w);
    if (covered) {
      if (wr != Landmarks::kNoRank) {
        gamma.highway.set(rank, wr, Dist(depth));
        ++c.highway_updates;
      } else if (gamma.labels[w].erase(rank)) {
        ++c.entries_removed;
      }
    } else {
      if (gamma.labels[w].upsert(rank, Dist(depth)))
        ++c.entries_added;
      else
        ++c.entries_modified;
    }
    ++c.processed;
  };

  auto classify = [&](Vertex w, std::uint32_t depth) -> bool {
    const std::uint32_t wr = gamma.landmarks.rank_of(w);
    bool covered;
    if (wr != Landmarks::kNoRank) {
      covered = true;  // the root itself is never affected, so wr != rank here
    } else {
      c.classify_scans += g_after.degree(w);
      covered = is_covered(g_after, gamma, ws, rank, w, Dist(depth));
    }
    ws.classification.set(w, covered ? LandmarkWorkspace::kCovered : LandmarkWorkspace::kUncovered);
    return covered;
  };

  std::vector<Vertex> cur_unc, cur_cov, nxt_unc, nxt_cov;
  std::uint32_t depth = aff.depths.front().raw();
  {
    const Vertex b = aff.members.front();
    if (classify(b, depth))
      cur_cov.push_back(b);
    else
      cur_unc.push_back(b);
  }

  while (!cur_unc.empty() || !cur_cov.empty()) {
    nxt_unc.clear();
    nxt_cov.clear();
    for (const Vertex w : cur_unc) {
      apply_op(w, depth, false);
      for (const Vertex ch : g_after.neighbors(w)) {
        if (ws.classification.contains(ch)) continue;
        const std::uint32_t* nd = ws.new_depth.find(ch);
        if (!nd || *nd != depth + 1) continue;
        if (classify(ch, depth + 1))
          nxt_cov.push_back(ch);
        else
          nxt_unc.push_back(ch);
      }
    }
    for (const Vertex w : cur_cov) {
      apply_op(w, depth, true);
      for (const Vertex ch : g_after.neighbors(w)) {
        if (ws.classification.contains(ch)) continue;
        const std::uint32_t* nd = ws.new_depth.find(ch);
        if (!nd || *nd != depth + 1) continue;
        ws.classification.set(ch, LandmarkWorkspace::kCovered);
        nxt_cov.push_back(ch);
      }
    }
    cur_unc.swap(nxt_unc);
    cur_cov.swap(nxt_cov);
    ++depth;
  }

  if (c.processed != aff.members.size())
    throw std::logic_error("repair did not reach every affected vertex");
  return c;
}

struct UpdateStats {
  bool applied = false;
  std::uint64_t wall_micros = 0;
  std::vector<std::uint32_t> affected_per_landmark;
  std::uint64_t affected_union = 0;
  std::uint64_t landmarks_skipped = 0;
  std::uint64_t find_visited = 0;
  std::uint64_t repair_visited = 0;
  std::uint64_t repair_visit_budget = 0;
  std::uint64_t entries_added = 0;
  std::uint64_t entries_modified = 0;
  std::uint64_t entries_removed = 0;
  std::uint64_t highway_updates = 0;

  std::uint64_t total_affected() const {
    std::uint64_t t = 0;
    for (const std::uint32_t a : affected_per_landmark) t += a;
    return t;
  }
};

class UpdateWorkspace {
 public:
  void ensure(std::size_t k) {
    if (per_rank_.size() < k) per_rank_.resize(k);
  }
  LandmarkWorkspace& rank(std::uint32_t r) { return per_rank_.at(r); }
  EpochArray<std::uint8_t>& union_mark() { return union_mark_; }

 private:
  std::vector<LandmarkWorkspace> per_rank_;
  EpochArray<std::uint8_t> union_mark_;
};

// Inserts one edge and patches the labelling in place. Orientation and the
// affected searches run against the pre-insertion graph; repairs run on the
// updated one. Each landmark's repair reads only its own workspace plus
// pre-insertion distances memoized during its search, so landmark order does
// not matter. Self-loops and already-present edges leave everything alone.
inline UpdateStats apply_edge_insertion(Graph& g, Labelling& gamma, EdgeInsertion e,
                                        UpdateWorkspace& ws) {
  const auto t0 = std::chrono::steady_clock::now();
  if (gamma.labels.size() != g.vertex_count())
    throw std::invalid_argument("labelling and graph disagree on vertex count");
  if (e.a >= g.vertex_count() || e.b >= g.vertex_count())
    throw std::out_of_range("vertex id out of range");

  UpdateStats st;
  const std::uint32_t k = gamma.landmarks.size();
  st.affected_per_landmark.assign(k, 0);

  if (e.a == e.b || g.has_edge(e.a, e.b)) {
    st.wall_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return st;
  }

  ws.ensure(k);
  std::vector<std::optional<OrientedInsertion>> oriented(k);
  for (std::uint32_t r = 0; r < k; ++r) oriented[r] = orient_and_filter(g, gamma, e, r);

  std::vector<AffectedSet> affected(k);
  for (std::uint32_t r = 0; r < k; ++r) {
    if (!oriented[r]) {
      ++st.landmarks_skipped;
      continue;
    }
    affected[r] = find_affected(g, *oriented[r], r, gamma, ws.rank(r));
    st.find_visited += ws.rank(r).find_visited;
  }

  g.insert_edge(e);
  st.applied = true;

  ws.union_mark().resize(g.vertex_count());
  ws.union_mark().clear();
  for (std::uint32_t r = 0; r < k; ++r) {
    st.affected_per_landmark[r] = std::uint32_t(affected[r].members.size());
    for (const Vertex v : affected[r].members) {
      if (!ws.union_mark().contains(v)) {
        ws.union_mark().set(v, 1);
        ++st.affected_union;
      }
      st.repair_visit_budget += 1 + g.degree(v);
    }
  }

  for (std::uint32_t r = 0; r < k; ++r) {
    if (!oriented[r]) continue;
    const RepairCounters c = repair_affected(g, *oriented[r], affected[r], r, gamma, ws.rank(r));
    st.repair_visited += c.processed + c.classify_scans;
    st.entries_added += c.entries_added;
    st.entries_modified += c.entries_modified;
    st.entries_removed += c.entries_removed;
    st.highway_updates += c.highway_updates;
  }

  st.wall_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return st;
}

inline UpdateStats apply_edge_insertion(Graph& g, Labelling& gamma, EdgeInsertion e) {
  UpdateWorkspace ws;
  return apply_edge_insertion(g, gamma, e, ws);
}

// Adds a fresh vertex wired to `attach` and folds it in one edge at a time.
// The first insertion finds the whole affected set for the new vertex; the
// rest behave like ordinary edge insertions.
inline UpdateStats apply_vertex_insertion(Graph& g, Labelling& gamma,
                                          std::span<const Vertex> attach, UpdateWorkspace& ws) {
  if (attach.empty()) throw std::invalid_argument("vertex insertion needs at least one neighbor");
  for (const Vertex a : attach)
    if (a >= g.vertex_count()) throw std::out_of_range("attachment vertex id out of range");
  if (gamma.labels.size() != g.vertex_count())
    throw std::invalid_argument("labelling and graph disagree on vertex count");

  const Vertex nv = g.add_vertex();
  gamma.labels.emplace_back();

  std::vector<Vertex> targets(attach.begin(), attach.end());
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  UpdateStats total;
  total.applied = true;
  total.affected_per_landmark.assign(gamma.landmarks.size(), 0);
  for (const Vertex a : targets) {
    const UpdateStats st = apply_edge_insertion(g, gamma, {a, nv}, ws);
    total.wall_micros += st.wall_micros;
    for (std::size_t r = 0; r < st.affected_per_landmark.size(); ++r)
      total.affected_per_landmark[r] += st.affected_per_landmark[r];
    total.affected_union += st.affected_union;
    total.landmarks_skipped += st.landmarks_skipped;
    total.find_visited += st.find_visited;
    total.repair_visited += st.repair_visited;
    total.repair_visit_budget += st.repair_visit_budget;
    total.entries_added += st.entries_added;
    total.entries_modified += st.entries_modified;
    total.entries_removed += st.entries_removed;
    total.highway_updates += st.highway_updates;
  }
  return total;
}

inline UpdateStats apply_vertex_insertion(Graph& g, Labelling& gamma,
                                          std::span<const Vertex> attach) {
  UpdateWorkspace ws;
  return apply_vertex_insertion(g, gamma, attach, ws);
}

}  // namespace dhcl
