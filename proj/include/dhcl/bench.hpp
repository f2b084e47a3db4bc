#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dhcl/incremental.hpp"
#include "dhcl/labelling.hpp"
#include "dhcl/oracle.hpp"
#include "dhcl/workload.hpp"

namespace dhcl {

inline double mean_micros_of(const std::vector<std::uint64_t>& nanos) {
  if (nanos.empty()) return 0.0;
  std::uint64_t total = 0;
  for (const std::uint64_t x : nanos) total += x;
  return double(total) / double(nanos.size()) / 1000.0;
}

// Nearest-rank percentile; copies and sorts.
inline std::uint64_t percentile_of(std::vector<std::uint64_t> xs, double p) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  std::size_t idx = std::size_t(p / 100.0 * double(xs.size()));
  if (idx >= xs.size()) idx = xs.size() - 1;
  return xs[idx];
}

struct UpdateBenchOptions {
  bool verify = false;        // recompute the ground truth after every op (slow)
  std::size_t sweep_every = 0;  // emit a cumulative-time checkpoint each N applied ops
  bool compare_rebuild = false;  // time a from-scratch build of the final graph
};

struct UpdateBenchReport {
  std::uint64_t applied = 0, skipped = 0;
  std::vector<std::uint64_t> per_update_micros;  // one per workload op
  std::vector<double> per_update_affected_fraction;
  std::vector<std::uint8_t> per_update_applied;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> checkpoints;  // applied ops, cum micros
  std::uint64_t total_micros = 0;
  std::uint64_t rebuild_micros = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t affected_union_total = 0;
  std::uint64_t landmarks_skipped = 0;
  std::uint64_t find_visited = 0;
  std::uint64_t repair_visited = 0;
  std::uint64_t repair_visit_budget = 0;
  std::uint64_t entries_added = 0;
  std::uint64_t entries_modified = 0;
  std::uint64_t entries_removed = 0;
  std::uint64_t highway_updates = 0;

  std::vector<std::uint64_t> applied_micros() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < per_update_micros.size(); ++i)
      if (per_update_applied[i]) out.push_back(per_update_micros[i]);
    return out;
  }
  double mean_applied_micros() const {
    const auto xs = applied_micros();
    if (xs.empty()) return 0.0;
    std::uint64_t t = 0;
    for (const std::uint64_t x : xs) t += x;
    return double(t) / double(xs.size());
  }
  std::uint64_t median_applied_micros() const { return percentile_of(applied_micros(), 50.0); }
  std::uint64_t p99_applied_micros() const { return percentile_of(applied_micros(), 99.0); }
};

// Plays an insertion trace against the graph and labelling in place.
inline UpdateBenchReport run_update_bench(Graph& g, Labelling& gamma, const Workload& w,
                                          const UpdateBenchOptions& opts = {}) {
  UpdateBenchReport r;
  UpdateWorkspace ws;
  std::uint64_t since_sweep = 0;

  for (const InsertOp& op : w.inserts) {
    UpdateStats st;
    if (op.kind == InsertOp::Kind::Edge)
      st = apply_edge_insertion(g, gamma, op.edge, ws);
    else
      st = apply_vertex_insertion(g, gamma, std::span<const Vertex>(op.attach), ws);

    const double n = double(g.vertex_count());
    const double frac = st.applied ? std::min(1.0, double(st.affected_union) / n) : 0.0;
    r.per_update_micros.push_back(st.wall_micros);
    r.per_update_affected_fraction.push_back(frac);
    r.per_update_applied.push_back(st.applied ? 1 : 0);
    r.total_micros += st.wall_micros;
    if (st.applied) {
      ++r.applied;
      ++since_sweep;
    } else {
      ++r.skipped;
    }
    r.affected_union_total += st.affected_union;
    r.landmarks_skipped += st.landmarks_skipped;
    r.find_visited += st.find_visited;
    r.repair_visited += st.repair_visited;
    r.repair_visit_budget += st.repair_visit_budget;
    r.entries_added += st.entries_added;
    r.entries_modified += st.entries_modified;
    r.entries_removed += st.entries_removed;
    r.highway_updates += st.highway_updates;

    if (opts.verify) {
      Landmarks lm(std::vector<Vertex>(gamma.landmarks.ids().begin(), gamma.landmarks.ids().end()),
                   g.vertex_count());
      const Labelling truth = canonical_labelling(g, std::move(lm));
      if (!diff_labellings(gamma, truth).empty()) ++r.oracle_mismatches;
    }
    if (opts.sweep_every && since_sweep == opts.sweep_every) {
      r.checkpoints.emplace_back(r.applied, r.total_micros);
      since_sweep = 0;
    }
  }
  if (opts.sweep_every && since_sweep) r.checkpoints.emplace_back(r.applied, r.total_micros);

  if (opts.compare_rebuild) {
    Landmarks lm(std::vector<Vertex>(gamma.landmarks.ids().begin(), gamma.landmarks.ids().end()),
                 g.vertex_count());
    const auto t0 = std::chrono::steady_clock::now();
    const Labelling rebuilt = build_labelling(g, std::move(lm));
    r.rebuild_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    (void)rebuilt;
  }
  return r;
}

struct QueryBenchReport {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_query_nanos;
  std::vector<std::int64_t> per_query_distance;  // -1: unreachable
  std::map<std::int64_t, std::uint64_t> distance_histogram;  // -1 bucket: unreachable

  double mean_micros() const { return mean_micros_of(per_query_nanos); }
  double median_micros() const { return double(percentile_of(per_query_nanos, 50.0)) / 1000.0; }
  double p99_micros() const { return double(percentile_of(per_query_nanos, 99.0)) / 1000.0; }
};

// Runs every pair, optionally sharded over threads. Distances land in a
// histogram; answers are deterministic, timings of course are not.
inline QueryBenchReport run_query_bench(const Graph& g, const Labelling& gamma, const Workload& w,
                                        unsigned threads = 1) {
  QueryBenchReport r;
  r.total = w.pairs.size();
  r.per_query_nanos.assign(w.pairs.size(), 0);
  r.per_query_distance.assign(w.pairs.size(), -1);
  if (w.pairs.empty()) return r;
  // Bad ids must surface here, not inside a worker thread.
  for (const auto& [u, v] : w.pairs)
    if (u >= g.vertex_count() || v >= g.vertex_count())
      throw std::out_of_range("query pair vertex id out of range");

  const std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(threads, w.pairs.size()));
  std::vector<std::map<std::int64_t, std::uint64_t>> hists(nthreads);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = w.pairs.size() * t / nthreads;
        const std::size_t hi = w.pairs.size() * (t + 1) / nthreads;
        SearchScratch scratch;
        for (std::size_t i = lo; i < hi; ++i) {
          const auto t0 = std::chrono::steady_clock::now();
          const QueryResult q = query(g, gamma, w.pairs[i].first, w.pairs[i].second, scratch);
          r.per_query_nanos[i] = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
          const std::int64_t key = q.distance.reachable() ? std::int64_t(q.distance.raw()) : -1;
          r.per_query_distance[i] = key;
          ++hists[t][key];
        }
      });
    }
  }
  for (const auto& h : hists)
    for (const auto& [key, cnt] : h) r.distance_histogram[key] += cnt;
  return r;
}

// Per-op fraction of vertices whose distance to some landmark changes,
// sorted descending. Works on private copies. With dry_run the edge ops are
// measured against the starting graph without being applied (vertex ops
// still apply, they have no meaning otherwise).
inline std::vector<double> affected_stats(const Graph& g0, const Labelling& gamma0,
                                          const Workload& w, bool dry_run) {
  Graph g = g0;
  Labelling gamma = gamma0;
  UpdateWorkspace ws;
  ws.ensure(gamma.landmarks.size());
  std::vector<double> fractions;
  fractions.reserve(w.inserts.size());

  for (const InsertOp& op : w.inserts) {
    if (op.kind == InsertOp::Kind::Vertex) {
      const UpdateStats st =
          apply_vertex_insertion(g, gamma, std::span<const Vertex>(op.attach), ws);
      fractions.push_back(std::min(1.0, double(st.affected_union) / double(g.vertex_count())));
      continue;
    }
    if (!dry_run) {
      const UpdateStats st = apply_edge_insertion(g, gamma, op.edge, ws);
      fractions.push_back(
          st.applied ? std::min(1.0, double(st.affected_union) / double(g.vertex_count())) : 0.0);
      continue;
    }
    const EdgeInsertion e = op.edge;
    if (e.a >= g.vertex_count() || e.b >= g.vertex_count())
      throw std::out_of_range("vertex id out of range");
    if (e.a == e.b || g.has_edge(e.a, e.b)) {
      fractions.push_back(0.0);
      continue;
    }
    ws.union_mark().resize(g.vertex_count());
    ws.union_mark().clear();
    std::uint64_t members = 0;
    for (std::uint32_t rk = 0; rk < gamma.landmarks.size(); ++rk) {
      const auto oriented = orient_and_filter(g, gamma, e, rk);
      if (!oriented) continue;
      const AffectedSet aff = find_affected(g, *oriented, rk, gamma, ws.rank(rk));
      for (const Vertex v : aff.members)
        if (!ws.union_mark().contains(v)) {
          ws.union_mark().set(v, 1);
          ++members;
        }
    }
    fractions.push_back(double(members) / double(g.vertex_count()));
  }
  std::sort(fractions.begin(), fractions.end(), std::greater<>());
  return fractions;
}

inline nlohmann::json update_report_json(const UpdateBenchReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "update_bench";
  j["ops"] = r.per_update_micros.size();
  j["applied"] = r.applied;
  j["skipped"] = r.skipped;
  j["total_micros"] = r.total_micros;
  j["mean_applied_micros"] = r.mean_applied_micros();
  j["median_applied_micros"] = r.median_applied_micros();
  j["p99_applied_micros"] = r.p99_applied_micros();
  j["affected_union_total"] = r.affected_union_total;
  j["landmarks_skipped"] = r.landmarks_skipped;
  j["find_visited"] = r.find_visited;
  j["repair_visited"] = r.repair_visited;
  j["repair_visit_budget"] = r.repair_visit_budget;
  j["entries_added"] = r.entries_added;
  j["entries_modified"] = r.entries_modified;
  j["entries_removed"] = r.entries_removed;
  j["highway_updates"] = r.highway_updates;
  j["oracle_mismatches"] = r.oracle_mismatches;
  if (r.rebuild_micros) j["rebuild_micros"] = r.rebuild_micros;
  if (!r.checkpoints.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [ops, micros] : r.checkpoints)
      arr.push_back({{"applied", ops}, {"cumulative_micros", micros}});
    j["checkpoints"] = arr;
  }
  return j;
}

inline nlohmann::json query_report_json(const QueryBenchReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "query_bench";
  j["queries"] = r.total;
  j["mean_micros"] = r.mean_micros();
  j["median_micros"] = r.median_micros();
  j["p99_micros"] = r.p99_micros();
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [d, cnt] : r.distance_histogram) hist[std::to_string(d)] = cnt;
  j["distance_histogram"] = hist;
  return j;
}

inline nlohmann::json stats_json(const std::vector<double>& fractions) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "affected_stats";
  j["ops"] = fractions.size();
  if (!fractions.empty()) {
    j["max"] = fractions.front();
    j["min"] = fractions.back();
    j["median"] = fractions[fractions.size() / 2];
  }
  j["fractions"] = fractions;
  return j;
}

inline void write_update_csv(std::ostream& out, const UpdateBenchReport& r) {
  out << "op,applied,micros,affected_fraction\n";
  for (std::size_t i = 0; i < r.per_update_micros.size(); ++i)
    out << i << "," << int(r.per_update_applied[i]) << "," << r.per_update_micros[i] << ","
        << r.per_update_affected_fraction[i] << "\n";
}

inline void write_stats_csv(std::ostream& out, const std::vector<double>& fractions) {
  out << "rank,fraction\n";
  for (std::size_t i = 0; i < fractions.size(); ++i) out << i << "," << fractions[i] << "\n";
}

}  // namespace dhcl
