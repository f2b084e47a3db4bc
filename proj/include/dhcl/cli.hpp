#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dhcl/bench.hpp"

namespace dhcl::cli {

namespace detail {

inline std::ifstream open_in(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

inline LoadedGraph load_graph_file(const std::string& path) {
  auto f = open_in(path);
  return load_graph_auto(f);
}

inline Labelling load_labelling_file(const std::string& path, std::size_t vertex_count) {
  auto f = open_in(path);
  return load_labelling(f, vertex_count);
}

inline Landmarks same_landmarks(const Labelling& gamma, std::size_t vertex_count) {
  return Landmarks(
      std::vector<Vertex>(gamma.landmarks.ids().begin(), gamma.landmarks.ids().end()),
      vertex_count);
}

}  // namespace detail

// Exit codes: 0 fine, 1 usage or input trouble, 2 a verification found the
// labelling wrong.
inline int run(int argc, char** argv) {
  CLI::App app{"dynamic highway cover distance labelling"};
  app.require_subcommand(1);

  std::string graph_path, labelling_path, trace_path, pairs_path, out_path, csv_path;
  std::string kind = "insert";
  std::uint32_t landmark_count = 20;
  std::uint64_t seed = 1, count = 1000;
  std::uint64_t qu = 0, qv = 0;
  unsigned threads = 1;
  bool verify = false, dry_run = false, report = false;
  std::uint64_t sweep_every = 0;
  std::string save_graph_path, save_labelling_path;

  CLI::App* build = app.add_subcommand("build", "build a labelling from a graph");
  build->add_option("--graph", graph_path, "edge list or graph snapshot")->required();
  build->add_option("--landmarks", landmark_count, "how many landmarks to pick")
      ->check(CLI::PositiveNumber);
  build->add_option("--out", out_path, "labelling output file")->required();

  CLI::App* query_cmd = app.add_subcommand("query", "answer distance queries");
  query_cmd->add_option("--graph", graph_path)->required();
  query_cmd->add_option("--labelling", labelling_path)->required();
  query_cmd->add_option("--pairs", pairs_path, "file of 'u v' lines");
  query_cmd->add_option("--u", qu, "single query source");
  query_cmd->add_option("--v", qv, "single query target");
  query_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  query_cmd->add_flag("--report", report, "timing report as JSON on stderr");

  CLI::App* update = app.add_subcommand("update", "play an insertion trace");
  update->add_option("--graph", graph_path)->required();
  update->add_option("--labelling", labelling_path)->required();
  update->add_option("--trace", trace_path)->required();
  update->add_flag("--verify", verify, "check against a fresh ground truth after every op");
  update->add_option("--sweep", sweep_every, "checkpoint cumulative time every N applied ops");
  update->add_option("--csv", csv_path, "write per-update rows to this file");
  update->add_option("--save-graph", save_graph_path, "write the updated graph snapshot");
  update->add_option("--save-labelling", save_labelling_path, "write the updated labelling");

  CLI::App* gen = app.add_subcommand("gen", "generate a workload");
  gen->add_option("--graph", graph_path)->required();
  gen->add_option("--kind", kind)->check(CLI::IsMember({"insert", "query"}));
  gen->add_option("--count", count);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path)->required();

  CLI::App* stats = app.add_subcommand("stats", "affected-vertex fractions for a trace");
  stats->add_option("--graph", graph_path)->required();
  stats->add_option("--labelling", labelling_path)->required();
  stats->add_option("--trace", trace_path)->required();
  stats->add_flag("--dry-run", dry_run, "measure edge ops without applying them");
  stats->add_option("--csv", csv_path, "write rank,fraction rows to this file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "rebuild-and-compare over a whole trace");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--landmarks", landmark_count)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trace", trace_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // collapse CLI11's exit-code zoo: anything but help/version is a plain usage error
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) {
      LoadedGraph lg = detail::load_graph_file(graph_path);
      const auto t0 = std::chrono::steady_clock::now();
      Labelling gamma = build_labelling(lg.graph, select_landmarks(lg.graph, landmark_count));
      const std::uint64_t micros = std::chrono::duration_cast<std::chrono::microseconds>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count();
      {
        auto f = detail::open_out(out_path);
        save_labelling(f, gamma);
      }
      {
        // external ids, one per line, line number = internal id
        auto f = detail::open_out(out_path + ".ids");
        for (const std::uint64_t id : lg.external_ids) f << id << "\n";
      }
      const LabellingSize sz = labelling_size(gamma);
      nlohmann::json j;
      j["schema"] = 1;
      j["kind"] = "build_report";
      j["n"] = lg.graph.vertex_count();
      j["m"] = lg.graph.edge_count();
      j["landmarks"] = gamma.landmarks.size();
      j["entries"] = sz.entries;
      j["bytes"] = sz.bytes;
      j["build_micros"] = micros;
      j["out"] = out_path;
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (query_cmd->parsed()) {
      LoadedGraph lg = detail::load_graph_file(graph_path);
      const Labelling gamma = detail::load_labelling_file(labelling_path, lg.graph.vertex_count());
      const bool single = query_cmd->count("--u") || query_cmd->count("--v");
      if (single == !pairs_path.empty())
        throw std::runtime_error("need either --pairs or both --u and --v");
      if (single) {
        if (!query_cmd->count("--u") || !query_cmd->count("--v"))
          throw std::runtime_error("need either --pairs or both --u and --v");
        const QueryResult q = query(lg.graph, gamma, Vertex(qu), Vertex(qv));
        std::cout << (q.distance.reachable() ? std::int64_t(q.distance.raw()) : -1) << "\n";
        return 0;
      }
      auto f = detail::open_in(pairs_path);
      const Workload w = load_query_pairs(f);
      const QueryBenchReport r = run_query_bench(lg.graph, gamma, w, threads);
      for (const std::int64_t d : r.per_query_distance) std::cout << d << "\n";
      if (report) std::cerr << query_report_json(r).dump() << "\n";
      return 0;
    }

    if (update->parsed()) {
      LoadedGraph lg = detail::load_graph_file(graph_path);
      Labelling gamma = detail::load_labelling_file(labelling_path, lg.graph.vertex_count());
      Workload w;
      {
        auto f = detail::open_in(trace_path);
        w = load_insert_trace(f);
      }
      UpdateBenchOptions opts;
      opts.verify = verify;
      opts.sweep_every = sweep_every;
      const UpdateBenchReport r = run_update_bench(lg.graph, gamma, w, opts);
      if (!csv_path.empty()) {
        auto f = detail::open_out(csv_path);
        write_update_csv(f, r);
      }
      if (!save_graph_path.empty()) {
        auto f = detail::open_out(save_graph_path);
        save_graph_snapshot(f, lg.graph);
      }
      if (!save_labelling_path.empty()) {
        auto f = detail::open_out(save_labelling_path);
        save_labelling(f, gamma);
      }
      std::cout << update_report_json(r).dump() << "\n";
      if (r.oracle_mismatches) {
        std::cerr << "verification failed on " << r.oracle_mismatches << " of " << w.inserts.size()
                  << " ops\n";
        return 2;
      }
      return 0;
    }

    if (gen->parsed()) {
      LoadedGraph lg = detail::load_graph_file(graph_path);
      const Workload w = kind == "insert" ? gen_insert_workload(lg.graph, count, seed)
                                          : gen_query_workload(lg.graph, count, seed);
      auto f = detail::open_out(out_path);
      save_workload(f, w);
      std::cerr << "wrote " << (kind == "insert" ? w.inserts.size() : w.pairs.size()) << " "
                << kind << " ops to " << out_path << "\n";
      return 0;
    }

    if (stats->parsed()) {
      LoadedGraph lg = detail::load_graph_file(graph_path);
      const Labelling gamma = detail::load_labelling_file(labelling_path, lg.graph.vertex_count());
      Workload w;
      {
        auto f = detail::open_in(trace_path);
        w = load_insert_trace(f);
      }
      const std::vector<double> fr = affected_stats(lg.graph, gamma, w, dry_run);
      if (!csv_path.empty()) {
        auto f = detail::open_out(csv_path);
        write_stats_csv(f, fr);
      }
      std::cout << stats_json(fr).dump() << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      LoadedGraph lg = detail::load_graph_file(graph_path);
      Workload w;
      {
        auto f = detail::open_in(trace_path);
        w = load_insert_trace(f);
      }
      Labelling gamma = build_labelling(lg.graph, select_landmarks(lg.graph, landmark_count));
      std::uint64_t bad = 0;
      auto check = [&](std::size_t opno) {
        const Labelling truth =
            canonical_labelling(lg.graph, detail::same_landmarks(gamma, lg.graph.vertex_count()));
        const LabellingDiff d = diff_labellings(gamma, truth);
        if (!d.empty()) {
          ++bad;
          std::cerr << "mismatch after op " << opno << ":\n" << d.to_string();
        }
      };
      check(0);
      UpdateWorkspace ws;
      for (std::size_t i = 0; i < w.inserts.size(); ++i) {
        const InsertOp& op = w.inserts[i];
        if (op.kind == InsertOp::Kind::Edge)
          apply_edge_insertion(lg.graph, gamma, op.edge, ws);
        else
          apply_vertex_insertion(lg.graph, gamma, std::span<const Vertex>(op.attach), ws);
        check(i + 1);
      }
      if (bad) {
        std::cerr << bad << " of " << w.inserts.size() + 1 << " states mismatched\n";
        return 2;
      }
      std::cerr << "ok: " << w.inserts.size() << " ops, labelling exact throughout\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace dhcl::cli
