#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dhcl/graph.hpp"

namespace dhcl {

// Lemire multiply-shift draw in [0, n). Unlike uniform_int_distribution this
// is byte-stable across standard libraries; the bias is negligible for any n
// far below 2^64.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return std::uint64_t((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

enum class WorkloadKind { InsertTrace, QueryPairs };

struct InsertOp {
  enum class Kind { Edge, Vertex };
  Kind kind = Kind::Edge;
  EdgeInsertion edge{0, 0};
  std::vector<Vertex> attach;  // Vertex ops only: neighbors of the new vertex
};

struct Workload {
  WorkloadKind kind = WorkloadKind::InsertTrace;
  std::uint64_t seed = 0;
  std::vector<InsertOp> inserts;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

// `count` distinct non-edges of g, uniformly without replacement. Enumerates
// when the request eats a decent share of the pool, otherwise rejection
// samples.
inline Workload gen_insert_workload(const Graph& g, std::size_t count, std::uint64_t seed) {
  const std::uint64_t n = g.vertex_count();
  const std::uint64_t total_pairs = n * (n - 1) / 2;
  if (total_pairs < g.edge_count()) throw std::logic_error("edge count exceeds pair count");
  const std::uint64_t possible = total_pairs - g.edge_count();
  if (count > possible)
    throw std::invalid_argument("requested more insertions than the graph has non-edges");

  Workload w;
  w.kind = WorkloadKind::InsertTrace;
  w.seed = seed;
  std::mt19937_64 rng(seed);

  auto push = [&](Vertex a, Vertex b) { w.inserts.push_back({InsertOp::Kind::Edge, {a, b}, {}}); };

  if (count * 3 >= possible) {
    std::vector<EdgeInsertion> pool;
    pool.reserve(possible);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (!g.has_edge(a, b)) pool.push_back({a, b});
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + bounded(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      push(pool[i].a, pool[i].b);
    }
    return w;
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(count * 2);
  while (w.inserts.size() < count) {
    const Vertex a = Vertex(bounded(rng, n));
    const Vertex b = Vertex(bounded(rng, n));
    if (a == b || g.has_edge(a, b)) continue;
    const Vertex lo = a < b ? a : b, hi = a < b ? b : a;
    if (!seen.insert(std::uint64_t(lo) * n + hi).second) continue;
    push(lo, hi);
  }
  return w;
}

// `count` vertex pairs, repeats and u==v allowed.
inline Workload gen_query_workload(const Graph& g, std::size_t count, std::uint64_t seed) {
  const std::uint64_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot sample queries from an empty graph");
  Workload w;
  w.kind = WorkloadKind::QueryPairs;
  w.seed = seed;
  std::mt19937_64 rng(seed);
  w.pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    w.pairs.emplace_back(Vertex(bounded(rng, n)), Vertex(bounded(rng, n)));
  return w;
}

inline void save_workload(std::ostream& out, const Workload& w) {
  out << "# dhcl workload kind=" << (w.kind == WorkloadKind::InsertTrace ? "insert" : "query")
      << " seed=" << w.seed << "\n";
  if (w.kind == WorkloadKind::InsertTrace) {
    for (const InsertOp& op : w.inserts) {
      if (op.kind == InsertOp::Kind::Edge) {
        out << "E " << op.edge.a << " " << op.edge.b << "\n";
      } else {
        out << "V";
        for (const Vertex v : op.attach) out << " " << v;
        out << "\n";
      }
    }
  } else {
    for (const auto& [u, v] : w.pairs) out << u << " " << v << "\n";
  }
  if (!out) throw std::runtime_error("workload write failed");
}

namespace detail {

inline bool parse_seed_comment(const std::string& line, std::uint64_t& seed) {
  const auto pos = line.find("seed=");
  if (pos == std::string::npos) return false;
  return parse_u64(line.substr(pos + 5, line.find(' ', pos) - (pos + 5)), seed);
}

inline Vertex parse_vertex(std::string_view s, std::size_t lineno) {
  std::uint64_t v;
  if (!parse_u64(s, v)) throw ParseError(lineno, "bad vertex id");
  if (v > 0xFFFFFFFFull) throw ParseError(lineno, "vertex id too large");
  return Vertex(v);
}

}  // namespace detail

// Lines are either "E u v", "V n1 n2 ..." (neighbors of a brand new vertex),
// or a bare "u v" edge pair. Ids are checked against the graph at apply
// time, not here, since vertex ops grow it.
inline Workload load_insert_trace(std::istream& in) {
  Workload w;
  w.kind = WorkloadKind::InsertTrace;
  std::string line;
  std::vector<std::string_view> tok;
  std::size_t lineno = 0;
  bool seed_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    detail::chomp_cr(line);
    if (!seed_seen && !line.empty() && (line[0] == '#' || line[0] == '%'))
      seed_seen = detail::parse_seed_comment(line, w.seed);
    if (!detail::tokenize_line(line, tok)) continue;
    if (tok[0] == "E") {
      if (tok.size() != 3) throw ParseError(lineno, "edge op needs exactly two vertex ids");
      w.inserts.push_back({InsertOp::Kind::Edge,
                           {detail::parse_vertex(tok[1], lineno), detail::parse_vertex(tok[2], lineno)},
                           {}});
    } else if (tok[0] == "V") {
      if (tok.size() < 2) throw ParseError(lineno, "vertex op needs at least one neighbor");
      InsertOp op;
      op.kind = InsertOp::Kind::Vertex;
      for (std::size_t i = 1; i < tok.size(); ++i)
        op.attach.push_back(detail::parse_vertex(tok[i], lineno));
      w.inserts.push_back(std::move(op));
    } else if (tok.size() == 2) {
      w.inserts.push_back({InsertOp::Kind::Edge,
                           {detail::parse_vertex(tok[0], lineno), detail::parse_vertex(tok[1], lineno)},
                           {}});
    } else {
      throw ParseError(lineno, "expected 'E u v', 'V n1 n2 ...', or 'u v'");
    }
  }
  return w;
}

inline Workload load_query_pairs(std::istream& in) {
  Workload w;
  w.kind = WorkloadKind::QueryPairs;
  std::string line;
  std::vector<std::string_view> tok;
  std::size_t lineno = 0;
  bool seed_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    detail::chomp_cr(line);
    if (!seed_seen && !line.empty() && (line[0] == '#' || line[0] == '%'))
      seed_seen = detail::parse_seed_comment(line, w.seed);
    if (!detail::tokenize_line(line, tok)) continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'u v'");
    w.pairs.emplace_back(detail::parse_vertex(tok[0], lineno), detail::parse_vertex(tok[1], lineno));
  }
  return w;
}

}  // namespace dhcl
