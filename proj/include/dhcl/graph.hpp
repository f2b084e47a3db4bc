#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dhcl {

using Vertex = std::uint32_t;

struct EdgeInsertion {
  Vertex a = 0;
  Vertex b = 0;
};

// Undirected simple graph over dense 0-based ids. Neighbor lists are kept
// sorted ascending so membership tests are binary searches and serialized
// forms are canonical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::uint64_t edge_count() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adj_[v].data(), adj_[v].size()};
  }

  std::uint32_t degree(Vertex v) const {
    check_vertex(v);
    return static_cast<std::uint32_t>(adj_[v].size());
  }

  bool has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& la = adj_[a];
    return std::binary_search(la.begin(), la.end(), b);
  }

  // Returns false (and changes nothing) for self-loops and existing edges.
  bool insert_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return false;
    auto& la = adj_[a];
    auto it = std::lower_bound(la.begin(), la.end(), b);
    if (it != la.end() && *it == b) return false;
    la.insert(it, b);
    auto& lb = adj_[b];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
    ++edges_;
    return true;
  }

  bool insert_edge(EdgeInsertion e) { return insert_edge(e.a, e.b); }

  Vertex add_vertex() {
    adj_.emplace_back();
    return static_cast<Vertex>(adj_.size() - 1);
  }

  // Full structural audit; throws std::logic_error on any violation.
  void validate() const {
    std::uint64_t half_edges = 0;
    for (Vertex v = 0; v < adj_.size(); ++v) {
      const auto& l = adj_[v];
      half_edges += l.size();
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] >= adj_.size()) throw std::logic_error("neighbor id out of range");
        if (l[i] == v) throw std::logic_error("self-loop present");
        if (i > 0 && l[i - 1] >= l[i]) throw std::logic_error("neighbor list not strictly ascending");
        const auto& back = adj_[l[i]];
        if (!std::binary_search(back.begin(), back.end(), v))
          throw std::logic_error("asymmetric adjacency");
      }
    }
    if (half_edges != 2 * edges_) throw std::logic_error("edge count inconsistent with adjacency");
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= adj_.size()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<Vertex>> adj_;
  std::uint64_t edges_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  // external_ids[internal] = id as it appeared in the input, first-appearance order
  std::vector<std::uint64_t> external_ids;
};

namespace detail {

inline bool parse_u64(std::string_view tok, std::uint64_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && p == last;
}

// Splits on blanks/tabs; returns false for blank and comment lines.
inline bool tokenize_line(std::string_view line, std::vector<std::string_view>& toks) {
  toks.clear();
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i == line.size() || line[i] == '#' || line[i] == '%') return false;
  while (i < line.size()) {
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    toks.push_back(line.substr(i, j - i));
    i = j;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  }
  return !toks.empty();
}

inline void chomp_cr(std::string& s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
}

inline void write_u32le(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

inline void write_u64le(std::ostream& out, std::uint64_t v) {
  write_u32le(out, static_cast<std::uint32_t>(v));
  write_u32le(out, static_cast<std::uint32_t>(v >> 32));
}

inline std::uint32_t read_u32le(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error("truncated binary input");
  return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
         std::uint32_t(b[3]) << 24;
}

inline std::uint64_t read_u64le(std::istream& in) {
  const std::uint64_t lo = read_u32le(in);
  const std::uint64_t hi = read_u32le(in);
  return lo | hi << 32;
}

}  // namespace detail

// Text edge list: one "u v" pair per line, 64-bit unsigned decimal ids,
// '#'/'%' comment lines, blank lines and CRLF tolerated. Ids are compacted
// to 0..n-1 in first-appearance order; duplicate edges collapse and
// self-loops drop (the id still claims a slot).
inline LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph out;
  std::unordered_map<std::uint64_t, Vertex> remap;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto intern = [&](std::uint64_t id) {
    auto [it, fresh] = remap.try_emplace(id, static_cast<Vertex>(out.external_ids.size()));
    if (fresh) out.external_ids.push_back(id);
    return it->second;
  };

  std::string line;
  std::vector<std::string_view> toks;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    detail::chomp_cr(line);
    if (!detail::tokenize_line(line, toks)) continue;
    if (toks.size() != 2) throw ParseError(lineno, "expected two vertex ids");
    std::uint64_t u, v;
    if (!detail::parse_u64(toks[0], u) || !detail::parse_u64(toks[1], v))
      throw ParseError(lineno, "malformed vertex id");
    const Vertex iu = intern(u);
    const Vertex iv = intern(v);
    if (iu != iv) edges.emplace_back(iu, iv);
  }

  Graph g(out.external_ids.size());
  for (auto [u, v] : edges) g.insert_edge(u, v);
  out.graph = std::move(g);
  return out;
}

inline constexpr char kGraphMagic[6] = {'D', 'H', 'C', 'L', 'G', '1'};

inline void save_graph_snapshot(std::ostream& out, const Graph& g) {
  out.write(kGraphMagic, sizeof kGraphMagic);
  detail::write_u64le(out, g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto ns = g.neighbors(v);
    detail::write_u32le(out, static_cast<std::uint32_t>(ns.size()));
    for (Vertex w : ns) detail::write_u32le(out, w);
  }
  if (!out) throw std::runtime_error("graph snapshot write failed");
}

// Expects the stream positioned just past the magic.
inline Graph load_graph_snapshot_body(std::istream& in) {
  const std::uint64_t n = detail::read_u64le(in);
  Graph g(static_cast<std::size_t>(n));
  std::uint64_t listed = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t deg = detail::read_u32le(in);
    listed += deg;
    for (std::uint32_t i = 0; i < deg; ++i) {
      const Vertex w = detail::read_u32le(in);
      if (w >= n) throw std::runtime_error("graph snapshot: neighbor id out of range");
      if (w > v) g.insert_edge(v, w);  // each edge appears in both lists
    }
  }
  // A well-formed snapshot lists every edge exactly twice.
  if (listed != 2 * g.edge_count()) throw std::runtime_error("graph snapshot: adjacency not symmetric");
  g.validate();
  return g;
}

inline Graph load_graph_snapshot(std::istream& in) {
  char magic[6];
  if (!in.read(magic, 6) || std::memcmp(magic, kGraphMagic, 6) != 0)
    throw std::runtime_error("not a graph snapshot (bad magic)");
  return load_graph_snapshot_body(in);
}

// Sniffs the snapshot magic; falls back to the text edge-list dialect.
// Binary snapshots carry no external ids, so the mapping is the identity.
inline LoadedGraph load_graph_auto(std::istream& in) {
  char magic[6];
  in.read(magic, 6);
  const std::streamsize got = in.gcount();
  if (got == 6 && std::memcmp(magic, kGraphMagic, 6) == 0) {
    LoadedGraph out;
    out.graph = load_graph_snapshot_body(in);
    out.external_ids.resize(out.graph.vertex_count());
    for (std::size_t v = 0; v < out.external_ids.size(); ++v) out.external_ids[v] = v;
    return out;
  }
  in.clear();
  in.seekg(0);
  return load_edge_list(in);
}

}  // namespace dhcl
