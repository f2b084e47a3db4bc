#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dhcl/distance.hpp"
#include "dhcl/graph.hpp"
#include "dhcl/landmarks.hpp"

namespace dhcl {

struct LabelEntry {
  std::uint32_t rank = 0;
  Dist dist;
  friend bool operator==(LabelEntry, LabelEntry) = default;
};

// Per-vertex label: at most one entry per landmark, kept sorted by rank.
class VertexLabel {
 public:
  const std::vector<LabelEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::optional<Dist> dist_to(std::uint32_t rank) const {
    auto it = lower(rank);
    if (it != entries_.end() && it->rank == rank) return it->dist;
    return std::nullopt;
  }

  // Returns true when a new entry was inserted, false when an existing one
  // was overwritten (possibly with the same value).
  bool upsert(std::uint32_t rank, Dist d) {
    auto it = lower(rank);
    if (it != entries_.end() && it->rank == rank) {
      it->dist = d;
      return false;
    }
    entries_.insert(it, LabelEntry{rank, d});
    return true;
  }

  bool erase(std::uint32_t rank) {
    auto it = lower(rank);
    if (it == entries_.end() || it->rank != rank) return false;
    entries_.erase(it);
    return true;
  }

  void push_back(LabelEntry e) {
    // Append path for builders that emit ranks in ascending order.
    if (!entries_.empty() && entries_.back().rank >= e.rank)
      throw std::logic_error("label entries must be appended in ascending rank order");
    entries_.push_back(e);
  }

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

 private:
  std::vector<LabelEntry>::iterator lower(std::uint32_t rank) {
    return std::lower_bound(entries_.begin(), entries_.end(), rank,
                            [](const LabelEntry& e, std::uint32_t r) { return e.rank < r; });
  }
  std::vector<LabelEntry>::const_iterator lower(std::uint32_t rank) const {
    return std::lower_bound(entries_.begin(), entries_.end(), rank,
                            [](const LabelEntry& e, std::uint32_t r) { return e.rank < r; });
  }

  std::vector<LabelEntry> entries_;
};

// Dense symmetric landmark-to-landmark distance table, zero diagonal.
class Highway {
 public:
  Highway() = default;
  explicit Highway(std::uint32_t landmark_count)
      : count_(landmark_count), cells_(std::size_t(landmark_count) * landmark_count, Dist::inf()) {
    for (std::uint32_t i = 0; i < count_; ++i) cells_[idx(i, i)] = Dist::zero();
  }

  std::uint32_t landmark_count() const { return count_; }

  Dist at(std::uint32_t i, std::uint32_t j) const {
    check(i);
    check(j);
    return cells_[idx(i, j)];
  }

  void set(std::uint32_t i, std::uint32_t j, Dist d) {
    check(i);
    check(j);
    cells_[idx(i, j)] = d;
    cells_[idx(j, i)] = d;
  }

  friend bool operator==(const Highway&, const Highway&) = default;

 private:
  std::size_t idx(std::uint32_t i, std::uint32_t j) const { return std::size_t(i) * count_ + j; }
  void check(std::uint32_t i) const {
    if (i >= count_) throw std::out_of_range("landmark rank out of range");
  }

  std::uint32_t count_ = 0;
  std::vector<Dist> cells_;
};

struct Labelling {
  Landmarks landmarks;
  Highway highway;
  std::vector<VertexLabel> labels;

  std::size_t vertex_count() const { return labels.size(); }
  friend bool operator==(const Labelling&, const Labelling&) = default;
};

// One BFS per landmark. A vertex is covered once some other landmark sits on
// a shortest path from the root; coverage propagates along shortest-path DAG
// edges, so processing vertices in BFS extraction order settles parents
// before children. Covered vertices (and landmarks) get no entry.
inline Labelling build_labelling(const Graph& g, Landmarks landmarks) {
  const std::size_t n = g.vertex_count();
  const std::uint32_t k = landmarks.size();
  Labelling gamma{std::move(landmarks), Highway(k), std::vector<VertexLabel>(n)};

  std::vector<Dist> dist(n);
  std::vector<std::uint8_t> covered(n);
  std::vector<Vertex> order;
  order.reserve(n);

  for (std::uint32_t r = 0; r < k; ++r) {
    const Vertex root = gamma.landmarks.id_of(r);
    std::fill(dist.begin(), dist.end(), Dist::inf());
    std::fill(covered.begin(), covered.end(), 0);
    order.clear();

    dist[root] = Dist::zero();
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w].reachable()) continue;
        dist[w] = dist[v] + 1u;
        order.push_back(w);
      }
    }

    for (const Vertex v : order) {
      if (v == root) continue;
      const std::uint32_t vr = gamma.landmarks.rank_of(v);
      bool cov = vr != Landmarks::kNoRank;  // another landmark, itself on the path
      if (!cov) {
        for (Vertex p : g.neighbors(v)) {
          if (dist[p] + 1u == dist[v] && covered[p]) {
            cov = true;
            break;
          }
        }
      }
      covered[v] = cov;
      if (!cov) gamma.labels[v].push_back(LabelEntry{r, dist[v]});
    }

    for (std::uint32_t s = 0; s < k; ++s) gamma.highway.set(r, s, dist[gamma.landmarks.id_of(s)]);
  }
  return gamma;
}

struct LabellingSize {
  std::uint64_t entries = 0;
  std::uint64_t bytes = 0;
};

// Bytes follow the snapshot widths: 6 per entry (u16 rank + u32 dist) plus
// the dense u32 highway.
inline LabellingSize labelling_size(const Labelling& gamma) {
  LabellingSize s;
  for (const auto& l : gamma.labels) s.entries += l.size();
  const std::uint64_t k = gamma.highway.landmark_count();
  s.bytes = s.entries * 6 + k * k * 4;
  return s;
}

inline constexpr char kLabellingMagic[6] = {'D', 'H', 'C', 'L', 'L', '1'};

inline void save_labelling(std::ostream& out, const Labelling& gamma) {
  const std::uint32_t k = gamma.landmarks.size();
  if (k > 0xFFFF) throw std::invalid_argument("snapshot format caps landmarks at 65535");
  out.write(kLabellingMagic, sizeof kLabellingMagic);
  detail::write_u32le(out, k);
  for (std::uint32_t r = 0; r < k; ++r) detail::write_u32le(out, gamma.landmarks.id_of(r));
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) detail::write_u32le(out, gamma.highway.at(i, j).raw());
  for (const auto& label : gamma.labels) {
    detail::write_u32le(out, static_cast<std::uint32_t>(label.size()));
    for (const LabelEntry& e : label.entries()) {
      const std::uint16_t rank16 = static_cast<std::uint16_t>(e.rank);
      unsigned char b[2] = {static_cast<unsigned char>(rank16),
                            static_cast<unsigned char>(rank16 >> 8)};
      out.write(reinterpret_cast<const char*>(b), 2);
      detail::write_u32le(out, e.dist.raw());
    }
  }
  if (!out) throw std::runtime_error("labelling snapshot write failed");
}

// The format carries no vertex count; the caller supplies it (normally from
// the graph loaded alongside).
inline Labelling load_labelling(std::istream& in, std::size_t vertex_count) {
  char magic[6];
  if (!in.read(magic, 6) || std::memcmp(magic, kLabellingMagic, 6) != 0)
    throw std::runtime_error("not a labelling snapshot (bad magic)");
  const std::uint32_t k = detail::read_u32le(in);
  std::vector<Vertex> ids(k);
  for (auto& id : ids) id = detail::read_u32le(in);
  Labelling gamma{Landmarks(std::move(ids), vertex_count), Highway(k),
                  std::vector<VertexLabel>(vertex_count)};
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      const Dist d{detail::read_u32le(in)};
      if (i == j && d != Dist::zero()) throw std::runtime_error("labelling snapshot: nonzero diagonal");
      if (j >= i) gamma.highway.set(i, j, d);
      else if (gamma.highway.at(i, j) != d) throw std::runtime_error("labelling snapshot: asymmetric highway");
    }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const std::uint32_t cnt = detail::read_u32le(in);
    for (std::uint32_t i = 0; i < cnt; ++i) {
      unsigned char b[2];
      if (!in.read(reinterpret_cast<char*>(b), 2)) throw std::runtime_error("truncated binary input");
      const std::uint32_t rank = std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8;
      const Dist d{detail::read_u32le(in)};
      if (rank >= k) throw std::runtime_error("labelling snapshot: entry rank out of range");
      gamma.labels[v].push_back(LabelEntry{rank, d});
    }
  }
  // a wrong vertex_count otherwise slips through when the landmark ids fit
  in.peek();
  if (!in.eof()) throw std::runtime_error("labelling snapshot: trailing bytes");
  return gamma;
}

}  // namespace dhcl
