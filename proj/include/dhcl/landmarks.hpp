#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dhcl/graph.hpp"

namespace dhcl {

// Immutable landmark set. Rank order is fixed at selection time; vertices
// added to the graph later simply have no rank.
class Landmarks {
 public:
  static constexpr std::uint32_t kNoRank = 0xFFFFFFFFu;

  Landmarks() = default;

  Landmarks(std::vector<Vertex> ids, std::size_t vertex_count) : ids_(std::move(ids)) {
    if (ids_.empty()) throw std::invalid_argument("landmark set must be non-empty");
    std::size_t max_id = 0;
    for (Vertex v : ids_) max_id = std::max<std::size_t>(max_id, v);
    if (max_id >= vertex_count) throw std::out_of_range("landmark id out of range");
    rank_of_.assign(max_id + 1, kNoRank);
    for (std::uint32_t r = 0; r < ids_.size(); ++r) {
      if (rank_of_[ids_[r]] != kNoRank) throw std::invalid_argument("duplicate landmark id");
      rank_of_[ids_[r]] = r;
    }
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(ids_.size()); }

  Vertex id_of(std::uint32_t rank) const {
    if (rank >= ids_.size()) throw std::out_of_range("landmark rank out of range");
    return ids_[rank];
  }

  std::uint32_t rank_of(Vertex v) const {
    return v < rank_of_.size() ? rank_of_[v] : kNoRank;
  }

  bool is_landmark(Vertex v) const { return rank_of(v) != kNoRank; }

  std::span<const Vertex> ids() const { return {ids_.data(), ids_.size()}; }

  friend bool operator==(const Landmarks& a, const Landmarks& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<Vertex> ids_;        // rank -> vertex id
  std::vector<std::uint32_t> rank_of_;  // vertex id -> rank (dense prefix only)
};

// Top-k by degree, ties broken toward the smaller id. Rank follows that order.
inline Landmarks select_landmarks(const Graph& g, std::uint32_t k) {
  const std::size_t n = g.vertex_count();
  if (k == 0 || k > n) throw std::invalid_argument("landmark count must be in [1, vertex_count]");
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](Vertex a, Vertex b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  order.resize(k);
  return Landmarks(std::move(order), n);
}

}  // namespace dhcl
