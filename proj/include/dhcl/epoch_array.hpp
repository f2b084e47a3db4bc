#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace dhcl {

// Dense vertex-keyed scratch map cleared by bumping an epoch stamp instead of
// rewriting the backing arrays.
template <typename T>
class EpochArray {
 public:
  void resize(std::size_t n) {
    if (n > stamp_.size()) {
      stamp_.resize(n, 0);
      value_.resize(n);
    }
  }

  void clear() {
    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 0;
    }
    ++epoch_;
  }

  bool contains(std::size_t i) const { return i < stamp_.size() && stamp_[i] == epoch_; }

  const T* find(std::size_t i) const {
    return contains(i) ? &value_[i] : nullptr;
  }

  void set(std::size_t i, T v) {
    stamp_[i] = epoch_;
    value_[i] = v;
  }

  T get_or(std::size_t i, T fallback) const {
    const T* p = find(i);
    return p ? *p : fallback;
  }

  std::size_t capacity() const { return stamp_.size(); }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<T> value_;
  std::uint32_t epoch_ = 1;
};

}  // namespace dhcl
