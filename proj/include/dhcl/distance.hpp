#pragma once

#include <compare>
#include <cstdint>
#include <limits>

namespace dhcl {

// Hop count with a saturating "unreachable" sentinel. The sentinel is the
// max raw value, so ordinary comparisons order it above every finite value.
class Dist {
 public:
  static constexpr std::uint32_t kInfRaw = std::numeric_limits<std::uint32_t>::max();

  constexpr Dist() = default;  // unreachable
  constexpr explicit Dist(std::uint32_t hops) : raw_(hops) {}

  static constexpr Dist inf() { return Dist(kInfRaw); }
  static constexpr Dist zero() { return Dist(0); }

  constexpr bool reachable() const { return raw_ != kInfRaw; }
  constexpr std::uint32_t raw() const { return raw_; }

  friend constexpr Dist operator+(Dist a, Dist b) {
    if (!a.reachable() || !b.reachable()) return inf();
    const std::uint64_t s = std::uint64_t(a.raw_) + b.raw_;
    return s >= kInfRaw ? inf() : Dist(static_cast<std::uint32_t>(s));
  }
  friend constexpr Dist operator+(Dist a, std::uint32_t b) { return a + Dist(b); }

  friend constexpr bool operator==(Dist, Dist) = default;
  friend constexpr auto operator<=>(Dist, Dist) = default;

 private:
  std::uint32_t raw_ = kInfRaw;
};

}  // namespace dhcl
