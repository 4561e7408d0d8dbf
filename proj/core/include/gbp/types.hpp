#pragma once

#include <cstdint>

namespace gbp {

using Vertex = std::uint32_t;
/// Edge and cut weights. Always non-negative.
using Weight = std::int64_t;

enum Side : std::uint8_t { kSide0 = 0, kSide1 = 1 };

constexpr Side other(Side s) noexcept { return s == kSide0 ? kSide1 : kSide0; }

/// A quantity measured in half units of weight, i.e. stored as twice its
/// value. Turned into a usable integer lower bound by rounding up.
struct HalfWeight {
  std::int64_t units = 0;

  constexpr Weight ceil() const noexcept { return (units + 1) / 2; }
  constexpr HalfWeight operator+(HalfWeight o) const noexcept { return {units + o.units}; }
  constexpr auto operator<=>(const HalfWeight&) const = default;
};

}  // namespace gbp
