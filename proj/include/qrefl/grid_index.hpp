#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace qrefl {

/// Tolerance-aware lookup for points in R^N. Coordinates are quantized to a
/// grid (default 1e-6); a query whose coordinate lies within `margin` of a
/// cell boundary also probes the adjacent cell along that axis, so two points
/// closer than `margin` always share at least one probed cell. Candidates are
/// confirmed with the caller's exact-tolerance predicate.
template <std::size_t N>
class GridIndex {
 public:
  using Point = std::array<double, N>;

  explicit GridIndex(double grid = 1e-6, double margin = 1e-7) : grid_(grid), margin_(margin) {}

  void insert(const Point& p, std::size_t id) { cells_[key_of(cell_of(p))].push_back(id); }

  /// Returns the first stored id accepted by `match`, or npos.
  template <class Match>
  std::size_t find(const Point& p, Match&& match) const {
    std::array<std::int64_t, N> base = cell_of(p);
    std::array<int, N> alt{};
    std::array<std::size_t, N> near_axes{};
    std::size_t n_near = 0;
    for (std::size_t ax = 0; ax < N; ++ax) {
      const double scaled = p[ax] / grid_;
      const double frac = scaled - std::floor(scaled);  // in [0,1)
      // rounding puts the boundary at frac = 0.5
      if (std::abs(frac - 0.5) * grid_ < margin_) {
        alt[ax] = frac < 0.5 ? +1 : -1;
        near_axes[n_near++] = ax;
      }
    }
    const std::size_t combos = std::size_t{1} << n_near;
    for (std::size_t mask = 0; mask < combos; ++mask) {
      std::array<std::int64_t, N> cell = base;
      for (std::size_t t = 0; t < n_near; ++t) {
        if (mask & (std::size_t{1} << t)) cell[near_axes[t]] += alt[near_axes[t]];
      }
      auto it = cells_.find(key_of(cell));
      if (it == cells_.end()) continue;
      for (std::size_t id : it->second) {
        if (match(id)) return id;
      }
    }
    return npos;
  }

  void clear() { cells_.clear(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  double grid_;
  double margin_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;

  std::array<std::int64_t, N> cell_of(const Point& p) const {
    std::array<std::int64_t, N> cell{};
    for (std::size_t ax = 0; ax < N; ++ax) cell[ax] = std::llround(p[ax] / grid_);
    return cell;
  }

  static std::uint64_t key_of(const std::array<std::int64_t, N>& cell) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : cell) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace qrefl
