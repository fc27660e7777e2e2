#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ddc/dataset.hpp"

namespace ddc {

// Fixed-radius neighbor queries over a subset of a PointSet, backed by a
// uniform grid with cell edge equal to the radius. Falls back to a linear
// scan when d > 3 or the grid would be absurdly fine.
class RadiusIndex {
 public:
  // `members` lists the indexed point ids; empty span means all points.
  RadiusIndex(const PointSet& ps, double radius, std::span<const std::size_t> members = {});

  // Indexed points j with d(i, j) < radius (strict) or <= radius, ascending.
  // The query point itself is included when it is indexed and in range.
  void query(std::size_t i, bool strict, std::vector<std::size_t>& out) const;

 private:
  using CellKey = std::array<std::int64_t, 3>;
  struct KeyHash {
    std::size_t operator()(const CellKey& k) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (auto v : k) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
      return static_cast<std::size_t>(h);
    }
  };

  CellKey cell_of(std::size_t i) const;

  const PointSet& ps_;
  double radius_;
  // Slightly wider than the radius so rounding in floor() never drops a
  // boundary neighbor.
  double cell_;
  bool use_grid_ = false;
  std::vector<std::size_t> members_;
  std::unordered_map<CellKey, std::vector<std::size_t>, KeyHash> cells_;
};

}  // namespace ddc
