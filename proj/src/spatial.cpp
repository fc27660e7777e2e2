#include "ddc/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ddc {

RadiusIndex::RadiusIndex(const PointSet& ps, double radius, std::span<const std::size_t> members)
    : ps_(ps), radius_(radius), cell_(radius * (1.0 + 1e-9)) {
  if (members.empty()) {
    members_.resize(ps.size());
    std::iota(members_.begin(), members_.end(), std::size_t{0});
  } else {
    members_.assign(members.begin(), members.end());
  }
  const std::size_t dim = ps.dim();
  use_grid_ = dim <= 3 && radius > 0.0 && !members_.empty();
  if (use_grid_) {
    for (std::size_t k = 0; k < dim; ++k) {
      double lo = ps.point(members_.front())[k];
      double hi = lo;
      for (std::size_t i : members_) {
        lo = std::min(lo, ps.point(i)[k]);
        hi = std::max(hi, ps.point(i)[k]);
      }
      const double span_cells = std::max(std::abs(lo), std::abs(hi)) / radius;
      if (!(span_cells < 1e15)) use_grid_ = false;
    }
  }
  if (use_grid_)
    for (std::size_t i : members_) cells_[cell_of(i)].push_back(i);
}

RadiusIndex::CellKey RadiusIndex::cell_of(std::size_t i) const {
  CellKey key{0, 0, 0};
  const auto p = ps_.point(i);
  for (std::size_t k = 0; k < p.size(); ++k) key[k] = static_cast<std::int64_t>(std::floor(p[k] / cell_));
  return key;
}

void RadiusIndex::query(std::size_t i, bool strict, std::vector<std::size_t>& out) const {
  out.clear();
  const std::size_t dim = ps_.dim();
  const double* xi = ps_.data() + i * dim;
  auto accept = [&](std::size_t j) {
    // Compare true distances so the boundary matches d_ij < r exactly.
    const double d = std::sqrt(squared_distance(xi, ps_.data() + j * dim, dim));
    if (strict ? d < radius_ : d <= radius_) out.push_back(j);
  };
  if (!use_grid_) {
    for (std::size_t j : members_) accept(j);
    return;
  }
  const CellKey base = cell_of(i);
  const int span_x = 1;
  const int span_y = dim >= 2 ? 1 : 0;
  const int span_z = dim >= 3 ? 1 : 0;
  for (int dx = -span_x; dx <= span_x; ++dx)
    for (int dy = -span_y; dy <= span_y; ++dy)
      for (int dz = -span_z; dz <= span_z; ++dz) {
        const CellKey key{base[0] + dx, base[1] + dy, base[2] + dz};
        const auto it = cells_.find(key);
        if (it == cells_.end()) continue;
        for (std::size_t j : it->second) accept(j);
      }
  std::sort(out.begin(), out.end());
}

}  // namespace ddc
