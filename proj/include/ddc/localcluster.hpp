#pragma once

#include <cstddef>
#include <vector>

#include "ddc/density.hpp"

namespace ddc {

struct LocalCenters {
  std::vector<std::size_t> indices;  // ascending
  // Set when no point qualified and the densest point was used instead.
  bool fallback = false;
};

// Points with delta > d_c and rho above the global mean density.
LocalCenters select_local_centers(const DensityProfile& profile);

double mean_density(const DensityProfile& profile);

struct LocalClustering {
  std::vector<std::size_t> centers;  // cluster id k is seeded by centers[k]
  std::vector<std::size_t> labels;
  double rho_bar = 0.0;

  std::size_t cluster_count() const { return centers.size(); }
};

// Walks the density order; each center opens its cluster and every other
// point inherits the label of its nearest denser neighbor. If the densest
// point is not among `centers` it is placed in cluster 0.
// Throws std::invalid_argument for an empty, duplicated or out-of-range
// center list.
LocalClustering assign_points(const DensityProfile& profile, const std::vector<std::size_t>& centers);

}  // namespace ddc
