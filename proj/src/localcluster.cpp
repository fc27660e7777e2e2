#include "ddc/localcluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddc {

double mean_density(const DensityProfile& profile) {
  double sum = 0.0;
  for (double r : profile.rho) sum += r;
  return sum / static_cast<double>(profile.size());
}

LocalCenters select_local_centers(const DensityProfile& profile) {
  LocalCenters out;
  const double rho_bar = mean_density(profile);
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (profile.delta[i] > profile.d_c && profile.rho[i] > rho_bar) out.indices.push_back(i);
  if (out.indices.empty()) {
    out.indices.push_back(profile.densest());
    out.fallback = true;
  }
  return out;
}

LocalClustering assign_points(const DensityProfile& profile, const std::vector<std::size_t>& centers) {
  const std::size_t n = profile.size();
  if (centers.empty()) throw std::invalid_argument("at least one center is required");

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  LocalClustering lc;
  lc.centers = centers;
  lc.labels.assign(n, kUnset);
  lc.rho_bar = mean_density(profile);
  for (std::size_t k = 0; k < centers.size(); ++k) {
    if (centers[k] >= n) throw std::invalid_argument("center index out of range");
    if (lc.labels[centers[k]] != kUnset) throw std::invalid_argument("duplicate center");
    lc.labels[centers[k]] = k;
  }
  for (std::size_t i : profile.order) {
    if (lc.labels[i] != kUnset) continue;
    lc.labels[i] = profile.nhd[i] == kNoIndex ? 0 : lc.labels[profile.nhd[i]];
  }
  return lc;
}

}  // namespace ddc
