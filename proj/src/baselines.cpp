#include "ddc/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ddc/density.hpp"
#include "ddc/error.hpp"
#include "ddc/localcluster.hpp"
#include "ddc/parallel.hpp"
#include "ddc/spatial.hpp"

namespace ddc {

BaselineResult dbscan(const PointSet& ps, double eps, std::size_t min_pts) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
  if (min_pts < 1) throw std::invalid_argument("min_pts must be at least 1");
  const std::size_t n = ps.size();
  BaselineResult result;
  result.params.eps = eps;
  result.params.min_pts = min_pts;
  result.labels.assign(n, kNoiseCluster);
  result.is_core.assign(n, false);
  if (n == 0) return result;

  const RadiusIndex index(ps, eps);
  std::vector<std::vector<std::size_t>> neighbors(n);
  for (std::size_t i = 0; i < n; ++i) {
    index.query(i, /*strict=*/false, neighbors[i]);
    result.is_core[i] = neighbors[i].size() >= min_pts;
  }

  std::int64_t next = 0;
  std::vector<bool> expanded(n, false);
  std::vector<std::size_t> frontier;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (!result.is_core[seed] || result.labels[seed] != kNoiseCluster) continue;
    const std::int64_t cluster = next++;
    result.labels[seed] = cluster;
    frontier.assign(1, seed);
    expanded[seed] = true;
    while (!frontier.empty()) {
      const std::size_t p = frontier.back();
      frontier.pop_back();
      for (std::size_t q : neighbors[p]) {
        if (result.labels[q] == kNoiseCluster) result.labels[q] = cluster;
        if (result.is_core[q] && !expanded[q] && result.labels[q] == cluster) {
          expanded[q] = true;
          frontier.push_back(q);
        }
      }
    }
  }
  result.cluster_count = static_cast<std::size_t>(next);
  return result;
}

DbscanParams dbscan_auto_params(const PointSet& ps) {
  const std::size_t n = ps.size();
  constexpr std::size_t kth = 4;
  if (n <= kth) throw DegenerateInputError("DBSCAN auto parameters need at least 5 points");
  const std::size_t dim = ps.dim();
  const double* x = ps.data();
  std::vector<double> kth_dist(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    std::array<double, kth> best;
    best.fill(std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d2 = squared_distance(x + i * dim, x + j * dim, dim);
      if (d2 >= best.back()) continue;
      std::size_t slot = kth - 1;
      while (slot > 0 && best[slot - 1] > d2) {
        best[slot] = best[slot - 1];
        --slot;
      }
      best[slot] = d2;
    }
    kth_dist[i] = std::sqrt(best.back());
  }
  const auto mid = kth_dist.begin() + static_cast<std::ptrdiff_t>((n - 1) / 2);
  std::nth_element(kth_dist.begin(), mid, kth_dist.end());
  return {*mid, kDbscanMinPts};
}

BaselineResult denpeak(const PointSet& ps, double d_c, std::size_t k) {
  if (k < 1 || k > ps.size()) throw std::invalid_argument("k must lie in [1, n]");
  const DensityProfile profile = compute_profile(ps, d_c);
  const std::size_t n = profile.size();
  std::vector<std::size_t> ranked(n);
  std::iota(ranked.begin(), ranked.end(), std::size_t{0});
  std::vector<double> gamma(n);
  for (std::size_t i = 0; i < n; ++i) gamma[i] = profile.rho[i] * profile.delta[i];
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) { return gamma[a] > gamma[b]; });
  std::vector<std::size_t> centers(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(centers.begin(), centers.end());

  const LocalClustering lc = assign_points(profile, centers);
  BaselineResult result;
  result.labels.assign(lc.labels.begin(), lc.labels.end());
  result.cluster_count = k;
  result.centers = centers;
  result.params.d_c = d_c;
  result.params.k = k;
  return result;
}

double denpeak_auto_dc(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n < 2) throw DegenerateInputError("auto d_c needs at least two points");
  const std::size_t dim = ps.dim();
  const double* x = ps.data();
  std::vector<double> dists;
  dists.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dists.push_back(squared_distance(x + i * dim, x + j * dim, dim));
  // 1-based rank ceil(0.01 * n * n / 2) in exact integer arithmetic.
  const std::size_t rank = std::clamp<std::size_t>((n * n + 199) / 200, 1, dists.size());
  const auto nth = dists.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(dists.begin(), nth, dists.end());
  const double d_c = std::sqrt(*nth);
  if (!(d_c > 0.0)) throw DegenerateInputError("auto d_c collapsed to zero; too many duplicate points");
  return d_c;
}

namespace {

std::size_t nearest_center(const double* p, const std::vector<double>& centers, std::size_t k, std::size_t dim) {
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < k; ++c) {
    const double d2 = squared_distance(p, centers.data() + c * dim, dim);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  return best;
}

}  // namespace

BaselineResult kmeans(const PointSet& ps, std::size_t k, std::uint64_t seed, std::size_t max_iter) {
  const std::size_t n = ps.size();
  if (k < 1 || k > n) throw std::invalid_argument("k must lie in [1, n]");
  const std::size_t dim = ps.dim();
  const double* x = ps.data();
  std::mt19937_64 rng(seed);

  // k-means++ seeding.
  std::vector<double> centers;
  centers.reserve(k * dim);
  const std::size_t first = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  centers.insert(centers.end(), x + first * dim, x + (first + 1) * dim);
  std::vector<double> closest(n, std::numeric_limits<double>::infinity());
  for (std::size_t c = 1; c < k; ++c) {
    const double* last = centers.data() + (c - 1) * dim;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      closest[i] = std::min(closest[i], squared_distance(x + i * dim, last, dim));
      total += closest[i];
    }
    std::size_t pick = 0;
    if (total > 0.0) {
      double target = std::uniform_real_distribution<double>(0.0, total)(rng);
      for (pick = 0; pick + 1 < n; ++pick) {
        target -= closest[pick];
        if (target < 0.0) break;
      }
    } else {
      pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }
    centers.insert(centers.end(), x + pick * dim, x + (pick + 1) * dim);
  }

  std::vector<std::size_t> assign(n, k);
  std::vector<double> sums(k * dim);
  std::vector<std::size_t> sizes(k);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = nearest_center(x + i * dim, centers, k, dim);
      if (c != assign[i]) {
        assign[i] = c;
        changed = true;
      }
    }
    if (!changed) break;
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++sizes[assign[i]];
      for (std::size_t d = 0; d < dim; ++d) sums[assign[i] * dim + d] += x[i * dim + d];
    }
    // An emptied cluster keeps its previous center.
    for (std::size_t c = 0; c < k; ++c)
      if (sizes[c] > 0)
        for (std::size_t d = 0; d < dim; ++d) centers[c * dim + d] = sums[c * dim + d] / static_cast<double>(sizes[c]);
  }

  // Compact ids so that non-empty clusters are numbered 0..K-1.
  std::vector<std::int64_t> remap(k, -1);
  BaselineResult result;
  result.labels.resize(n);
  std::int64_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (remap[assign[i]] < 0) remap[assign[i]] = next++;
    result.labels[i] = remap[assign[i]];
  }
  result.cluster_count = static_cast<std::size_t>(next);
  result.centroids.assign(result.cluster_count * dim, 0.0);
  std::vector<std::size_t> final_sizes(result.cluster_count, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(result.labels[i]);
    ++final_sizes[c];
    for (std::size_t d = 0; d < dim; ++d) result.centroids[c * dim + d] += x[i * dim + d];
  }
  for (std::size_t c = 0; c < result.cluster_count; ++c)
    for (std::size_t d = 0; d < dim; ++d) result.centroids[c * dim + d] /= static_cast<double>(final_sizes[c]);
  result.params.k = k;
  result.params.seed = seed;
  return result;
}

double kmeans_objective(const PointSet& ps, const std::vector<std::int64_t>& labels) {
  const std::size_t dim = ps.dim();
  const auto clusters = static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1);
  std::vector<double> sums(clusters * dim, 0.0);
  std::vector<std::size_t> sizes(clusters, 0);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    ++sizes[c];
    for (std::size_t d = 0; d < dim; ++d) sums[c * dim + d] += ps.point(i)[d];
  }
  double total = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = ps.point(i)[d] - sums[c * dim + d] / static_cast<double>(sizes[c]);
      total += diff * diff;
    }
  }
  return total;
}

}  // namespace ddc
