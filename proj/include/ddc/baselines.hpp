#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ddc/dataset.hpp"

namespace ddc {

inline constexpr std::int64_t kNoiseCluster = -1;

struct BaselineParams {
  std::optional<double> eps;
  std::optional<std::size_t> min_pts;
  std::optional<double> d_c;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
};

struct BaselineResult {
  std::vector<std::int64_t> labels;  // kNoiseCluster marks DBSCAN noise
  std::size_t cluster_count = 0;
  // Cluster centers (point indices) where the algorithm has them.
  std::vector<std::size_t> centers;
  std::vector<bool> is_core;  // DBSCAN core points; empty otherwise
  std::vector<double> centroids;  // k-means only, cluster_count x dim row-major
  BaselineParams params;
};

// Classic DBSCAN. A core point has at least min_pts points (itself included)
// within distance <= eps. Clusters are discovered by scanning seeds in
// ascending index, so a border point goes to the first cluster reaching it.
BaselineResult dbscan(const PointSet& ps, double eps, std::size_t min_pts);

struct DbscanParams {
  double eps;
  std::size_t min_pts;
};

inline constexpr std::size_t kDbscanMinPts = 4;

// eps = lower median of the distances to each point's 4th nearest other point.
DbscanParams dbscan_auto_params(const PointSet& ps);

// Density-peak clustering with the k highest rho*delta points as centers.
BaselineResult denpeak(const PointSet& ps, double d_c, std::size_t k);

// The ceil(n*n/200)-th smallest pairwise distance, which puts about 1% of
// the points in the average d_c-neighborhood.
double denpeak_auto_dc(const PointSet& ps);

// Lloyd iterations from k-means++ seeding. Stops after max_iter rounds or
// once no assignment changes.
BaselineResult kmeans(const PointSet& ps, std::size_t k, std::uint64_t seed, std::size_t max_iter = 300);

// Sum of squared distances from each point to the mean of its cluster.
double kmeans_objective(const PointSet& ps, const std::vector<std::int64_t>& labels);

}  // namespace ddc
