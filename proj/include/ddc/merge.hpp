#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ddc/dataset.hpp"
#include "ddc/density.hpp"
#include "ddc/localcluster.hpp"

namespace ddc {

// is_core[i] holds when rho[i] exceeds the mean density of i's local cluster.
std::vector<bool> classify_core_border(const LocalClustering& lc, const DensityProfile& profile);

// Undirected graph over local-cluster ids. Neighbor lists are sorted and
// contain no self loops.
class ClusterGraph {
 public:
  explicit ClusterGraph(std::size_t clusters = 0) : adjacency_(clusters) {}

  std::size_t size() const { return adjacency_.size(); }
  void add_edge(std::size_t k, std::size_t l);
  bool has_edge(std::size_t k, std::size_t l) const;
  const std::vector<std::size_t>& neighbors(std::size_t k) const { return adjacency_[k]; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // k < l, lexicographic

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Local clusters k != l are linked when some core point of k and some core
// point of l lie strictly closer than d_c.
ClusterGraph build_connectivity(const PointSet& ps, const LocalClustering& lc, const std::vector<bool>& is_core,
                                double d_c);

struct MergedClustering {
  std::vector<std::size_t> final_labels;
  std::vector<std::size_t> local_to_final;
  std::vector<std::size_t> final_centers;  // point index per final cluster
  std::vector<bool> is_core;
  CutoffParams cutoff;
  LocalClustering local;
  DensityProfile profile;
  bool fallback = false;

  std::size_t cluster_count() const { return final_centers.size(); }
  std::size_t local_cluster_count() const { return local.cluster_count(); }
};

// Final clusters are the connected components of `graph`, numbered by their
// smallest local id. Each takes the densest of its local centers as center.
MergedClustering merge_connected(const ClusterGraph& graph, const LocalClustering& lc, const DensityProfile& profile,
                                 std::vector<bool> is_core);

// Full density clustering of one point set with d_c = ratio * mean pairwise
// distance.
MergedClustering ddc_cluster(const PointSet& ps, double ratio = kDefaultRatio);

}  // namespace ddc
