#include "ddc/merge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ddc/spatial.hpp"

namespace ddc {

std::vector<bool> classify_core_border(const LocalClustering& lc, const DensityProfile& profile) {
  const std::size_t clusters = lc.cluster_count();
  std::vector<double> sums(clusters, 0.0);
  std::vector<std::size_t> counts(clusters, 0);
  for (std::size_t i = 0; i < lc.labels.size(); ++i) {
    sums[lc.labels[i]] += profile.rho[i];
    ++counts[lc.labels[i]];
  }
  std::vector<bool> is_core(lc.labels.size());
  for (std::size_t i = 0; i < lc.labels.size(); ++i) {
    const std::size_t k = lc.labels[i];
    is_core[i] = profile.rho[i] > sums[k] / static_cast<double>(counts[k]);
  }
  return is_core;
}

void ClusterGraph::add_edge(std::size_t k, std::size_t l) {
  if (k == l) return;
  auto insert = [](std::vector<std::size_t>& list, std::size_t v) {
    const auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert(adjacency_.at(k), l);
  insert(adjacency_.at(l), k);
}

bool ClusterGraph::has_edge(std::size_t k, std::size_t l) const {
  const auto& list = adjacency_.at(k);
  return std::binary_search(list.begin(), list.end(), l);
}

std::vector<std::pair<std::size_t, std::size_t>> ClusterGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < adjacency_.size(); ++k)
    for (std::size_t l : adjacency_[k])
      if (k < l) out.emplace_back(k, l);
  return out;
}

ClusterGraph build_connectivity(const PointSet& ps, const LocalClustering& lc, const std::vector<bool>& is_core,
                                double d_c) {
  ClusterGraph graph(lc.cluster_count());
  std::vector<std::size_t> cores;
  for (std::size_t i = 0; i < is_core.size(); ++i)
    if (is_core[i]) cores.push_back(i);
  if (cores.empty()) return graph;

  const RadiusIndex index(ps, d_c, cores);
  std::vector<std::size_t> found;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (std::size_t i : cores) {
    index.query(i, /*strict=*/true, found);
    for (std::size_t j : found) {
      if (j <= i) continue;
      const std::size_t k = lc.labels[i];
      const std::size_t l = lc.labels[j];
      if (k != l) links.emplace_back(std::min(k, l), std::max(k, l));
    }
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  for (const auto& [k, l] : links) graph.add_edge(k, l);
  return graph;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // The smaller root survives, so every root is its set's minimum.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

MergedClustering merge_connected(const ClusterGraph& graph, const LocalClustering& lc, const DensityProfile& profile,
                                 std::vector<bool> is_core) {
  const std::size_t clusters = lc.cluster_count();
  if (graph.size() != clusters) throw std::invalid_argument("graph size does not match local cluster count");

  DisjointSets sets(clusters);
  for (std::size_t k = 0; k < clusters; ++k)
    for (std::size_t l : graph.neighbors(k)) sets.unite(k, l);

  MergedClustering out;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_to_final(clusters, kUnset);
  out.local_to_final.resize(clusters);
  for (std::size_t k = 0; k < clusters; ++k) {
    const std::size_t root = sets.find(k);
    if (root_to_final[root] == kUnset) {
      root_to_final[root] = out.final_centers.size();
      out.final_centers.push_back(lc.centers[k]);
    }
    const std::size_t f = root_to_final[root];
    out.local_to_final[k] = f;
    std::size_t& best = out.final_centers[f];
    const std::size_t candidate = lc.centers[k];
    if (profile.rho[candidate] > profile.rho[best] || (profile.rho[candidate] == profile.rho[best] && candidate < best))
      best = candidate;
  }

  out.final_labels.resize(lc.labels.size());
  for (std::size_t i = 0; i < lc.labels.size(); ++i) out.final_labels[i] = out.local_to_final[lc.labels[i]];
  out.is_core = std::move(is_core);
  out.local = lc;
  out.profile = profile;
  return out;
}

MergedClustering ddc_cluster(const PointSet& ps, double ratio) {
  const CutoffParams cutoff = cutoff_from_ratio(ps, ratio);
  DensityProfile profile = compute_profile(ps, cutoff.d_c);
  const LocalCenters centers = select_local_centers(profile);
  LocalClustering lc = assign_points(profile, centers.indices);
  std::vector<bool> is_core = classify_core_border(lc, profile);
  const ClusterGraph graph = build_connectivity(ps, lc, is_core, cutoff.d_c);
  MergedClustering out = merge_connected(graph, lc, profile, std::move(is_core));
  out.cutoff = cutoff;
  out.fallback = centers.fallback;
  return out;
}

}  // namespace ddc
