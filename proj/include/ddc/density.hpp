#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <vector>

#include "ddc/dataset.hpp"

namespace ddc {

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// Per-point Gaussian-kernel density, distance to the nearest denser point and
// that point's index. "Denser" is the total order
//   i before j  iff  rho[i] > rho[j]  or  (rho[i] == rho[j] and i < j).
struct DensityProfile {
  std::vector<double> rho;
  std::vector<double> delta;
  std::vector<std::size_t> nhd;    // kNoIndex for the densest point
  std::vector<std::size_t> order;  // densest first
  double d_c = 0.0;

  std::size_t size() const { return rho.size(); }
  std::size_t densest() const { return order.front(); }
  // True when i precedes j in the tie-broken density order.
  bool denser(std::size_t i, std::size_t j) const {
    return rho[i] > rho[j] || (rho[i] == rho[j] && i < j);
  }
};

// rho[i] = sum over j != i of exp(-(d_ij / d_c)^2), summed in ascending j.
std::vector<double> compute_rho(const PointSet& ps, double d_c);

// Throws DegenerateInputError when fewer than two points exist or all
// points coincide, std::invalid_argument when d_c <= 0.
DensityProfile compute_profile(const PointSet& ps, double d_c);

struct DecisionRow {
  std::size_t index;
  double rho;
  double delta;
};

std::vector<DecisionRow> decision_graph(const DensityProfile& profile);

// "index,rho,delta" with shortest round-trip decimals.
void write_decision_csv(std::ostream& out, const std::vector<DecisionRow>& rows);
std::vector<DecisionRow> read_decision_csv(const std::filesystem::path& path);

}  // namespace ddc
