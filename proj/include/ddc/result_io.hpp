#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "ddc/baselines.hpp"
#include "ddc/dataset.hpp"
#include "ddc/merge.hpp"

namespace ddc {

// One row per point of "index,x,y,local_label,final_label,is_core,is_center".
struct ResultTable {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::int64_t> local_label;
  std::vector<std::int64_t> final_label;
  std::vector<bool> is_core;
  std::vector<bool> is_center;

  std::size_t size() const { return x.size(); }
};

ResultTable result_table(const PointSet& ps, const MergedClustering& result);
// local_label mirrors final_label; flags are 0 where the algorithm has none.
ResultTable result_table(const PointSet& ps, const BaselineResult& result);

void write_result_csv(std::ostream& out, const ResultTable& table);
ResultTable read_result_csv(const std::filesystem::path& path);

}  // namespace ddc
