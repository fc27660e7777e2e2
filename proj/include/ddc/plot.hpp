#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ddc/baselines.hpp"
#include "ddc/dataset.hpp"
#include "ddc/density.hpp"
#include "ddc/merge.hpp"

namespace ddc {

struct FigureSpec {
  int width = 640;
  int height = 480;
  std::vector<std::string> palette = default_palette();
  double point_radius = 2.5;
  double center_size = 7.0;
  bool show_centers = true;
  bool show_border = true;
  std::string title;

  static std::vector<std::string> default_palette();
};

// What a scatter plot needs from any clustering result.
struct ScatterLayer {
  std::vector<std::int64_t> labels;  // negative = noise, drawn gray
  std::vector<bool> is_core;         // empty = no border highlighting
  std::vector<std::size_t> centers;  // point indices drawn as diamonds
};

ScatterLayer scatter_layer(const MergedClustering& result);
ScatterLayer scatter_layer(const BaselineResult& result);

// SVG 1.1 text; first two coordinates are plotted.
std::string render_scatter(const PointSet& ps, const ScatterLayer& layer, const FigureSpec& spec = {});
std::string render_scatter(const PointSet& ps, const MergedClustering& result, const FigureSpec& spec = {});
std::string render_scatter(const PointSet& ps, const BaselineResult& result, const FigureSpec& spec = {});

std::string render_decision_graph(const std::vector<DecisionRow>& rows, const FigureSpec& spec = {});
std::string render_decision_graph(const DensityProfile& profile, const FigureSpec& spec = {});

}  // namespace ddc
