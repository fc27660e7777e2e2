#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace ddc {

using Label = std::int64_t;

// Ground-truth label reserved for synthetic background noise. Such points are
// excluded from scoring.
inline constexpr Label kNoiseLabel = -1;

// n points of dimension d stored row-major, with optional ground truth.
class PointSet {
 public:
  PointSet() = default;

  // Throws std::invalid_argument when coords.size() is not a multiple of d,
  // a coordinate is not finite, or labels have the wrong length.
  PointSet(std::vector<double> coords, std::size_t dim,
           std::optional<std::vector<Label>> labels = std::nullopt);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const double* data() const { return coords_.data(); }
  const std::vector<double>& coords() const { return coords_; }

  bool has_labels() const { return labels_.has_value(); }
  const std::vector<Label>& labels() const { return *labels_; }
  const std::optional<std::vector<Label>>& maybe_labels() const { return labels_; }

  bool operator==(const PointSet&) const = default;

 private:
  std::vector<double> coords_;
  std::size_t dim_ = 2;
  std::optional<std::vector<Label>> labels_;
};

inline double squared_distance(const double* a, const double* b, std::size_t dim) {
  double sum = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return sum;
}

inline double distance(const PointSet& ps, std::size_t i, std::size_t j) {
  const std::size_t dim = ps.dim();
  return std::sqrt(squared_distance(ps.data() + i * dim, ps.data() + j * dim, dim));
}

enum class FileFormat { csv, binary };

enum class LabelColumn {
  header,  // a trailing "label" header field marks the label column
  last,    // the last column always holds labels
  none,    // every column is a coordinate
};

// Reads a point file. CSV coordinates are parsed in file order; a leading line
// whose first field is not numeric is treated as a header. Throws ParseError
// naming the line (CSV) or byte offset (binary) on malformed input.
PointSet load_points(const std::filesystem::path& path, FileFormat format,
                     LabelColumn label_column = LabelColumn::header);

// CSV output uses the shortest decimal form that reads back to the same double.
void save_points(const PointSet& ps, const std::filesystem::path& path, FileFormat format);

// Picks the format from the extension: ".bin"/".ddcp" are binary, anything
// else is CSV.
FileFormat format_from_extension(const std::filesystem::path& path);

double mean_pairwise_distance(const PointSet& ps);
double max_pairwise_distance(const PointSet& ps);

struct CutoffParams {
  double ratio = 0.1;
  double d_bar = 0.0;
  double d_c = 0.0;
};

inline constexpr double kDefaultRatio = 0.1;

CutoffParams cutoff_from_ratio(const PointSet& ps, double ratio = kDefaultRatio);

// Two interleaving unit half-circles: (cos t, sin t) labeled 0 and
// (1 - cos t, 0.5 - sin t) labeled 1, t evenly spaced on [0, pi].
PointSet generate_twomoon(std::size_t n, double noise, std::uint64_t seed);

enum class ShapeKind { flame_like, t4_like, blobs };

struct ShapeParams {
  std::size_t points_per_cluster = 0;
  // Gaussian jitter. For blobs this is the default spread.
  double noise = 0.0;
  // t4_like only: background points as a fraction of the clustered points.
  double noise_fraction = 0.0;
  // blobs only
  std::vector<std::array<double, 2>> centers;
  std::vector<double> spreads;
};

ShapeParams default_shape_params(ShapeKind kind);

PointSet generate_shapes(ShapeKind kind, const ShapeParams& params, std::uint64_t seed);

}  // namespace ddc
