#include "ddc/dataset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ddc/detail/text.hpp"
#include "ddc/error.hpp"
#include "ddc/parallel.hpp"

namespace ddc {

PointSet::PointSet(std::vector<double> coords, std::size_t dim,
                   std::optional<std::vector<Label>> labels)
    : coords_(std::move(coords)), dim_(dim), labels_(std::move(labels)) {
  if (dim_ == 0) throw std::invalid_argument("point dimension must be at least 1");
  if (coords_.size() % dim_ != 0)
    throw std::invalid_argument("coordinate count is not a multiple of the dimension");
  for (double c : coords_)
    if (!std::isfinite(c)) throw std::invalid_argument("coordinates must be finite");
  if (labels_ && labels_->size() != size())
    throw std::invalid_argument("label count does not match point count");
}

namespace {

constexpr char kMagic[4] = {'D', 'D', 'C', 'P'};
constexpr std::uint32_t kBinaryVersion = 1;
constexpr std::size_t kHeaderBytes = 4 + 4 + 8 + 4 + 1;

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line,
                             const std::string& what) {
  throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

[[noreturn]] void binary_fail(const std::filesystem::path& path, std::size_t offset,
                              const std::string& what) {
  throw ParseError(path.string() + ": offset " + std::to_string(offset) + ": " + what);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PointSet load_csv(const std::filesystem::path& path, LabelColumn label_column) {
  const std::string text = read_file(path);
  std::vector<double> coords;
  std::vector<Label> labels;
  std::size_t dim = 0;
  bool has_labels = false;
  bool layout_known = false;
  std::size_t width = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line = detail::trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;

    const auto fields = detail::split_fields(line);
    if (!layout_known) {
      layout_known = true;
      width = fields.size();
      const bool is_header = !detail::parse_double(fields.front()).has_value();
      if (is_header) {
        std::string last(fields.back());
        std::transform(last.begin(), last.end(), last.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        has_labels = label_column == LabelColumn::last ||
                     (label_column == LabelColumn::header && last == "label");
      } else {
        has_labels = label_column == LabelColumn::last;
      }
      dim = width - (has_labels ? 1 : 0);
      if (dim == 0) parse_fail(path, line_no, "no coordinate columns");
      if (is_header) continue;
    }

    if (fields.size() != width)
      parse_fail(path, line_no,
                 "expected " + std::to_string(width) + " fields, got " + std::to_string(fields.size()));
    for (std::size_t k = 0; k < dim; ++k) {
      const auto value = detail::parse_double(fields[k]);
      if (!value) parse_fail(path, line_no, "non-numeric field '" + std::string(fields[k]) + "'");
      if (!std::isfinite(*value)) parse_fail(path, line_no, "non-finite coordinate");
      coords.push_back(*value);
    }
    if (has_labels) {
      const auto label = detail::parse_int(fields[dim]);
      if (!label) parse_fail(path, line_no, "label '" + std::string(fields[dim]) + "' is not an integer");
      labels.push_back(*label);
    }
  }
  if (!layout_known) return PointSet({}, 2);
  if (has_labels) return PointSet(std::move(coords), dim, std::move(labels));
  return PointSet(std::move(coords), dim);
}

template <typename T>
T read_le(const std::string& bytes, std::size_t offset) {
  std::make_unsigned_t<T> value = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b)
    value |= static_cast<std::make_unsigned_t<T>>(static_cast<unsigned char>(bytes[offset + b])) << (8 * b);
  return static_cast<T>(value);
}

template <typename T>
void write_le(std::string& out, T value) {
  auto bits = static_cast<std::make_unsigned_t<T>>(value);
  for (std::size_t b = 0; b < sizeof(T); ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xFF));
}

PointSet load_binary(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() < kHeaderBytes) binary_fail(path, bytes.size(), "truncated header");
  if (!std::equal(kMagic, kMagic + 4, bytes.begin())) binary_fail(path, 0, "bad magic");
  if (read_le<std::uint32_t>(bytes, 4) != kBinaryVersion) binary_fail(path, 4, "unsupported version");
  const auto n = read_le<std::uint64_t>(bytes, 8);
  const auto dim = read_le<std::uint32_t>(bytes, 16);
  const auto flag = static_cast<unsigned char>(bytes[20]);
  if (dim == 0) binary_fail(path, 16, "dimension must be at least 1");
  if (flag > 1) binary_fail(path, 20, "bad label flag");

  const std::size_t payload = bytes.size() - kHeaderBytes;
  const std::uint64_t per_point = 8ull * dim + (flag ? 8ull : 0ull);
  if (n > payload / per_point || n * per_point != payload)
    binary_fail(path, kHeaderBytes, "payload size does not match header");

  std::vector<double> coords(n * dim);
  std::size_t offset = kHeaderBytes;
  for (std::size_t i = 0; i < coords.size(); ++i, offset += 8) {
    coords[i] = std::bit_cast<double>(read_le<std::uint64_t>(bytes, offset));
    if (!std::isfinite(coords[i])) binary_fail(path, offset, "non-finite coordinate");
  }
  if (!flag) return PointSet(std::move(coords), dim);
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i, offset += 8) labels[i] = read_le<std::int64_t>(bytes, offset);
  return PointSet(std::move(coords), dim, std::move(labels));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

std::string render_csv(const PointSet& ps) {
  std::string out;
  const std::size_t dim = ps.dim();
  if (dim == 2) {
    out += "x,y";
  } else {
    for (std::size_t k = 0; k < dim; ++k) out += (k ? ",x" : "x") + std::to_string(k);
  }
  if (ps.has_labels()) out += ",label";
  out += '\n';
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto p = ps.point(i);
    for (std::size_t k = 0; k < dim; ++k) {
      if (k) out += ',';
      out += detail::format_double(p[k]);
    }
    if (ps.has_labels()) {
      out += ',';
      out += std::to_string(ps.labels()[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_binary(const PointSet& ps) {
  std::string out(kMagic, 4);
  write_le<std::uint32_t>(out, kBinaryVersion);
  write_le<std::uint64_t>(out, ps.size());
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(ps.dim()));
  out.push_back(ps.has_labels() ? 1 : 0);
  for (double c : ps.coords()) write_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(c));
  if (ps.has_labels())
    for (Label l : ps.labels()) write_le<std::int64_t>(out, l);
  return out;
}

void require_pairs(const PointSet& ps) {
  if (ps.size() < 2) throw DegenerateInputError("at least two points are required");
}

}  // namespace

PointSet load_points(const std::filesystem::path& path, FileFormat format, LabelColumn label_column) {
  return format == FileFormat::csv ? load_csv(path, label_column) : load_binary(path);
}

void save_points(const PointSet& ps, const std::filesystem::path& path, FileFormat format) {
  write_file(path, format == FileFormat::csv ? render_csv(ps) : render_binary(ps));
}

FileFormat format_from_extension(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".bin" || ext == ".ddcp") ? FileFormat::binary : FileFormat::csv;
}

double mean_pairwise_distance(const PointSet& ps) {
  require_pairs(ps);
  const std::size_t n = ps.size();
  const std::size_t dim = ps.dim();
  const double* x = ps.data();
  // One running sum in (i, j) order. The result is then the same bits on
  // any machine and thread count, which keeps d_c and everything derived
  // from it reproducible.
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) total += std::sqrt(squared_distance(x + i * dim, x + j * dim, dim));
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double mean = total / pairs;
  if (!(mean > 0.0)) throw DegenerateInputError("all points coincide; mean pairwise distance is zero");
  return mean;
}

double max_pairwise_distance(const PointSet& ps) {
  require_pairs(ps);
  const std::size_t n = ps.size();
  const std::size_t dim = ps.dim();
  const double* x = ps.data();
  double best = 0.0;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count()) reduction(max : best)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, squared_distance(x + i * dim, x + j * dim, dim));
  }
  return std::sqrt(best);
}

CutoffParams cutoff_from_ratio(const PointSet& ps, double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw std::invalid_argument("ratio must be positive");
  CutoffParams params;
  params.ratio = ratio;
  params.d_bar = mean_pairwise_distance(ps);
  params.d_c = params.d_bar * ratio;
  return params;
}

PointSet generate_twomoon(std::size_t n, double noise, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("twomoon needs at least two points");
  if (!(noise >= 0.0)) throw std::invalid_argument("noise must be non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> jitter(0.0, noise > 0.0 ? noise : 1.0);
  const std::size_t upper = n - n / 2;
  const std::size_t lower = n / 2;

  std::vector<double> coords;
  coords.reserve(2 * n);
  std::vector<Label> labels;
  labels.reserve(n);
  auto emit_arc = [&](std::size_t count, Label label) {
    for (std::size_t k = 0; k < count; ++k) {
      const double t = count > 1 ? std::numbers::pi * static_cast<double>(k) / static_cast<double>(count - 1) : 0.0;
      double x = label == 0 ? std::cos(t) : 1.0 - std::cos(t);
      double y = label == 0 ? std::sin(t) : 0.5 - std::sin(t);
      if (noise > 0.0) {
        x += jitter(rng);
        y += jitter(rng);
      }
      coords.push_back(x);
      coords.push_back(y);
      labels.push_back(label);
    }
  };
  emit_arc(upper, 0);
  emit_arc(lower, 1);
  return PointSet(std::move(coords), 2, std::move(labels));
}

ShapeParams default_shape_params(ShapeKind kind) {
  ShapeParams params;
  switch (kind) {
    case ShapeKind::flame_like:
      params.points_per_cluster = 500;
      params.noise = 0.08;
      break;
    case ShapeKind::t4_like:
      params.points_per_cluster = 1000;
      params.noise = 0.15;
      params.noise_fraction = 0.05;
      break;
    case ShapeKind::blobs:
      params.points_per_cluster = 100;
      params.noise = 0.1;
      params.centers = {{0.0, 0.0}, {20.0, 0.0}};
      break;
  }
  return params;
}

namespace {

struct ShapeSampler {
  std::mt19937_64 rng;
  std::vector<double> coords;
  std::vector<Label> labels;

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double gauss(double sigma) { return sigma > 0.0 ? std::normal_distribution<double>(0.0, sigma)(rng) : 0.0; }
  void emit(double x, double y, Label label) {
    coords.push_back(x);
    coords.push_back(y);
    labels.push_back(label);
  }
};

// Points evenly spaced along the polyline's arc length, each displaced by
// isotropic Gaussian jitter.
void sample_polyline(ShapeSampler& s, const std::vector<std::array<double, 2>>& vertices, double jitter,
                     std::size_t count, Label label) {
  std::vector<double> cumulative{0.0};
  for (std::size_t v = 1; v < vertices.size(); ++v)
    cumulative.push_back(cumulative.back() + std::hypot(vertices[v][0] - vertices[v - 1][0],
                                                        vertices[v][1] - vertices[v - 1][1]));
  const double length = cumulative.back();
  for (std::size_t k = 0; k < count; ++k) {
    const double along = length * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
    std::size_t seg = std::upper_bound(cumulative.begin(), cumulative.end(), along) - cumulative.begin();
    seg = std::clamp<std::size_t>(seg, 1, vertices.size() - 1);
    const auto& a = vertices[seg - 1];
    const auto& b = vertices[seg];
    const double seg_len = cumulative[seg] - cumulative[seg - 1];
    const double t = seg_len > 0.0 ? (along - cumulative[seg - 1]) / seg_len : 0.0;
    const double dx = s.gauss(jitter);
    const double dy = s.gauss(jitter);
    s.emit(a[0] + t * (b[0] - a[0]) + dx, a[1] + t * (b[1] - a[1]) + dy, label);
  }
}

std::vector<std::array<double, 2>> arc_vertices(double cx, double cy, double radius, double from_deg,
                                                double to_deg, std::size_t segments) {
  std::vector<std::array<double, 2>> out;
  for (std::size_t k = 0; k <= segments; ++k) {
    const double deg = from_deg + (to_deg - from_deg) * static_cast<double>(k) / static_cast<double>(segments);
    const double rad = deg * std::numbers::pi / 180.0;
    out.push_back({cx + radius * std::cos(rad), cy + radius * std::sin(rad)});
  }
  return out;
}

}  // namespace

PointSet generate_shapes(ShapeKind kind, const ShapeParams& params, std::uint64_t seed) {
  if (params.points_per_cluster == 0) throw std::invalid_argument("points_per_cluster must be positive");
  if (!(params.noise >= 0.0)) throw std::invalid_argument("noise must be non-negative");
  if (!(params.noise_fraction >= 0.0 && params.noise_fraction < 1.0))
    throw std::invalid_argument("noise_fraction must lie in [0, 1)");

  ShapeSampler s{std::mt19937_64(seed), {}, {}};
  const std::size_t m = params.points_per_cluster;
  switch (kind) {
    case ShapeKind::flame_like: {
      // Gaussian disc above a crescent that wraps its lower side. The crescent
      // holds twice as many points so both shapes peak at similar density.
      constexpr double kDiscSpread = 0.35;
      for (std::size_t k = 0; k < m; ++k) {
        const double dx = s.gauss(kDiscSpread);
        const double dy = s.gauss(kDiscSpread);
        s.emit(dx, 1.0 + dy, 0);
      }
      sample_polyline(s, arc_vertices(0.0, 1.0, 2.0, 200.0, 340.0, 64), params.noise, 2 * m, 1);
      break;
    }
    case ShapeKind::t4_like: {
      std::vector<std::array<double, 2>> wave;
      for (std::size_t k = 0; k <= 48; ++k) {
        const double x = 0.8 + 4.0 * static_cast<double>(k) / 48.0;
        wave.push_back({x, 5.5 + 0.5 * std::sin(1.6 * x)});
      }
      sample_polyline(s, wave, params.noise, m, 0);
      sample_polyline(s, arc_vertices(7.5, 4.6, 1.4, 20.0, 250.0, 48), params.noise, m, 1);
      sample_polyline(s, {{0.8, 0.8}, {4.2, 3.0}}, params.noise, m, 2);
      sample_polyline(s, {{6.0, 1.0}, {9.4, 1.0}, {9.4, 2.2}}, params.noise, m, 3);
      const auto background =
          static_cast<std::size_t>(std::llround(params.noise_fraction * static_cast<double>(4 * m)));
      for (std::size_t k = 0; k < background; ++k) {
        const double x = s.uniform(0.0, 10.0);
        const double y = s.uniform(0.0, 7.0);
        s.emit(x, y, kNoiseLabel);
      }
      break;
    }
    case ShapeKind::blobs: {
      if (params.centers.empty()) throw std::invalid_argument("blobs need at least one center");
      if (!params.spreads.empty() && params.spreads.size() != params.centers.size())
        throw std::invalid_argument("spreads must match centers");
      for (std::size_t c = 0; c < params.centers.size(); ++c) {
        const double spread = params.spreads.empty() ? params.noise : params.spreads[c];
        if (!(spread >= 0.0)) throw std::invalid_argument("spread must be non-negative");
        for (std::size_t k = 0; k < m; ++k) {
          const double x = params.centers[c][0] + s.gauss(spread);
          const double y = params.centers[c][1] + s.gauss(spread);
          s.emit(x, y, static_cast<Label>(c));
        }
      }
      break;
    }
  }
  return PointSet(std::move(s.coords), 2, std::move(s.labels));
}

}  // namespace ddc
