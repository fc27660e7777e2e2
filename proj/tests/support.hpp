#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ddc/dataset.hpp"

namespace testing {

// Scratch directory removed when the test case ends.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("ddc-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Two plus-shaped blobs of five points, centers at (0,0) and (10,0).
inline ddc::PointSet plus_blobs() {
  std::vector<double> c;
  for (double cx : {0.0, 10.0}) {
    const double pts[5][2] = {{0, 0}, {0.3, 0}, {-0.3, 0}, {0, 0.3}, {0, -0.3}};
    for (const auto& p : pts) {
      c.push_back(cx + p[0]);
      c.push_back(p[1]);
    }
  }
  return ddc::PointSet(std::move(c), 2, std::vector<ddc::Label>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
}

inline ddc::PointSet uniform_points(std::size_t n, std::size_t dim, std::uint64_t seed, double scale = 10.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, scale);
  std::vector<double> c(n * dim);
  for (auto& v : c) v = u(rng);
  return ddc::PointSet(std::move(c), dim);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace testing
