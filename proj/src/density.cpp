#include "ddc/density.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ddc/detail/text.hpp"
#include "ddc/error.hpp"
#include "ddc/parallel.hpp"

namespace ddc {

std::vector<double> compute_rho(const PointSet& ps, double d_c) {
  if (ps.size() < 2) throw DegenerateInputError("density needs at least two points");
  if (!(d_c > 0.0) || !std::isfinite(d_c)) throw std::invalid_argument("d_c must be positive");
  const std::size_t n = ps.size();
  const std::size_t dim = ps.dim();
  const double* x = ps.data();
  std::vector<double> rho(n, 0.0);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double* xi = x + i * dim;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double scaled = std::sqrt(squared_distance(xi, x + j * dim, dim)) / d_c;
      sum += std::exp(-(scaled * scaled));
    }
    rho[i] = sum;
  }
  return rho;
}

DensityProfile compute_profile(const PointSet& ps, double d_c) {
  DensityProfile profile;
  profile.rho = compute_rho(ps, d_c);
  profile.d_c = d_c;
  const std::size_t n = ps.size();
  const std::size_t dim = ps.dim();
  const double* x = ps.data();

  profile.order.resize(n);
  std::iota(profile.order.begin(), profile.order.end(), std::size_t{0});
  std::sort(profile.order.begin(), profile.order.end(),
            [&](std::size_t a, std::size_t b) { return profile.denser(a, b); });

  const double max_dist = max_pairwise_distance(ps);
  if (!(max_dist > 0.0)) throw DegenerateInputError("all points coincide");

  profile.delta.assign(n, 0.0);
  profile.nhd.assign(n, kNoIndex);
  profile.delta[profile.order.front()] = max_dist;

  // Only points earlier in the order are denser, so each point scans its
  // prefix. Distances are compared squared; ties go to the smaller index.
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 32) num_threads(worker_count())
  for (std::ptrdiff_t pp = 1; pp < count; ++pp) {
    const std::size_t i = profile.order[static_cast<std::size_t>(pp)];
    const double* xi = x + i * dim;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = kNoIndex;
    for (std::ptrdiff_t q = 0; q < pp; ++q) {
      const std::size_t j = profile.order[static_cast<std::size_t>(q)];
      const double d2 = squared_distance(xi, x + j * dim, dim);
      if (d2 < best || (d2 == best && j < best_index)) {
        best = d2;
        best_index = j;
      }
    }
    profile.delta[i] = std::sqrt(best);
    profile.nhd[i] = best_index;
  }
  return profile;
}

std::vector<DecisionRow> decision_graph(const DensityProfile& profile) {
  std::vector<DecisionRow> rows;
  rows.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) rows.push_back({i, profile.rho[i], profile.delta[i]});
  return rows;
}

void write_decision_csv(std::ostream& out, const std::vector<DecisionRow>& rows) {
  out << "index,rho,delta\n";
  for (const auto& row : rows)
    out << row.index << ',' << detail::format_double(row.rho) << ',' << detail::format_double(row.delta) << '\n';
}

std::vector<DecisionRow> read_decision_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<DecisionRow> rows;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = detail::trim(line);
    if (trimmed.empty()) continue;
    if (line_no == 1) {
      if (trimmed != "index,rho,delta") fail("expected header 'index,rho,delta'");
      continue;
    }
    const auto fields = detail::split_fields(trimmed);
    if (fields.size() != 3) fail("expected 3 fields");
    const auto index = detail::parse_int(fields[0]);
    const auto rho = detail::parse_double(fields[1]);
    const auto delta = detail::parse_double(fields[2]);
    if (!index || *index < 0 || !rho || !delta) fail("malformed row");
    rows.push_back({static_cast<std::size_t>(*index), *rho, *delta});
  }
  if (line_no == 0) fail("empty decision-graph file");
  return rows;
}

}  // namespace ddc
