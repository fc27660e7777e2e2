#include "ddc/result_io.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "ddc/detail/text.hpp"
#include "ddc/error.hpp"

namespace ddc {

namespace {

constexpr const char* kHeader = "index,x,y,local_label,final_label,is_core,is_center";

void fill_coords(const PointSet& ps, ResultTable& table) {
  table.x.resize(ps.size());
  table.y.resize(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto p = ps.point(i);
    table.x[i] = p[0];
    table.y[i] = p.size() > 1 ? p[1] : 0.0;
  }
}

}  // namespace

ResultTable result_table(const PointSet& ps, const MergedClustering& result) {
  ResultTable table;
  fill_coords(ps, table);
  const std::size_t n = ps.size();
  table.local_label.assign(result.local.labels.begin(), result.local.labels.end());
  table.final_label.assign(result.final_labels.begin(), result.final_labels.end());
  table.is_core = result.is_core;
  table.is_center.assign(n, false);
  for (std::size_t c : result.final_centers) table.is_center[c] = true;
  return table;
}

ResultTable result_table(const PointSet& ps, const BaselineResult& result) {
  ResultTable table;
  fill_coords(ps, table);
  const std::size_t n = ps.size();
  table.local_label = result.labels;
  table.final_label = result.labels;
  table.is_core = result.is_core.empty() ? std::vector<bool>(n, false) : result.is_core;
  table.is_center.assign(n, false);
  for (std::size_t c : result.centers) table.is_center[c] = true;
  return table;
}

void write_result_csv(std::ostream& out, const ResultTable& table) {
  out << kHeader << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << i << ',' << detail::format_double(table.x[i]) << ',' << detail::format_double(table.y[i]) << ','
        << table.local_label[i] << ',' << table.final_label[i] << ',' << (table.is_core[i] ? 1 : 0) << ','
        << (table.is_center[i] ? 1 : 0) << '\n';
  }
}

ResultTable read_result_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  ResultTable table;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + what);
  };
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = detail::trim(line);
    if (trimmed.empty()) continue;
    if (!header_seen) {
      if (trimmed != kHeader) fail(std::string("expected header '") + kHeader + "'");
      header_seen = true;
      continue;
    }
    const auto f = detail::split_fields(trimmed);
    if (f.size() != 7) fail("expected 7 fields");
    const auto index = detail::parse_int(f[0]);
    const auto x = detail::parse_double(f[1]);
    const auto y = detail::parse_double(f[2]);
    const auto local = detail::parse_int(f[3]);
    const auto final = detail::parse_int(f[4]);
    const auto core = detail::parse_int(f[5]);
    const auto center = detail::parse_int(f[6]);
    if (!index || !x || !y || !local || !final || !core || !center) fail("malformed row");
    if (*index != static_cast<std::int64_t>(table.size())) fail("rows must be index-ascending from 0");
    table.x.push_back(*x);
    table.y.push_back(*y);
    table.local_label.push_back(*local);
    table.final_label.push_back(*final);
    table.is_core.push_back(*core != 0);
    table.is_center.push_back(*center != 0);
  }
  if (!header_seen) fail("empty result file");
  return table;
}

}  // namespace ddc
