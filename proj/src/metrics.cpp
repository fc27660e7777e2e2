#include "ddc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "ddc/error.hpp"

namespace ddc {

std::vector<std::size_t> Contingency::row_sums() const {
  std::vector<std::size_t> out(counts.size(), 0);
  for (std::size_t a = 0; a < counts.size(); ++a)
    for (std::size_t c : counts[a]) out[a] += c;
  return out;
}

std::vector<std::size_t> Contingency::col_sums() const {
  std::vector<std::size_t> out(true_ids.size(), 0);
  for (const auto& row : counts)
    for (std::size_t b = 0; b < row.size(); ++b) out[b] += row[b];
  return out;
}

Contingency contingency(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth) {
  if (pred.size() != truth.size()) throw std::invalid_argument("prediction and truth lengths differ");
  Contingency table;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (truth[i] < 0) continue;
    table.pred_ids.push_back(pred[i]);
    table.true_ids.push_back(truth[i]);
    ++table.n_scored;
  }
  if (table.n_scored == 0) throw DegenerateInputError("no scored points (every truth label is negative)");
  for (auto* ids : {&table.pred_ids, &table.true_ids}) {
    std::sort(ids->begin(), ids->end());
    ids->erase(std::unique(ids->begin(), ids->end()), ids->end());
  }
  auto dense = [](const std::vector<std::int64_t>& ids, std::int64_t v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  table.counts.assign(table.pred_ids.size(), std::vector<std::size_t>(table.true_ids.size(), 0));
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (truth[i] < 0) continue;
    ++table.counts[dense(table.pred_ids, pred[i])][dense(table.true_ids, truth[i])];
  }
  return table;
}

std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights) {
  // Shortest augmenting path Hungarian method with potentials, minimizing
  // the negated weights. Indices are 1-based internally; 0 is the sentinel.
  const std::size_t m = weights.size();
  for (const auto& row : weights)
    if (row.size() != m) throw std::invalid_argument("assignment matrix must be square");
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(m + 1, 0), v(m + 1, 0);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);
  for (std::size_t row = 1; row <= m; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[col0] = true;
      const std::size_t r = match[col0];
      std::int64_t delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= m; ++c) {
        if (used[c]) continue;
        const std::int64_t cur = -weights[r - 1][c - 1] - u[r] - v[c];
        if (cur < minv[c]) {
          minv[c] = cur;
          way[c] = col0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      for (std::size_t c = 0; c <= m; ++c) {
        if (used[c]) {
          u[match[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> assignment(m);
  for (std::size_t c = 1; c <= m; ++c) assignment[match[c] - 1] = c - 1;
  return assignment;
}

double accuracy(const Contingency& table) {
  const std::size_t m = std::max(table.pred_ids.size(), table.true_ids.size());
  std::vector<std::vector<std::int64_t>> weights(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t a = 0; a < table.counts.size(); ++a)
    for (std::size_t b = 0; b < table.counts[a].size(); ++b)
      weights[a][b] = static_cast<std::int64_t>(table.counts[a][b]);
  const auto assignment = max_weight_assignment(weights);
  std::int64_t matched = 0;
  for (std::size_t a = 0; a < m; ++a) matched += weights[a][assignment[a]];
  return static_cast<double>(matched) / static_cast<double>(table.n_scored);
}

double nmi(const Contingency& table) {
  const double n = static_cast<double>(table.n_scored);
  const auto rows = table.row_sums();
  const auto cols = table.col_sums();
  auto entropy = [n](const std::vector<std::size_t>& sizes) {
    double h = 0.0;
    for (std::size_t s : sizes)
      if (s > 0) {
        const double p = static_cast<double>(s) / n;
        h -= p * std::log(p);
      }
    return h;
  };
  const double h_pred = entropy(rows);
  const double h_true = entropy(cols);
  if (rows.size() == 1 && cols.size() == 1) return 1.0;
  if (h_pred <= 0.0 || h_true <= 0.0) return 0.0;
  double mi = 0.0;
  for (std::size_t a = 0; a < table.counts.size(); ++a)
    for (std::size_t b = 0; b < table.counts[a].size(); ++b) {
      const std::size_t c = table.counts[a][b];
      if (c == 0) continue;
      const double joint = static_cast<double>(c) / n;
      mi += joint * std::log(static_cast<double>(c) * n / (static_cast<double>(rows[a]) * static_cast<double>(cols[b])));
    }
  return std::clamp(mi / std::sqrt(h_pred * h_true), 0.0, 1.0);
}

double accuracy(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth) {
  return accuracy(contingency(pred, truth));
}

double nmi(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth) {
  return nmi(contingency(pred, truth));
}

EvalReport evaluate(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth) {
  EvalReport report;
  report.table = contingency(pred, truth);
  report.acc = accuracy(report.table);
  report.nmi = nmi(report.table);
  report.k_pred = report.table.pred_ids.size();
  report.k_true = report.table.true_ids.size();
  report.n_scored = report.table.n_scored;
  return report;
}

std::string to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["acc"] = report.acc;
  j["nmi"] = report.nmi;
  j["k_pred"] = report.k_pred;
  j["k_true"] = report.k_true;
  j["n_scored"] = report.n_scored;
  return j.dump();
}

}  // namespace ddc
