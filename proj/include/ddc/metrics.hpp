#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ddc {

// Co-occurrence counts over scored points (truth >= 0). Rows follow the
// distinct predicted ids in ascending order, columns the distinct true ids.
struct Contingency {
  std::vector<std::int64_t> pred_ids;
  std::vector<std::int64_t> true_ids;
  std::vector<std::vector<std::size_t>> counts;
  std::size_t n_scored = 0;

  std::vector<std::size_t> row_sums() const;
  std::vector<std::size_t> col_sums() const;
};

Contingency contingency(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth);

// Maximum-weight perfect matching on a square matrix; returns the column
// assigned to each row.
std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights);

double accuracy(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth);

// I(U;V) / sqrt(H(U) H(V)) with natural logs.
double nmi(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth);

double accuracy(const Contingency& table);
double nmi(const Contingency& table);

struct EvalReport {
  double acc = 0.0;
  double nmi = 0.0;
  std::size_t k_pred = 0;
  std::size_t k_true = 0;
  std::size_t n_scored = 0;
  Contingency table;
};

EvalReport evaluate(std::span<const std::int64_t> pred, std::span<const std::int64_t> truth);

// {"acc":..,"nmi":..,"k_pred":..,"k_true":..,"n_scored":..}
std::string to_json(const EvalReport& report);

}  // namespace ddc
