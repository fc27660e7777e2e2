#include <cmath>
#include <random>

#include "ddc/error.hpp"
#include "ddc/metrics.hpp"
#include "doctest.h"
#include "json.hpp"
#include "reference.hpp"

using Labels = std::vector<std::int64_t>;

namespace {

Labels random_labels(std::mt19937_64& rng, std::size_t n, std::int64_t k) {
  std::uniform_int_distribution<std::int64_t> u(0, k - 1);
  Labels out(n);
  for (auto& l : out) l = u(rng);
  return out;
}

// Direct entropy-based NMI from joint probabilities.
double reference_nmi(const Labels& a, const Labels& b) {
  std::map<std::int64_t, double> ca, cb;
  std::map<std::pair<std::int64_t, std::int64_t>, double> cab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1.0;
    cb[b[i]] += 1.0;
    cab[{a[i], b[i]}] += 1.0;
  }
  const double n = static_cast<double>(a.size());
  double ha = 0, hb = 0, mi = 0;
  for (auto [_, c] : ca) ha -= c / n * std::log(c / n);
  for (auto [_, c] : cb) hb -= c / n * std::log(c / n);
  for (auto [key, c] : cab) mi += c / n * std::log(c * n / (ca[key.first] * cb[key.second]));
  if (ca.size() == 1 && cb.size() == 1) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;
  return mi / std::sqrt(ha * hb);
}

}  // namespace

TEST_CASE("accuracy examples") {
  CHECK(ddc::accuracy(Labels{0, 0, 1, 1}, Labels{1, 1, 0, 0}) == 1.0);
  CHECK(ddc::accuracy(Labels{0, 1, 1, 1}, Labels{0, 0, 1, 1}) == 0.75);

  Labels truth, pred(1000, 0);
  for (int i = 0; i < 1000; ++i) truth.push_back(i % 10);
  CHECK(ddc::accuracy(pred, truth) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(ddc::nmi(pred, truth) == 0.0);
}

TEST_CASE("nmi examples") {
  CHECK(ddc::nmi(Labels{0, 0, 1, 1, 2}, Labels{5, 5, 3, 3, 9}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ddc::nmi(Labels{0, 0, 1, 1}, Labels{0, 1, 0, 1}) == doctest::Approx(0.0));
  CHECK(ddc::nmi(Labels{0, 0, 0}, Labels{1, 1, 1}) == 1.0);
  CHECK(ddc::nmi(Labels{0, 1, 2}, Labels{1, 1, 1}) == 0.0);
}

TEST_CASE("contingency table") {
  const auto t = ddc::contingency(Labels{0, 0, 1}, Labels{0, 0, 0});
  CHECK(t.counts == std::vector<std::vector<std::size_t>>{{2}, {1}});
  CHECK(t.pred_ids == Labels{0, 1});
  CHECK(t.true_ids == Labels{0});

  const auto noisy = ddc::contingency(Labels{3, 3, 7, 7, 7, -1}, Labels{0, -1, 1, 1, 0, 1});
  CHECK(noisy.n_scored == 5);
  CHECK(noisy.pred_ids == Labels{-1, 3, 7});
  CHECK(noisy.row_sums() == std::vector<std::size_t>{1, 1, 3});
  CHECK(noisy.col_sums() == std::vector<std::size_t>{2, 3});

  CHECK_THROWS_AS(ddc::contingency(Labels{0, 1}, Labels{0}), std::invalid_argument);
  CHECK_THROWS_AS(ddc::contingency(Labels{0, 1}, Labels{-1, -1}), ddc::DegenerateInputError);
}

TEST_CASE("noise truth labels are not scored") {
  const Labels pred{0, 0, 1, 1, 1};
  const Labels truth{0, 0, 1, 1, -1};
  CHECK(ddc::accuracy(pred, truth) == 1.0);
  CHECK(ddc::nmi(pred, truth) == doctest::Approx(1.0));
}

TEST_CASE("hungarian assignment") {
  const std::vector<std::vector<std::int64_t>> w{{1, 7, 3}, {5, 2, 9}, {4, 8, 6}};
  const auto a = ddc::max_weight_assignment(w);
  // Best total 7 + 9 + 4 = 20.
  CHECK(a == std::vector<std::size_t>{1, 2, 0});
  CHECK(ddc::max_weight_assignment({}).empty());
  CHECK_THROWS_AS(ddc::max_weight_assignment({{1, 2}}), std::invalid_argument);
}

TEST_CASE("accuracy equals the exhaustive optimum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t kp = 1 + static_cast<std::int64_t>(rng() % 6);
    const std::int64_t kt = 1 + static_cast<std::int64_t>(rng() % 6);
    const std::size_t n = 5 + rng() % 60;
    const auto pred = random_labels(rng, n, kp);
    const auto truth = random_labels(rng, n, kt);
    CHECK(ddc::accuracy(pred, truth) == ref::brute_accuracy(pred, truth));
  }
}

TEST_CASE("metrics under relabeling and symmetry") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 10 + rng() % 200;
    const auto a = random_labels(rng, n, 1 + static_cast<std::int64_t>(rng() % 7));
    const auto b = random_labels(rng, n, 1 + static_cast<std::int64_t>(rng() % 7));
    const double acc = ddc::accuracy(a, b);
    const double mi = ddc::nmi(a, b);
    CHECK(acc >= 0.0);
    CHECK(acc <= 1.0);
    CHECK(mi >= 0.0);
    CHECK(mi <= 1.0 + 1e-12);
    CHECK(std::abs(mi - ddc::nmi(b, a)) <= 1e-12);
    CHECK(std::abs(mi - reference_nmi(a, b)) <= 1e-12);

    std::vector<std::int64_t> perm{40, -7, 13, 2, 99, 5, 0};
    std::shuffle(perm.begin(), perm.end(), rng);
    Labels relabeled(n);
    for (std::size_t i = 0; i < n; ++i) relabeled[i] = perm[static_cast<std::size_t>(a[i])];
    CHECK(ddc::accuracy(relabeled, b) == acc);
    CHECK(std::abs(ddc::nmi(relabeled, b) - mi) <= 1e-12);
    CHECK(ddc::accuracy(relabeled, a) == 1.0);
  }
}

TEST_CASE("accuracy of one means an exact relabeling") {
  const Labels truth{0, 0, 1, 1, 2, 2};
  CHECK(ddc::accuracy(Labels{5, 5, 6, 6, 7, 7}, truth) == 1.0);
  CHECK(ddc::accuracy(Labels{5, 5, 6, 6, 7, 8}, truth) < 1.0);
  CHECK(ddc::accuracy(Labels{5, 5, 6, 6, 6, 6}, truth) < 1.0);
}

TEST_CASE("evaluation report") {
  const auto r = ddc::evaluate(Labels{1, 1, 0, 0, 2}, Labels{0, 0, 1, 1, -1});
  CHECK(r.acc == 1.0);
  CHECK(r.nmi == doctest::Approx(1.0));
  CHECK(r.k_pred == 2);
  CHECK(r.k_true == 2);
  CHECK(r.n_scored == 4);

  const auto j = nlohmann::json::parse(ddc::to_json(r));
  for (const char* key : {"acc", "nmi", "k_pred", "k_true", "n_scored"}) CHECK(j.contains(key));
  CHECK(j["acc"].get<double>() == 1.0);
  CHECK(j["n_scored"].get<int>() == 4);
}
