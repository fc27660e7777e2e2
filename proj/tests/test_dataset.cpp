#include <cmath>
#include <numbers>
#include <random>

#include "ddc/dataset.hpp"
#include "ddc/error.hpp"
#include "doctest.h"
#include "reference.hpp"
#include "support.hpp"

using ddc::PointSet;
using testing::TempDir;

TEST_CASE("PointSet validates its invariants") {
  CHECK_THROWS_AS(PointSet({1.0, 2.0, 3.0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({1.0, 2.0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({1.0, NAN}, 2), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({1.0, INFINITY}, 1), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({1.0, 2.0}, 2, std::vector<ddc::Label>{0, 1}), std::invalid_argument);

  const PointSet ps({0, 1, 2, 3, 4, 5}, 3);
  CHECK(ps.size() == 2);
  CHECK(ps.dim() == 3);
  CHECK(ps.point(1)[2] == 5.0);
  CHECK_FALSE(ps.has_labels());
  CHECK(PointSet().size() == 0);
}

TEST_CASE("load_points parses CSV bodies") {
  TempDir dir;

  SUBCASE("plain coordinates") {
    testing::write_file(dir / "a.csv", "0.0,0.0\n1.0,0.0\n");
    const auto ps = ddc::load_points(dir / "a.csv", ddc::FileFormat::csv);
    CHECK(ps.size() == 2);
    CHECK(ps.dim() == 2);
    CHECK_FALSE(ps.has_labels());
    CHECK(ps.point(1)[0] == 1.0);
  }

  SUBCASE("trailing label column") {
    testing::write_file(dir / "b.csv", "0,0,1\n1,0,1\n5,5,0");
    const auto ps = ddc::load_points(dir / "b.csv", ddc::FileFormat::csv, ddc::LabelColumn::last);
    REQUIRE(ps.has_labels());
    CHECK(ps.labels() == std::vector<ddc::Label>{1, 1, 0});
    CHECK(ps.dim() == 2);
  }

  SUBCASE("without a label flag the same body is three-dimensional") {
    testing::write_file(dir / "b.csv", "0,0,1\n1,0,1\n5,5,0");
    const auto ps = ddc::load_points(dir / "b.csv", ddc::FileFormat::csv);
    CHECK(ps.dim() == 3);
    CHECK_FALSE(ps.has_labels());
  }

  SUBCASE("header naming a label column") {
    testing::write_file(dir / "c.csv", "x,y,label\r\n1,2,0\r\n\r\n3,4,-1\r\n");
    const auto ps = ddc::load_points(dir / "c.csv", ddc::FileFormat::csv);
    REQUIRE(ps.has_labels());
    CHECK(ps.labels() == std::vector<ddc::Label>{0, -1});
    CHECK(ps.point(1)[1] == 4.0);
  }

  SUBCASE("header only") {
    testing::write_file(dir / "d.csv", "x,y\n");
    CHECK(ddc::load_points(dir / "d.csv", ddc::FileFormat::csv).size() == 0);
  }
}

TEST_CASE("load_points reports malformed CSV with the line number") {
  TempDir dir;
  const auto expect_error = [&](const std::string& body, const std::string& fragment) {
    testing::write_file(dir / "bad.csv", body);
    try {
      (void)ddc::load_points(dir / "bad.csv", ddc::FileFormat::csv);
      FAIL("expected a parse error");
    } catch (const ddc::ParseError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("x,y\n1,2\n3\n", "bad.csv:3:");
  expect_error("1,2\n3,abc\n", "bad.csv:2:");
  expect_error("1,2\nnan,1\n", "bad.csv:2:");
  expect_error("x,y,label\n1,2,zero\n", "bad.csv:2:");
  CHECK_THROWS_AS(ddc::load_points(dir / "missing.csv", ddc::FileFormat::csv), ddc::IoError);
}

TEST_CASE("binary and CSV round trips") {
  TempDir dir;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 3.0);
  std::vector<double> c(200);
  for (auto& v : c) v = g(rng);
  c[0] = 0.1 + 0.2;  // not exactly representable as a short decimal
  c[1] = -0.0;
  std::vector<ddc::Label> labels(100);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<ddc::Label>(i % 3) - 1;
  const PointSet ps(c, 2, labels);

  for (auto fmt : {ddc::FileFormat::binary, ddc::FileFormat::csv}) {
    const auto path = dir / (fmt == ddc::FileFormat::binary ? "p.bin" : "p.csv");
    ddc::save_points(ps, path, fmt);
    const auto back = ddc::load_points(path, fmt);
    REQUIRE(back.size() == 100);
    for (std::size_t k = 0; k < c.size(); ++k)
      CHECK(std::bit_cast<std::uint64_t>(back.coords()[k]) == std::bit_cast<std::uint64_t>(c[k]));
    CHECK(back.labels() == labels);
  }

  SUBCASE("empty sets") {
    ddc::save_points(PointSet(), dir / "e.bin", ddc::FileFormat::binary);
    ddc::save_points(PointSet(), dir / "e.csv", ddc::FileFormat::csv);
    CHECK(ddc::load_points(dir / "e.bin", ddc::FileFormat::binary).size() == 0);
    CHECK(ddc::load_points(dir / "e.csv", ddc::FileFormat::csv).size() == 0);
  }

  SUBCASE("higher dimensions keep their width") {
    const PointSet p3({1, 2, 3, 4, 5, 6}, 3);
    ddc::save_points(p3, dir / "p3.csv", ddc::FileFormat::csv);
    CHECK(ddc::load_points(dir / "p3.csv", ddc::FileFormat::csv) == p3);
  }
}

TEST_CASE("binary loader rejects corrupt files with an offset") {
  TempDir dir;
  ddc::save_points(PointSet({1, 2, 3, 4}, 2), dir / "ok.bin", ddc::FileFormat::binary);
  const std::string good = testing::read_file(dir / "ok.bin");

  testing::write_file(dir / "t.bin", good.substr(0, 10));
  CHECK_THROWS_WITH_AS(ddc::load_points(dir / "t.bin", ddc::FileFormat::binary),
                       doctest::Contains("offset"), ddc::ParseError);

  std::string magic = good;
  magic[0] = 'X';
  testing::write_file(dir / "m.bin", magic);
  CHECK_THROWS_AS(ddc::load_points(dir / "m.bin", ddc::FileFormat::binary), ddc::ParseError);

  testing::write_file(dir / "s.bin", good.substr(0, good.size() - 3));
  CHECK_THROWS_AS(ddc::load_points(dir / "s.bin", ddc::FileFormat::binary), ddc::ParseError);
}

TEST_CASE("format_from_extension") {
  CHECK(ddc::format_from_extension("a.bin") == ddc::FileFormat::binary);
  CHECK(ddc::format_from_extension("a.ddcp") == ddc::FileFormat::binary);
  CHECK(ddc::format_from_extension("a.csv") == ddc::FileFormat::csv);
  CHECK(ddc::format_from_extension("a") == ddc::FileFormat::csv);
}

TEST_CASE("mean pairwise distance") {
  CHECK(ddc::mean_pairwise_distance(PointSet({0, 0, 1, 0, 2, 0}, 2)) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(ddc::mean_pairwise_distance(PointSet({0, 0, 3, 4}, 2)) == 5.0);
  CHECK_THROWS_AS(ddc::mean_pairwise_distance(PointSet({1, 1}, 2)), ddc::DegenerateInputError);
  CHECK_THROWS_AS(ddc::mean_pairwise_distance(PointSet({1, 1, 1, 1}, 2)), ddc::DegenerateInputError);
  CHECK(ddc::max_pairwise_distance(PointSet({0, 0, 1, 0, 3, 0}, 2)) == 3.0);

  const auto ps = testing::uniform_points(300, 3, 11);
  CHECK(testing::rel_diff(ddc::mean_pairwise_distance(ps), ref::mean_pairwise(ps)) < 1e-12);
}

TEST_CASE("mean pairwise distance under rigid motions and scaling") {
  const auto ps = testing::uniform_points(150, 2, 5);
  const double base = ddc::mean_pairwise_distance(ps);
  const double angle = 0.7;
  std::vector<double> moved, scaled;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double x = ps.point(i)[0], y = ps.point(i)[1];
    moved.push_back(std::cos(angle) * x - std::sin(angle) * y + 123.0);
    moved.push_back(std::sin(angle) * x + std::cos(angle) * y - 45.0);
    scaled.push_back(2.5 * x);
    scaled.push_back(2.5 * y);
  }
  CHECK(testing::rel_diff(ddc::mean_pairwise_distance(PointSet(moved, 2)), base) < 1e-9);
  CHECK(testing::rel_diff(ddc::mean_pairwise_distance(PointSet(scaled, 2)), 2.5 * base) < 1e-12);
}

TEST_CASE("cutoff from ratio") {
  const PointSet line({0, 0, 1, 0, 2, 0}, 2);
  const auto p = ddc::cutoff_from_ratio(line, 0.1);
  CHECK(p.d_bar == doctest::Approx(4.0 / 3.0));
  CHECK(p.d_c == doctest::Approx(4.0 / 30.0).epsilon(1e-14));
  CHECK(ddc::cutoff_from_ratio(line, 1.0).d_c == ddc::mean_pairwise_distance(line));
  CHECK(ddc::cutoff_from_ratio(line).ratio == 0.1);
  CHECK_THROWS_AS(ddc::cutoff_from_ratio(line, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ddc::cutoff_from_ratio(line, -1.0), std::invalid_argument);

  double prev = 0.0;
  for (double r = 0.01; r < 2.0; r += 0.07) {
    const double d_c = ddc::cutoff_from_ratio(line, r).d_c;
    CHECK(d_c > prev);
    prev = d_c;
  }

  const auto moons = ddc::generate_twomoon(2000, 0.06, 3);
  CHECK(testing::rel_diff(ddc::cutoff_from_ratio(moons, 0.1).d_c, 0.1 * ref::mean_pairwise(moons)) < 1e-12);
}

TEST_CASE("twomoon generator") {
  const auto clean = ddc::generate_twomoon(4, 0.0, 1);
  REQUIRE(clean.size() == 4);
  REQUIRE(clean.has_labels());
  for (std::size_t i = 0; i < 4; ++i) {
    const double x = clean.point(i)[0], y = clean.point(i)[1];
    if (clean.labels()[i] == 0) {
      CHECK(std::hypot(x, y) == doctest::Approx(1.0));
      CHECK(y >= -1e-12);
    } else {
      CHECK(std::hypot(x - 1.0, y - 0.5) == doctest::Approx(1.0));
      CHECK(y <= 0.5 + 1e-12);
    }
  }
  CHECK(clean.point(0)[0] == doctest::Approx(1.0));  // t = 0 on the upper arc

  const auto a = ddc::generate_twomoon(2000, 0.06, 9);
  CHECK(a == ddc::generate_twomoon(2000, 0.06, 9));
  CHECK_FALSE(a == ddc::generate_twomoon(2000, 0.06, 10));
  CHECK(std::count(a.labels().begin(), a.labels().end(), 1) == 1000);
  CHECK_THROWS_AS(ddc::generate_twomoon(1, 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ddc::generate_twomoon(10, -0.1, 0), std::invalid_argument);
}

TEST_CASE("shape generators") {
  SUBCASE("blobs") {
    ddc::ShapeParams p;
    p.points_per_cluster = 100;
    p.noise = 0.1;
    p.centers = {{0.0, 0.0}, {20.0, 0.0}};
    const auto ps = ddc::generate_shapes(ddc::ShapeKind::blobs, p, 4);
    REQUIRE(ps.size() == 200);
    CHECK(std::count(ps.labels().begin(), ps.labels().end(), 0) == 100);
    CHECK(std::count(ps.labels().begin(), ps.labels().end(), 1) == 100);
    for (std::size_t i = 0; i < ps.size(); ++i)
      CHECK(std::abs(ps.point(i)[0] - 20.0 * static_cast<double>(ps.labels()[i])) < 1.0);
    CHECK(ps == ddc::generate_shapes(ddc::ShapeKind::blobs, p, 4));

    p.spreads = {1.0};
    CHECK_THROWS_AS(ddc::generate_shapes(ddc::ShapeKind::blobs, p, 4), std::invalid_argument);
    p.spreads.clear();
    p.centers.clear();
    CHECK_THROWS_AS(ddc::generate_shapes(ddc::ShapeKind::blobs, p, 4), std::invalid_argument);
  }

  SUBCASE("t4_like carries background noise") {
    const auto p = ddc::default_shape_params(ddc::ShapeKind::t4_like);
    const auto ps = ddc::generate_shapes(ddc::ShapeKind::t4_like, p, 2);
    const auto noise = std::count(ps.labels().begin(), ps.labels().end(), ddc::kNoiseLabel);
    CHECK(noise > 0);
    for (ddc::Label k = 0; k < 4; ++k)
      CHECK(std::count(ps.labels().begin(), ps.labels().end(), k) == static_cast<long>(p.points_per_cluster));
    CHECK(ps == ddc::generate_shapes(ddc::ShapeKind::t4_like, p, 2));

    auto quiet = p;
    quiet.noise_fraction = 0.0;
    const auto qs = ddc::generate_shapes(ddc::ShapeKind::t4_like, quiet, 2);
    CHECK(std::count(qs.labels().begin(), qs.labels().end(), ddc::kNoiseLabel) == 0);
  }

  SUBCASE("flame_like has two classes") {
    const auto ps = ddc::generate_shapes(ddc::ShapeKind::flame_like,
                                         ddc::default_shape_params(ddc::ShapeKind::flame_like), 3);
    CHECK(std::count(ps.labels().begin(), ps.labels().end(), 0) > 0);
    CHECK(std::count(ps.labels().begin(), ps.labels().end(), 1) > 0);
    CHECK(std::count(ps.labels().begin(), ps.labels().end(), ddc::kNoiseLabel) == 0);
  }

  SUBCASE("invalid counts") {
    auto p = ddc::default_shape_params(ddc::ShapeKind::flame_like);
    p.points_per_cluster = 0;
    CHECK_THROWS_AS(ddc::generate_shapes(ddc::ShapeKind::flame_like, p, 0), std::invalid_argument);
    p = ddc::default_shape_params(ddc::ShapeKind::t4_like);
    p.noise_fraction = 1.5;
    CHECK_THROWS_AS(ddc::generate_shapes(ddc::ShapeKind::t4_like, p, 0), std::invalid_argument);
  }
}
