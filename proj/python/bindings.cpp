#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ddc/ddc.hpp"

namespace py = pybind11;

namespace {

using ddc::PointSet;

PointSet point_set_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> coords,
                              std::optional<std::vector<ddc::Label>> labels) {
  if (coords.ndim() != 2) throw std::invalid_argument("coordinates must be a 2-D array of shape (n, d)");
  const auto n = static_cast<std::size_t>(coords.shape(0));
  const auto d = static_cast<std::size_t>(coords.shape(1));
  std::vector<double> flat(coords.data(), coords.data() + n * d);
  return PointSet(std::move(flat), d, std::move(labels));
}

py::array_t<double> coords_array(const PointSet& ps) {
  py::array_t<double> out({ps.size(), ps.dim()});
  std::copy(ps.coords().begin(), ps.coords().end(), out.mutable_data());
  return out;
}

template <typename T>
py::array_t<T> to_array(const std::vector<T>& v) {
  py::array_t<T> out(v.size());
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<std::int64_t> index_array(const std::vector<std::size_t>& v) {
  py::array_t<std::int64_t> out(v.size());
  auto* dst = out.mutable_data();
  for (std::size_t i = 0; i < v.size(); ++i)
    dst[i] = v[i] == ddc::kNoIndex ? -1 : static_cast<std::int64_t>(v[i]);
  return out;
}

py::array_t<bool> bool_array(const std::vector<bool>& v) {
  py::array_t<bool> out(v.size());
  auto* dst = out.mutable_data();
  for (std::size_t i = 0; i < v.size(); ++i) dst[i] = v[i];
  return out;
}

ddc::FileFormat parse_format(const std::string& format, const std::filesystem::path& path) {
  if (format == "csv") return ddc::FileFormat::csv;
  if (format == "binary") return ddc::FileFormat::binary;
  if (format.empty()) return ddc::format_from_extension(path);
  throw std::invalid_argument("format must be 'csv' or 'binary'");
}

ddc::ShapeKind parse_kind(const std::string& kind) {
  if (kind == "flame_like") return ddc::ShapeKind::flame_like;
  if (kind == "t4_like") return ddc::ShapeKind::t4_like;
  if (kind == "blobs") return ddc::ShapeKind::blobs;
  throw std::invalid_argument("kind must be flame_like, t4_like or blobs");
}

py::dict report_dict(const ddc::EvalReport& r) {
  py::dict d;
  d["acc"] = r.acc;
  d["nmi"] = r.nmi;
  d["k_pred"] = r.k_pred;
  d["k_true"] = r.k_true;
  d["n_scored"] = r.n_scored;
  d["contingency"] = r.table.counts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ddc, m) {
  m.doc() = "Density-peak local clustering with core-point merging, baselines and metrics.";

  py::register_exception<ddc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ddc::DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<ddc::IoError>(m, "IoError", PyExc_OSError);

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&point_set_from_array), py::arg("coords"), py::arg("labels") = std::nullopt)
      .def_property_readonly("coords", &coords_array)
      .def_property_readonly("labels",
                             [](const PointSet& ps) -> py::object {
                               if (!ps.has_labels()) return py::none();
                               return to_array(ps.labels());
                             })
      .def_property_readonly("n", &PointSet::size)
      .def_property_readonly("d", &PointSet::dim)
      .def("__len__", &PointSet::size);
  py::implicitly_convertible<py::array, PointSet>();

  m.def(
      "load_points",
      [](const std::filesystem::path& path, const std::string& format, bool label_last) {
        return ddc::load_points(path, parse_format(format, path),
                                label_last ? ddc::LabelColumn::last : ddc::LabelColumn::header);
      },
      py::arg("path"), py::arg("format") = "", py::arg("label_last") = false);
  m.def(
      "save_points",
      [](const PointSet& ps, const std::filesystem::path& path, const std::string& format) {
        ddc::save_points(ps, path, parse_format(format, path));
      },
      py::arg("points"), py::arg("path"), py::arg("format") = "");

  m.def("mean_pairwise_distance", &ddc::mean_pairwise_distance, py::arg("points"));
  py::class_<ddc::CutoffParams>(m, "CutoffParams")
      .def_readonly("ratio", &ddc::CutoffParams::ratio)
      .def_readonly("d_bar", &ddc::CutoffParams::d_bar)
      .def_readonly("d_c", &ddc::CutoffParams::d_c);
  m.def("cutoff_from_ratio", &ddc::cutoff_from_ratio, py::arg("points"), py::arg("ratio") = ddc::kDefaultRatio);

  m.def("generate_twomoon", &ddc::generate_twomoon, py::arg("n") = 2000, py::arg("noise") = 0.06,
        py::arg("seed") = 0);
  m.def(
      "generate_shapes",
      [](const std::string& kind, std::optional<std::size_t> points_per_cluster, std::optional<double> noise,
         std::optional<double> noise_fraction, std::optional<std::vector<std::array<double, 2>>> centers,
         std::vector<double> spreads, std::uint64_t seed) {
        const auto k = parse_kind(kind);
        auto params = ddc::default_shape_params(k);
        if (points_per_cluster) params.points_per_cluster = *points_per_cluster;
        if (noise) params.noise = *noise;
        if (noise_fraction) params.noise_fraction = *noise_fraction;
        if (centers) params.centers = *centers;
        params.spreads = std::move(spreads);
        return ddc::generate_shapes(k, params, seed);
      },
      py::arg("kind"), py::arg("points_per_cluster") = std::nullopt, py::arg("noise") = std::nullopt,
      py::arg("noise_fraction") = std::nullopt, py::arg("centers") = std::nullopt,
      py::arg("spreads") = std::vector<double>{}, py::arg("seed") = 0);

  py::class_<ddc::DensityProfile>(m, "DensityProfile")
      .def_property_readonly("rho", [](const ddc::DensityProfile& p) { return to_array(p.rho); })
      .def_property_readonly("delta", [](const ddc::DensityProfile& p) { return to_array(p.delta); })
      .def_property_readonly("nhd", [](const ddc::DensityProfile& p) { return index_array(p.nhd); })
      .def_property_readonly("order", [](const ddc::DensityProfile& p) { return index_array(p.order); })
      .def_readonly("d_c", &ddc::DensityProfile::d_c);
  m.def(
      "compute_rho", [](const PointSet& ps, double d_c) { return to_array(ddc::compute_rho(ps, d_c)); },
      py::arg("points"), py::arg("d_c"));
  m.def("compute_profile", &ddc::compute_profile, py::arg("points"), py::arg("d_c"));
  m.def(
      "select_local_centers",
      [](const ddc::DensityProfile& p) { return index_array(ddc::select_local_centers(p).indices); },
      py::arg("profile"));

  py::class_<ddc::MergedClustering>(m, "MergedClustering")
      .def_property_readonly("labels", [](const ddc::MergedClustering& r) { return index_array(r.final_labels); })
      .def_property_readonly("local_labels",
                             [](const ddc::MergedClustering& r) { return index_array(r.local.labels); })
      .def_property_readonly("local_centers",
                             [](const ddc::MergedClustering& r) { return index_array(r.local.centers); })
      .def_property_readonly("local_to_final",
                             [](const ddc::MergedClustering& r) { return index_array(r.local_to_final); })
      .def_property_readonly("centers", [](const ddc::MergedClustering& r) { return index_array(r.final_centers); })
      .def_property_readonly("is_core", [](const ddc::MergedClustering& r) { return bool_array(r.is_core); })
      .def_property_readonly("n_clusters", &ddc::MergedClustering::cluster_count)
      .def_property_readonly("n_local_clusters", &ddc::MergedClustering::local_cluster_count)
      .def_property_readonly("d_c", [](const ddc::MergedClustering& r) { return r.cutoff.d_c; })
      .def_readonly("profile", &ddc::MergedClustering::profile)
      .def_readonly("fallback", &ddc::MergedClustering::fallback);
  m.def("ddc_cluster", &ddc::ddc_cluster, py::arg("points"), py::arg("ratio") = ddc::kDefaultRatio);

  py::class_<ddc::BaselineResult>(m, "BaselineResult")
      .def_property_readonly("labels", [](const ddc::BaselineResult& r) { return to_array(r.labels); })
      .def_readonly("n_clusters", &ddc::BaselineResult::cluster_count)
      .def_property_readonly("centers", [](const ddc::BaselineResult& r) { return index_array(r.centers); });
  m.def("dbscan", &ddc::dbscan, py::arg("points"), py::arg("eps"), py::arg("min_pts") = ddc::kDbscanMinPts);
  m.def(
      "dbscan_auto_params",
      [](const PointSet& ps) {
        const auto p = ddc::dbscan_auto_params(ps);
        return py::make_tuple(p.eps, p.min_pts);
      },
      py::arg("points"));
  m.def("denpeak", &ddc::denpeak, py::arg("points"), py::arg("d_c"), py::arg("k"));
  m.def("denpeak_auto_dc", &ddc::denpeak_auto_dc, py::arg("points"));
  m.def("kmeans", &ddc::kmeans, py::arg("points"), py::arg("k"), py::arg("seed") = 0, py::arg("max_iter") = 300);

  m.def(
      "accuracy",
      [](const std::vector<std::int64_t>& pred, const std::vector<std::int64_t>& truth) {
        return ddc::accuracy(pred, truth);
      },
      py::arg("pred"), py::arg("truth"));
  m.def(
      "nmi",
      [](const std::vector<std::int64_t>& pred, const std::vector<std::int64_t>& truth) {
        return ddc::nmi(pred, truth);
      },
      py::arg("pred"), py::arg("truth"));
  m.def(
      "evaluate",
      [](const std::vector<std::int64_t>& pred, const std::vector<std::int64_t>& truth) {
        return report_dict(ddc::evaluate(pred, truth));
      },
      py::arg("pred"), py::arg("truth"));

  m.def(
      "render_scatter",
      [](const PointSet& ps, const ddc::MergedClustering& r, bool show_border, bool show_centers) {
        ddc::FigureSpec spec;
        spec.show_border = show_border;
        spec.show_centers = show_centers;
        return ddc::render_scatter(ps, r, spec);
      },
      py::arg("points"), py::arg("result"), py::arg("show_border") = true, py::arg("show_centers") = true);
  m.def(
      "render_decision_graph", [](const ddc::DensityProfile& p) { return ddc::render_decision_graph(p); },
      py::arg("profile"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
