#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ddc/ddc.hpp"
#include "ddc/detail/text.hpp"

namespace ddc::cli {

namespace {

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string format;  // empty: infer from extension
  std::string algo = "ddc";
  double ratio = kDefaultRatio;
  std::optional<std::size_t> k;
  std::optional<double> eps;
  std::optional<std::size_t> min_pts;
  bool auto_dc = false;
  bool auto_eps = false;
  std::uint64_t seed = 0;
  std::size_t max_iter = 300;
  bool label_last = false;
  std::string decision_output;

  // generate
  std::string kind = "twomoon";
  std::optional<std::size_t> count;
  std::optional<double> noise;
  std::optional<double> noise_fraction;
  std::vector<std::string> centers;

  // evaluate
  std::string truth;

  // plot
  std::string result;
  std::string plot_kind = "scatter";
  bool no_border = false;
  bool no_centers = false;
  std::string title;

  // sweep
  double sweep_from = 0.05;
  double sweep_to = 0.16;
  double sweep_step = 0.01;
};

FileFormat resolve_format(const Options& opt, const std::string& path) {
  if (opt.format == "csv") return FileFormat::csv;
  if (opt.format == "binary") return FileFormat::binary;
  return format_from_extension(path);
}

PointSet load_input(const Options& opt) {
  return load_points(opt.input, resolve_format(opt, opt.input), opt.label_last ? LabelColumn::last : LabelColumn::header);
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw IoError("write failed for " + path);
}

std::string fmt(double v) { return detail::format_double(v); }

std::size_t true_class_count(const PointSet& ps) {
  std::set<Label> classes;
  for (Label l : ps.labels())
    if (l >= 0) classes.insert(l);
  return classes.size();
}

std::vector<std::array<double, 2>> parse_centers(const std::vector<std::string>& specs) {
  std::vector<std::array<double, 2>> out;
  for (const auto& spec : specs) {
    const auto fields = detail::split_fields(spec);
    if (fields.size() != 2) throw UsageError("--centers expects x,y pairs, got '" + spec + "'");
    const auto x = detail::parse_double(fields[0]);
    const auto y = detail::parse_double(fields[1]);
    if (!x || !y) throw UsageError("--centers expects numeric x,y, got '" + spec + "'");
    out.push_back({*x, *y});
  }
  return out;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  if (opt.output.empty()) throw UsageError("generate requires --output");
  PointSet ps;
  if (opt.kind == "twomoon") {
    ps = generate_twomoon(opt.count.value_or(2000), opt.noise.value_or(0.06), opt.seed);
  } else {
    const ShapeKind kind = opt.kind == "flame_like" ? ShapeKind::flame_like
                           : opt.kind == "t4_like"  ? ShapeKind::t4_like
                                                    : ShapeKind::blobs;
    ShapeParams params = default_shape_params(kind);
    if (opt.count) params.points_per_cluster = *opt.count;
    if (opt.noise) params.noise = *opt.noise;
    if (opt.noise_fraction) params.noise_fraction = *opt.noise_fraction;
    if (!opt.centers.empty()) params.centers = parse_centers(opt.centers);
    ps = generate_shapes(kind, params, opt.seed);
  }
  save_points(ps, opt.output, resolve_format(opt, opt.output));
  out << "generated kind=" << opt.kind << " n=" << ps.size() << " seed=" << opt.seed << '\n';
  return kOk;
}

struct ClusterRun {
  ResultTable table;
  ScatterLayer layer;
  std::string summary;
  std::optional<DensityProfile> profile;
  bool fallback = false;
};

ClusterRun run_algorithm(const Options& opt, const PointSet& ps) {
  ClusterRun run;
  if (opt.algo == "ddc") {
    MergedClustering result = ddc_cluster(ps, opt.ratio);
    run.table = result_table(ps, result);
    run.layer = scatter_layer(result);
    run.summary = "clusters=" + std::to_string(result.cluster_count()) +
                  " local_clusters=" + std::to_string(result.local_cluster_count()) + " d_c=" + fmt(result.cutoff.d_c);
    run.fallback = result.fallback;
    run.profile = std::move(result.profile);
  } else if (opt.algo == "denpeak") {
    std::size_t k = 0;
    if (opt.k) {
      k = *opt.k;
    } else if (opt.auto_dc && ps.has_labels()) {
      k = true_class_count(ps);
    } else {
      throw UsageError("denpeak requires --k (or --auto-dc with a labeled input to use the true class count)");
    }
    const double d_c = opt.auto_dc ? denpeak_auto_dc(ps) : cutoff_from_ratio(ps, opt.ratio).d_c;
    const BaselineResult result = denpeak(ps, d_c, k);
    run.table = result_table(ps, result);
    run.layer = scatter_layer(result);
    run.summary = "clusters=" + std::to_string(result.cluster_count) + " d_c=" + fmt(d_c) + " k=" + std::to_string(k);
    if (!opt.decision_output.empty()) run.profile = compute_profile(ps, d_c);
  } else if (opt.algo == "dbscan") {
    DbscanParams params{0.0, opt.min_pts.value_or(kDbscanMinPts)};
    if (opt.eps) {
      params.eps = *opt.eps;
    } else if (opt.auto_eps) {
      params.eps = dbscan_auto_params(ps).eps;
    } else {
      throw UsageError("dbscan requires --eps or --auto-eps");
    }
    const BaselineResult result = dbscan(ps, params.eps, params.min_pts);
    std::size_t noise = 0;
    for (auto l : result.labels) noise += l < 0 ? 1 : 0;
    run.table = result_table(ps, result);
    run.layer = scatter_layer(result);
    run.summary = "clusters=" + std::to_string(result.cluster_count) + " noise=" + std::to_string(noise) +
                  " eps=" + fmt(params.eps) + " min_pts=" + std::to_string(params.min_pts);
  } else {
    if (!opt.k) throw UsageError("kmeans requires --k");
    const BaselineResult result = kmeans(ps, *opt.k, opt.seed, opt.max_iter);
    run.table = result_table(ps, result);
    run.layer = scatter_layer(result);
    run.summary = "clusters=" + std::to_string(result.cluster_count) + " k=" + std::to_string(*opt.k) +
                  " seed=" + std::to_string(opt.seed);
  }
  return run;
}

int cmd_cluster(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.algo == "ddc" && !(opt.ratio > 0.0)) throw UsageError("--ratio must be positive");
  const PointSet ps = load_input(opt);
  const ClusterRun run = run_algorithm(opt, ps);
  if (run.fallback)
    err << "warning: no point met the local-center condition; the densest point is the only center\n";
  std::ostringstream csv;
  write_result_csv(csv, run.table);
  if (!opt.output.empty()) write_text(opt.output, csv.str(), out);
  if (!opt.decision_output.empty()) {
    if (!run.profile) throw UsageError("--decision-output is available for ddc and denpeak only");
    std::ostringstream dg;
    write_decision_csv(dg, decision_graph(*run.profile));
    write_text(opt.decision_output, dg.str(), out);
  }
  out << run.summary << '\n';
  return kOk;
}

int cmd_evaluate(const Options& opt, std::ostream& out) {
  if (opt.truth.empty()) throw UsageError("evaluate requires --truth (a labeled point file)");
  const ResultTable table = read_result_csv(opt.input);
  const PointSet truth = load_points(opt.truth, resolve_format(opt, opt.truth),
                                     opt.label_last ? LabelColumn::last : LabelColumn::header);
  if (!truth.has_labels()) throw UsageError("truth file " + opt.truth + " carries no labels");
  if (truth.size() != table.size()) throw DegenerateInputError("result and truth point counts differ");
  const EvalReport report = evaluate(table.final_label, truth.labels());
  write_text(opt.output, to_json(report) + "\n", out);
  if (!opt.output.empty()) out << "acc=" << fmt(report.acc) << " nmi=" << fmt(report.nmi) << '\n';
  return kOk;
}

int cmd_plot(const Options& opt, std::ostream& out) {
  if (opt.output.empty()) throw UsageError("plot requires --output");
  FigureSpec spec;
  spec.show_border = !opt.no_border;
  spec.show_centers = !opt.no_centers;
  spec.title = opt.title;

  std::string svg;
  if (opt.plot_kind == "decision") {
    std::ifstream probe(opt.input);
    std::string first;
    std::getline(probe, first);
    if (detail::trim(first) == "index,rho,delta") {
      svg = render_decision_graph(read_decision_csv(opt.input), spec);
    } else {
      const PointSet ps = load_input(opt);
      const double d_c = opt.auto_dc ? denpeak_auto_dc(ps) : cutoff_from_ratio(ps, opt.ratio).d_c;
      svg = render_decision_graph(compute_profile(ps, d_c), spec);
    }
  } else if (!opt.result.empty()) {
    const ResultTable table = read_result_csv(opt.result);
    std::vector<double> coords;
    ScatterLayer layer;
    layer.labels = table.final_label;
    layer.is_core = table.is_core;
    for (std::size_t i = 0; i < table.size(); ++i) {
      coords.push_back(table.x[i]);
      coords.push_back(table.y[i]);
      if (table.is_center[i]) layer.centers.push_back(i);
    }
    // Baseline results carry no core flags; do not paint every point black.
    if (std::none_of(layer.is_core.begin(), layer.is_core.end(), [](bool b) { return b; })) layer.is_core.clear();
    svg = render_scatter(PointSet(std::move(coords), 2), layer, spec);
  } else {
    if (opt.input.empty()) throw UsageError("plot scatter requires --input or --result");
    const PointSet ps = load_input(opt);
    const ClusterRun run = run_algorithm(opt, ps);
    svg = render_scatter(ps, run.layer, spec);
  }
  write_text(opt.output, svg, out);
  out << "wrote " << opt.output << '\n';
  return kOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  if (!(opt.sweep_step > 0.0) || opt.sweep_to < opt.sweep_from || !(opt.sweep_from > 0.0))
    throw UsageError("sweep range is empty: need 0 < --sweep-from <= --sweep-to and --sweep-step > 0");
  const PointSet ps = load_input(opt);
  if (!ps.has_labels()) throw UsageError("sweep requires a labeled input");
  const auto steps = static_cast<std::size_t>(std::floor((opt.sweep_to - opt.sweep_from) / opt.sweep_step + 1e-9)) + 1;
  std::ostringstream csv;
  csv << "ratio,K,acc,nmi\n";
  for (std::size_t s = 0; s < steps; ++s) {
    const double ratio = std::round((opt.sweep_from + static_cast<double>(s) * opt.sweep_step) * 1e12) / 1e12;
    const MergedClustering result = ddc_cluster(ps, ratio);
    const std::vector<std::int64_t> pred(result.final_labels.begin(), result.final_labels.end());
    const EvalReport report = evaluate(pred, ps.labels());
    csv << fmt(ratio) << ',' << result.cluster_count() << ',' << fmt(report.acc) << ',' << fmt(report.nmi) << '\n';
  }
  write_text(opt.output, csv.str(), out);
  if (!opt.output.empty()) out << "sweep rows=" << steps << '\n';
  return kOk;
}

void add_input(CLI::App* cmd, Options& opt, bool required) {
  auto* flag = cmd->add_option("--input", opt.input, "Point file (CSV or binary)");
  if (required) flag->required();
  cmd->add_option("--format", opt.format, "Point file format; default from extension")
      ->check(CLI::IsMember({"csv", "binary"}));
  cmd->add_flag("--label-last", opt.label_last, "Treat the last CSV column as labels even without a header");
}

void add_algorithm(CLI::App* cmd, Options& opt) {
  cmd->add_option("--algo", opt.algo, "Clustering algorithm")
      ->check(CLI::IsMember({"ddc", "denpeak", "dbscan", "kmeans"}));
  cmd->add_option("--ratio", opt.ratio, "d_c as a fraction of the mean pairwise distance");
  cmd->add_option("--k", opt.k, "Cluster count for denpeak/kmeans");
  cmd->add_option("--eps", opt.eps, "DBSCAN radius");
  cmd->add_option("--min-pts", opt.min_pts, "DBSCAN core threshold (default 4)");
  cmd->add_flag("--auto-dc", opt.auto_dc, "DenPeak d_c with ~1% of points per neighborhood");
  cmd->add_flag("--auto-eps", opt.auto_eps, "DBSCAN eps = median 4th-neighbor distance");
  cmd->add_option("--seed", opt.seed, "Random seed");
  cmd->add_option("--max-iter", opt.max_iter, "k-means iteration cap");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Density-based clustering of 2-D embeddings"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a synthetic labeled point set");
  generate->add_option("--kind", opt.kind)->check(CLI::IsMember({"twomoon", "flame_like", "t4_like", "blobs"}));
  generate->add_option("--n", opt.count, "Total points (twomoon) or points per cluster (shapes)");
  generate->add_option("--noise", opt.noise, "Gaussian jitter");
  generate->add_option("--noise-fraction", opt.noise_fraction, "t4_like background fraction");
  generate->add_option("--centers", opt.centers, "Blob centers as x,y");
  generate->add_option("--seed", opt.seed);
  generate->add_option("--output", opt.output)->required();
  generate->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "binary"}));

  auto* cluster = app.add_subcommand("cluster", "Cluster a point file and write the result CSV");
  add_input(cluster, opt, true);
  add_algorithm(cluster, opt);
  cluster->add_option("--output", opt.output, "Result CSV path");
  cluster->add_option("--decision-output", opt.decision_output, "Decision-graph CSV path (ddc/denpeak)");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a result CSV against ground truth");
  evaluate_cmd->add_option("--input", opt.input, "Result CSV")->required();
  evaluate_cmd->add_option("--truth", opt.truth, "Labeled point file");
  evaluate_cmd->add_option("--output", opt.output, "JSON report path (default stdout)");
  evaluate_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "binary"}));
  evaluate_cmd->add_flag("--label-last", opt.label_last);

  auto* plot = app.add_subcommand("plot", "Render an SVG scatter plot or decision graph");
  add_input(plot, opt, false);
  add_algorithm(plot, opt);
  plot->add_option("--result", opt.result, "Result CSV to draw");
  plot->add_option("--plot", opt.plot_kind)->check(CLI::IsMember({"scatter", "decision"}));
  plot->add_option("--output", opt.output)->required();
  plot->add_flag("--no-border", opt.no_border, "Do not paint border points black");
  plot->add_flag("--no-centers", opt.no_centers, "Omit center diamonds");
  plot->add_option("--title", opt.title);

  auto* sweep = app.add_subcommand("sweep", "Run ddc over a range of ratios on labeled data");
  add_input(sweep, opt, true);
  sweep->add_option("--sweep-from", opt.sweep_from);
  sweep->add_option("--sweep-to", opt.sweep_to);
  sweep->add_option("--sweep-step", opt.sweep_step);
  sweep->add_option("--output", opt.output, "CSV path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(opt, out);
    if (*cluster) return cmd_cluster(opt, out, err);
    if (*evaluate_cmd) return cmd_evaluate(opt, out);
    if (*plot) return cmd_plot(opt, out);
    if (*sweep) return cmd_sweep(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace ddc::cli
