#include "ddc/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ddc {

std::vector<std::string> FigureSpec::default_palette() {
  return {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
          "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#ffbb78"};
}

ScatterLayer scatter_layer(const MergedClustering& result) {
  ScatterLayer layer;
  layer.labels.assign(result.final_labels.begin(), result.final_labels.end());
  layer.is_core = result.is_core;
  layer.centers = result.final_centers;
  return layer;
}

ScatterLayer scatter_layer(const BaselineResult& result) {
  ScatterLayer layer;
  layer.labels = result.labels;
  layer.is_core = result.is_core;
  layer.centers = result.centers;
  return layer;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps data coordinates into the plot area with a 5% margin on each side.
struct Axes {
  double x_lo, x_hi, y_lo, y_hi;
  double left = 50.0, top = 30.0, right, bottom;

  Axes(const std::vector<double>& xs, const std::vector<double>& ys, const FigureSpec& spec)
      : right(spec.width - 20.0), bottom(spec.height - 40.0) {
    auto bounds = [](const std::vector<double>& v, double& lo, double& hi) {
      if (v.empty()) {
        lo = 0.0;
        hi = 1.0;
        return;
      }
      const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
      lo = *mn;
      hi = *mx;
      double pad = 0.05 * (hi - lo);
      if (pad <= 0.0) pad = 0.5;
      lo -= pad;
      hi += pad;
    };
    bounds(xs, x_lo, x_hi);
    bounds(ys, y_lo, y_hi);
  }
  double px(double x) const { return left + (x - x_lo) / (x_hi - x_lo) * (right - left); }
  double py(double y) const { return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top); }
};

void open_svg(std::string& out, const FigureSpec& spec, const Axes& axes, const std::string& x_label,
              const std::string& y_label) {
  const std::string w = std::to_string(spec.width);
  const std::string h = std::to_string(spec.height);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
  out += "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out += "<line x1=\"" + fmt(axes.left) + "\" y1=\"" + fmt(axes.bottom) + "\" x2=\"" + fmt(axes.right) + "\" y2=\"" +
         fmt(axes.bottom) + "\"/>\n";
  out += "<line x1=\"" + fmt(axes.left) + "\" y1=\"" + fmt(axes.top) + "\" x2=\"" + fmt(axes.left) + "\" y2=\"" +
         fmt(axes.bottom) + "\"/>\n";
  out += "</g>\n";
  out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  out += "<text x=\"" + fmt((axes.left + axes.right) / 2) + "\" y=\"" + fmt(spec.height - 10.0) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  out += "<text x=\"14\" y=\"" + fmt((axes.top + axes.bottom) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
         fmt((axes.top + axes.bottom) / 2) + ")\">" + escape(y_label) + "</text>\n";
  out += "<text x=\"" + fmt(axes.left) + "\" y=\"" + fmt(axes.bottom + 14.0) + "\">" + fmt(axes.x_lo) + "</text>\n";
  out += "<text x=\"" + fmt(axes.right) + "\" y=\"" + fmt(axes.bottom + 14.0) + "\" text-anchor=\"end\">" +
         fmt(axes.x_hi) + "</text>\n";
  out += "<text x=\"" + fmt(axes.left - 4.0) + "\" y=\"" + fmt(axes.bottom) + "\" text-anchor=\"end\">" +
         fmt(axes.y_lo) + "</text>\n";
  out += "<text x=\"" + fmt(axes.left - 4.0) + "\" y=\"" + fmt(axes.top + 10.0) + "\" text-anchor=\"end\">" +
         fmt(axes.y_hi) + "</text>\n";
  if (!spec.title.empty())
    out += "<text x=\"" + fmt(spec.width / 2.0) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(spec.title) + "</text>\n";
  out += "</g>\n";
}

void circle(std::string& out, double cx, double cy, double r, const std::string& color) {
  out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) + "\" fill=\"" + color + "\"/>\n";
}

void require_palette(const FigureSpec& spec) {
  if (spec.palette.empty()) throw std::invalid_argument("figure palette must not be empty");
}

}  // namespace

std::string render_scatter(const PointSet& ps, const ScatterLayer& layer, const FigureSpec& spec) {
  require_palette(spec);
  const std::size_t n = ps.size();
  if (layer.labels.size() != n) throw std::invalid_argument("label count does not match point count");
  if (!layer.is_core.empty() && layer.is_core.size() != n)
    throw std::invalid_argument("core flag count does not match point count");
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = ps.point(i);
    xs[i] = p[0];
    ys[i] = p.size() > 1 ? p[1] : 0.0;
  }
  const Axes axes(xs, ys, spec);
  std::string out;
  open_svg(out, spec, axes, "x", "y");

  out += "<g id=\"points\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::string color;
    if (layer.labels[i] < 0) {
      color = "#b0b0b0";
    } else if (spec.show_border && !layer.is_core.empty() && !layer.is_core[i]) {
      color = "black";
    } else {
      color = spec.palette[static_cast<std::size_t>(layer.labels[i]) % spec.palette.size()];
    }
    circle(out, axes.px(xs[i]), axes.py(ys[i]), spec.point_radius, color);
  }
  out += "</g>\n";

  if (spec.show_centers && !layer.centers.empty()) {
    out += "<g id=\"centers\" fill=\"black\">\n";
    const double s = spec.center_size;
    for (std::size_t c : layer.centers) {
      if (c >= n) throw std::invalid_argument("center index out of range");
      const double cx = axes.px(xs[c]);
      const double cy = axes.py(ys[c]);
      out += "<path class=\"center\" d=\"M " + fmt(cx) + " " + fmt(cy - s) + " L " + fmt(cx + s) + " " + fmt(cy) +
             " L " + fmt(cx) + " " + fmt(cy + s) + " L " + fmt(cx - s) + " " + fmt(cy) + " Z\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_scatter(const PointSet& ps, const MergedClustering& result, const FigureSpec& spec) {
  return render_scatter(ps, scatter_layer(result), spec);
}

std::string render_scatter(const PointSet& ps, const BaselineResult& result, const FigureSpec& spec) {
  return render_scatter(ps, scatter_layer(result), spec);
}

std::string render_decision_graph(const std::vector<DecisionRow>& rows, const FigureSpec& spec) {
  require_palette(spec);
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    xs.push_back(row.rho);
    ys.push_back(row.delta);
  }
  const Axes axes(xs, ys, spec);
  std::string out;
  open_svg(out, spec, axes, "rho", "delta");
  out += "<g id=\"points\">\n";
  for (std::size_t i = 0; i < rows.size(); ++i) circle(out, axes.px(xs[i]), axes.py(ys[i]), spec.point_radius, spec.palette[0]);
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_decision_graph(const DensityProfile& profile, const FigureSpec& spec) {
  return render_decision_graph(decision_graph(profile), spec);
}

}  // namespace ddc
