#include "trisurf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace trisurf {

namespace {

constexpr double kPi = std::numbers::pi;

std::string header(double width, double height, const std::string& view_box) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{}\">\n"
      "<rect x=\"-10000\" y=\"-10000\" width=\"20000\" height=\"20000\" fill=\"white\"/>\n",
      width, height, view_box);
}

std::string polyline(const std::vector<Complex>& pts, const std::string& style) {
  std::string out = "<polyline fill=\"none\" " + style + " points=\"";
  for (const auto& z : pts) out += fmt::format("{:.5f},{:.5f} ", z.real(), z.imag());
  out += "\"/>\n";
  return out;
}

// Disk geodesic between two boundary (or interior) points, sampled. The
// curve is the image of the half-plane geodesic through the Cayley map.
std::vector<Complex> disk_geodesic(IdealPoint a, IdealPoint b, int samples = 64) {
  const Complex wa = to_disk(a), wb = to_disk(b);
  std::vector<Complex> pts;
  const Complex sum = wa + wb;
  if (std::abs(sum) < 1e-9 || std::abs(std::imag(wa * std::conj(wb))) < 1e-12) {
    pts = {wa, wb};
  } else {
    const Complex c = 2.0 * sum / std::norm(sum);
    double ta = std::arg(wa - c), tb = std::arg(wb - c);
    double span = tb - ta;
    while (span > kPi) span -= 2 * kPi;
    while (span < -kPi) span += 2 * kPi;
    const double rho = std::abs(wa - c);
    for (int i = 0; i <= samples; ++i) pts.push_back(c + std::polar(rho, ta + span * i / samples));
  }
  for (auto& z : pts) z = std::conj(z);  // SVG y axis points down
  return pts;
}

}  // namespace

std::string render_polygon_svg(const RotationGraph& g, const FundamentalPolygon& p) {
  std::string out = header(800, 800, "-1.1 -1.1 2.2 2.2");
  out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.004\"/>\n";
  for (std::size_t v = 0; v < p.triangles.size(); ++v) {
    const auto& t = p.triangles[v];
    for (int j = 0; j < 3; ++j)
      out += polyline(disk_geodesic(t.vertices[j], t.vertices[(j + 1) % 3]),
                      "stroke=\"#1f4e9e\" stroke-width=\"0.003\"");
    Complex centroid = 0;
    for (const auto& tick : t.ticks) {
      const Complex w = std::conj(to_disk(tick));
      centroid += w / 3.0;
      out += fmt::format("<circle cx=\"{:.5f}\" cy=\"{:.5f}\" r=\"0.006\" fill=\"#c0392b\"/>\n", w.real(), w.imag());
    }
    out += fmt::format("<text x=\"{:.5f}\" y=\"{:.5f}\" font-size=\"0.035\" text-anchor=\"middle\">{}</text>\n",
                       centroid.real(), centroid.imag(), v);
  }
  // Paired sides: join the two ticks of each non-tree edge once.
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const DartId e = g.twin(d);
    if (p.tree_dart[d] || e < d) continue;
    const Complex a = std::conj(to_disk(p.triangles[g.vertex_of(d)].ticks[side_of(g, d)]));
    const Complex b = std::conj(to_disk(p.triangles[g.vertex_of(e)].ticks[side_of(g, e)]));
    out += fmt::format(
        "<line x1=\"{:.5f}\" y1=\"{:.5f}\" x2=\"{:.5f}\" y2=\"{:.5f}\" stroke=\"#888\" stroke-width=\"0.002\" "
        "stroke-dasharray=\"0.01 0.01\"/>\n",
        a.real(), a.imag(), b.real(), b.imag());
  }
  out += "</svg>\n";
  return out;
}

std::string render_plot_svg(const std::string& title, const std::vector<PlotSeries>& series, double y_min,
                            double y_max) {
  const double w = 640, h = 400, margin = 50;
  double x_min = INFINITY, x_max = -INFINITY;
  for (const auto& s : series) {
    for (double x : s.x) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
    }
  }
  if (!(x_max > x_min)) x_max = x_min + 1.0;
  const auto sx = [&](double x) { return margin + (x - x_min) / (x_max - x_min) * (w - 2 * margin); };
  const auto sy = [&](double y) { return h - margin - (y - y_min) / (y_max - y_min) * (h - 2 * margin); };

  std::string out = header(w, h, fmt::format("0 0 {} {}", w, h));
  out += fmt::format("<text x=\"{}\" y=\"25\" font-size=\"16\" text-anchor=\"middle\">{}</text>\n", w / 2, title);
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", margin,
                     margin, w - 2 * margin, h - 2 * margin);
  out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\">{:.3g}</text>\n", 5, sy(y_max) + 4, y_max);
  out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\">{:.3g}</text>\n", 5, sy(y_min), y_min);
  out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\">{:.3g}</text>\n", margin, h - margin + 15, x_min);
  out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{:.3g}</text>\n", w - margin,
                     h - margin + 15, x_max);
  if (y_min < 0 && y_max > 0)
    out += fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"#ccc\"/>\n", margin, sy(0),
                       w - margin, sy(0));

  static const char* colors[] = {"#1f4e9e", "#c0392b", "#27ae60", "#8e44ad"};
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    std::vector<Complex> pts;
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (s.y[k] < y_min || s.y[k] > y_max || !std::isfinite(s.y[k])) continue;
      pts.emplace_back(sx(s.x[k]), sy(s.y[k]));
    }
    const char* color = colors[i % 4];
    out += polyline(pts, fmt::format("stroke=\"{}\" stroke-width=\"1.5\"", color));
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"{}\">{}</text>\n", w - margin - 120,
                       margin + 18 * (i + 1), color, s.label);
  }
  out += "</svg>\n";
  return out;
}

std::string render_profile_svg(const std::string& title, const RadialProfile& p) {
  PlotSeries u{"u(r)", {}, {}}, k{"curvature", {}, {}};
  for (int i = 1; i < 400; ++i) {
    const double r = i / 400.0;
    if (r < p.lo() || (r == 0.0 && !p.defined_at_zero())) continue;
    u.x.push_back(r);
    u.y.push_back(p.u(r));
    k.x.push_back(r);
    k.y.push_back(radial_curvature(p, r));
  }
  return render_plot_svg(title, {u, k}, -3.0, 5.0);
}

std::string render_curve_svg(const std::string& title, const CuspCurve& c) {
  // Left panel: strip [-P/2, 3P/2] x [0, top]; right panel: the disk.
  double top = 0;
  std::vector<std::vector<Complex>> pieces;
  for (const auto& piece : c.pieces) {
    std::vector<Complex> pts;
    for (int i = 0; i <= 100; ++i) pts.push_back(piece.point(i / 100.0));
    for (const auto& z : pts) top = std::max(top, z.imag());
    pieces.push_back(std::move(pts));
  }
  top *= 1.3;
  const double P = c.period;
  const double panel = 360, margin = 20;
  const auto strip = [&](Complex z) {
    return Complex(margin + (z.real() + P / 2) / (2 * P) * panel, margin + panel - z.imag() / top * panel);
  };
  const auto disk = [&](Complex z) {
    const Complex w = std::exp(Complex(0, 2 * kPi) * z / P);
    return Complex(2 * margin + panel + (w.real() + 1) / 2 * panel + margin, margin + (1 - w.imag()) / 2 * panel);
  };

  const double width = 2 * panel + 4 * margin;
  std::string out = header(width, panel + 3 * margin, fmt::format("0 0 {} {}", width, panel + 3 * margin));
  out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n", width / 2,
                     panel + 2.5 * margin, title);
  out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n", margin, margin + panel,
                     margin + panel, margin + panel);
  const Complex dc = disk(Complex(0, 1e9));
  out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{}\" fill=\"none\" stroke=\"black\"/>\n", dc.real(),
                     dc.imag(), panel / 2);
  out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"2\" fill=\"black\"/>\n", dc.real(), dc.imag());
  for (const auto& pts : pieces) {
    for (int shift = -1; shift <= 1; ++shift) {
      std::vector<Complex> s;
      for (const auto& z : pts) {
        const Complex t = z + static_cast<double>(shift) * P;
        if (t.real() >= -P / 2 && t.real() <= 3 * P / 2) s.push_back(strip(t));
      }
      if (s.size() > 1) out += polyline(s, "stroke=\"#1f4e9e\" stroke-width=\"1.5\"");
    }
    std::vector<Complex> d;
    for (const auto& z : pts) d.push_back(disk(z));
    out += polyline(d, "stroke=\"#c0392b\" stroke-width=\"1.5\"");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace trisurf
