// surface: command-line front end for the trisurf library.
//
// Exit codes: 0 ok, 1 domain error or invalid graph, 2 I/O or parse error,
// 3 internal error.

#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "trisurf/generators.hpp"
#include "trisurf/io.hpp"
#include "trisurf/report.hpp"
#include "trisurf/svg.hpp"

using namespace trisurf;

namespace {

enum Exit { kOk = 0, kDomain = 1, kInput = 2, kInternal = 3 };

RotationGraph load_graph(const std::string& path) { return RotationGraph(parse_graph_json(read_text(path))); }

void emit_json(const Json& j, const std::string& path) { write_text(path.empty() ? "-" : path, to_canonical_json(j)); }

std::set<VertexId> parse_flips(const std::vector<int>& single, const std::string& list) {
  std::set<VertexId> out(single.begin(), single.end());
  std::size_t pos = 0;
  while (pos < list.size()) {
    const std::size_t comma = list.find(',', pos);
    const std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw std::invalid_argument("--flips expects comma-separated vertex ids, got \"" + item + "\"");
      out.insert(v);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belyi surfaces from 3-regular graphs with orientation, and cusp metric tools"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_in, analyze_json, analyze_render;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline on a graph JSON file ('-' for stdin)");
  analyze_cmd->add_option("graph", analyze_in, "Graph JSON")->required();
  analyze_cmd->add_option("--json,-o", analyze_json, "Write the report here instead of stdout");
  analyze_cmd->add_option("--render", analyze_render, "Also write the fundamental polygon as SVG");

  // gen
  std::string gen_kind, gen_out;
  std::vector<int> gen_flip;
  std::string gen_flips;
  int gen_k = 0, gen_max_k = 13;
  auto* gen_cmd = app.add_subcommand("gen", "Generate theta, tetrahedron, cube or gamma-k graphs");
  gen_cmd->add_option("kind", gen_kind, "theta | tetrahedron | cube | gamma-k")->required();
  gen_cmd->add_option("k", gen_k, "Congruence level for gamma-k");
  gen_cmd->add_option("--flip", gen_flip, "Flip the rotation at this vertex (repeatable)");
  gen_cmd->add_option("--flips", gen_flips, "Comma-separated vertices to flip");
  gen_cmd->add_option("--max-k", gen_max_k, "Size guard for gamma-k");
  gen_cmd->add_option("-o,--json", gen_out, "Output file (default stdout)");

  // render
  std::string render_in, render_out;
  auto* render_cmd = app.add_subcommand("render", "Draw the fundamental polygon of a graph as SVG");
  render_cmd->add_option("graph", render_in, "Graph JSON")->required();
  render_cmd->add_option("-o,--svg", render_out, "Output SVG")->required();

  // metric
  auto* metric_cmd = app.add_subcommand("metric", "Radial metrics on the punctured disk");
  metric_cmd->require_subcommand(1);
  double r0 = 0.5, eps = 0.1;
  std::string metric_report, metric_plot;
  auto* extend_cmd = metric_cmd->add_subcommand("extend", "Negatively curved extension across |z| = r0");
  extend_cmd->add_option("--r0", r0, "Horoball radius");
  auto* control_cmd = metric_cmd->add_subcommand("control", "Curvature-controlled profile for eps");
  control_cmd->add_option("--eps", eps, "Curvature tolerance");
  auto* compare_cmd = metric_cmd->add_subcommand("compare", "Check the (1+eps) sandwich against the disk metric");
  compare_cmd->add_option("--eps", eps, "Curvature tolerance");
  for (auto* cmd : {extend_cmd, control_cmd, compare_cmd}) {
    cmd->add_option("--report,--json,-o", metric_report, "JSON report (default stdout)");
    cmd->add_option("--plot,--svg", metric_plot, "SVG plot of u and curvature");
  }

  // curves
  auto* curves_cmd = app.add_subcommand("curves", "Curves around a cusp with no negatively curved filling");
  curves_cmd->require_subcommand(1);
  double slit_r2 = 0.8, slit_gap = 0.1, slit_excess = 0.5;
  std::optional<double> slit_r1, slit_theta;
  std::string curves_json, curves_svg;
  auto* slit_cmd = curves_cmd->add_subcommand("slit", "Horocycle with a slit");
  slit_cmd->add_option("--R2", slit_r2, "Outer radius, in (1/e, 1)");
  slit_cmd->add_option("--R1", slit_r1, "Inner radius (default: u(R1) = u(R2) + gap)");
  slit_cmd->add_option("--gap", slit_gap, "u(R1) - u(R2) when R1 is derived");
  slit_cmd->add_option("--theta", slit_theta, "Half-angle of the inner arc (default: area = 2pi + excess)");
  slit_cmd->add_option("--excess", slit_excess, "Area above 2pi when theta is derived");
  auto* convex_cmd = curves_cmd->add_subcommand("convex", "Convex horocycle plus geodesic arc");
  auto* noextend_cmd = curves_cmd->add_subcommand("noextend", "Geodesic segment closed by horocyclic segments");
  for (auto* cmd : {slit_cmd, convex_cmd, noextend_cmd}) {
    cmd->add_option("--json,-o", curves_json, "JSON certificate (default stdout)");
    cmd->add_option("--svg", curves_svg, "SVG with half-plane and disk views");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (analyze_cmd->parsed()) {
      const GraphData data = parse_graph_json(read_text(analyze_in));
      const ValidationReport rep = validate(data);
      if (!rep.ok()) {
        std::cerr << "surface: invalid graph: " << rep.summary() << "\n";
        emit_json({{"validation", validation_to_json(rep)}}, analyze_json);
        return kDomain;
      }
      const RotationGraph g(data);
      emit_json(analyze(g), analyze_json);
      if (!analyze_render.empty()) write_text(analyze_render, render_polygon_svg(g, assemble_polygon(g, TickShifts::zero(g))));
    } else if (gen_cmd->parsed()) {
      if (gen_kind == "gamma-k") {
        if (gen_cmd->count("k") == 0) throw std::invalid_argument("gen gamma-k needs a level k");
        emit_json(graph_to_json(platonic_graph(gen_k, gen_max_k)), gen_out);
      } else {
        if (gen_cmd->count("k")) throw std::invalid_argument("a level k only applies to gamma-k");
        FlipPattern p{parse_base_graph(gen_kind), parse_flips(gen_flip, gen_flips)};
        emit_json(graph_to_json(named_graph(p)), gen_out);
      }
    } else if (render_cmd->parsed()) {
      const RotationGraph g = load_graph(render_in);
      write_text(render_out, render_polygon_svg(g, assemble_polygon(g, TickShifts::zero(g))));
    } else if (extend_cmd->parsed()) {
      const RadialProfile p = extend_metric(r0);
      const auto cert = certify_extension(p, r0);
      Json j = extension_to_json(cert, p);
      j["sharpness_condition"] = sharpness_certificate(p, r0);
      emit_json(j, metric_report);
      if (!metric_plot.empty()) write_text(metric_plot, render_profile_svg("extension, r0 = " + std::to_string(r0), p));
    } else if (control_cmd->parsed()) {
      const ControlProfile c = curvature_control_profile(eps);
      emit_json(control_to_json(c), metric_report);
      if (!metric_plot.empty()) write_text(metric_plot, render_profile_svg("curvature control, eps = " + std::to_string(eps), c.profile));
    } else if (compare_cmd->parsed()) {
      const ControlProfile c = curvature_control_profile(eps);
      const auto grid = chebyshev_grid(2000);
      const double s = 0.5 * std::log(1.0 + eps);
      const auto upper = compare_metrics(c.profile, disk_profile().shifted(s), grid);
      const auto lower = compare_metrics(disk_profile().shifted(-s), c.profile, grid);
      emit_json({{"eps", eps},
                 {"profile", control_to_json(c)},
                 {"upper", comparison_to_json(upper)},
                 {"lower", comparison_to_json(lower)},
                 {"sandwich", upper.verdict == Comparison::holds && lower.verdict == Comparison::holds}},
                metric_report);
      if (!metric_plot.empty()) {
        PlotSeries a{"u_eps - u_D", {}, {}};
        for (double r : grid) {
          a.x.push_back(r);
          a.y.push_back(c.profile.u(r) - disk_profile().u(r));
        }
        PlotSeries hi{"+log(1+eps)/2", {0.0, 1.0}, {s, s}}, lo{"-log(1+eps)/2", {0.0, 1.0}, {-s, -s}};
        write_text(metric_plot, render_plot_svg("sandwich, eps = " + std::to_string(eps), {a, hi, lo}, -2 * s, 2 * s));
      }
    } else if (slit_cmd->parsed()) {
      const double r1 = slit_r1 ? *slit_r1 : slit_inner_radius(slit_r2, slit_gap);
      const double theta = slit_theta ? *slit_theta : slit_theta_for_area(r1, slit_r2, 2 * std::numbers::pi + slit_excess);
      const auto s = slit_horocycle(r1, slit_r2, theta);
      emit_json(slit_to_json(s), curves_json);
      if (!curves_svg.empty()) write_text(curves_svg, render_curve_svg("horocycle with a slit", s.curve));
    } else if (convex_cmd->parsed()) {
      const auto c = convex_counterexample();
      emit_json(convex_to_json(c), curves_json);
      if (!curves_svg.empty()) write_text(curves_svg, render_curve_svg("convex curve", c.curve));
    } else if (noextend_cmd->parsed()) {
      const auto g = geodesic_horocycle_curve();
      emit_json(noextend_to_json(g), curves_json);
      if (!curves_svg.empty()) write_text(curves_svg, render_curve_svg("geodesic and horocyclic segments", g.curve));
    }
  } catch (const ParseError& e) {
    std::cerr << "surface: parse error: " << e.what() << "\n";
    return kInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "surface: I/O error: " << e.what() << "\n";
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "surface: invalid graph: " << e.report().summary() << "\n";
    return kDomain;
  } catch (const InternalError& e) {
    std::cerr << "surface: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::domain_error& e) {
    std::cerr << "surface: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "surface: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "surface: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
