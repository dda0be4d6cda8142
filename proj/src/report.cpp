#include "trisurf/report.hpp"

#include <cmath>
#include <numbers>

namespace trisurf {

namespace {

constexpr double kPi = std::numbers::pi;

std::string key(DartId d) { return std::to_string(d); }

}  // namespace

Json symmetry_to_json(const RotationGraph& g, const SymmetryGroup& group) {
  Json gens = Json::array();
  for (const auto& m : generators(group))
    gens.push_back({{"dart_image", m.dart_image}, {"sign", m.sign == Orientation::preserving ? "preserving" : "reversing"}});
  const auto orbits = corner_orbits(g, group);
  return {{"order", group.order},
          {"preserving_order", group.preserving_order},
          {"generators", gens},
          {"corner_orbits", orbits},
          {"orbit_count", orbits.size()}};
}

Json system_to_json(const LinearSystem& sys) {
  Json eqs = Json::array();
  for (const auto& eq : sys.equations) {
    Json terms = Json::object();
    for (const auto& [d, c] : eq.terms) terms[key(d)] = c.str();
    eqs.push_back({{"terms", terms}, {"rhs_pi", eq.rhs_pi.str()}});
  }
  return eqs;
}

Json solution_to_json(const AngleSolution& sol) {
  Json values = Json::object(), exact = Json::object();
  for (const auto& [d, v] : sol.values) values[key(d)] = v;
  for (const auto& [d, v] : sol.values_pi) exact[key(d)] = v.str();
  return {{"status", to_string(sol.status)},
          {"rank", sol.rank},
          {"nullity", sol.nullity},
          {"values", values},
          {"values_pi", exact},
          {"max_residual", sol.max_residual}};
}

Json mobius_to_json(const Mobius& m) {
  const Mobius n = m.normalized();
  return Json::array({n.a, n.b, n.c, n.d});
}

Json polygon_to_json(const RotationGraph& g, const FundamentalPolygon& p) {
  Json triangles = Json::array();
  for (const auto& t : p.triangles) {
    Json verts = Json::array(), ticks = Json::array();
    for (const auto& v : t.vertices) {
      if (v.is_infinite(0.0)) {
        verts.push_back("inf");
      } else {
        verts.push_back(v.value());
      }
    }
    for (const auto& z : t.ticks) ticks.push_back({z.real(), z.imag()});
    triangles.push_back({{"vertices", verts}, {"ticks", ticks}, {"placement", mobius_to_json(t.placement)}});
  }
  Json tree = Json::array(), pairings = Json::object();
  for (DartId d = 0; d < g.dart_count(); ++d) {
    if (p.tree_dart[d]) {
      tree.push_back(d);
    } else {
      pairings[key(d)] = mobius_to_json(p.pairing[d]);
    }
  }
  Json traces = Json::array();
  double worst = 0.0;
  for (const auto& m : p.cycle_transforms) {
    const double t = m.normalized().trace();
    traces.push_back(t);
    worst = std::max(worst, std::abs(std::abs(t) - 2.0));
  }
  return {{"triangles", triangles},
          {"tree_darts", tree},
          {"side_pairings", pairings},
          {"cycle_traces", traces},
          {"max_parabolicity_residual", worst}};
}

Json analyze(const RotationGraph& g) {
  Json out;
  out["graph"] = {{"vertex_count", g.vertex_count()}, {"edge_count", g.edge_count()}, {"dart_count", g.dart_count()}};

  Json paths = Json::array();
  for (const auto& p : g.lht_paths()) paths.push_back(p.darts);
  out["cusps"] = {{"count", g.lht_paths().size()}, {"lengths", path_lengths(g)}, {"paths", paths}};
  out["euler_characteristic"] = euler_characteristic(g);
  const int gen = genus(g);
  out["genus"] = gen;

  const auto group = symmetry_group(g);
  out["symmetry"] = symmetry_to_json(g, group);

  LinearSystem sys = cusp_equations(g);
  sys.append(symmetry_equalities(corner_orbits(g, group)));
  const bool flat = gen == 1;
  Json angles = solution_to_json(solve_angles(g, sys, flat));
  angles["flat"] = flat;
  angles["equations"] = system_to_json(flat ? LinearSystem(sys).append(flat_triangle_equations(g)) : sys);
  out["angles"] = angles;

  const auto poly = assemble_polygon(g, TickShifts::zero(g));
  Json traces = Json::array();
  double worst = 0.0;
  for (const auto& m : poly.cycle_transforms) {
    traces.push_back(m.trace());
    worst = std::max(worst, std::abs(std::abs(m.trace()) - 2.0));
  }
  out["parabolicity"] = {{"cycle_traces", traces}, {"max_residual", worst}};
  out["large_cusps"] = {{"threshold", 2.0 * kPi}, {"sizes", cusp_sizes(g)}, {"verdict", large_cusps(g, 2.0 * kPi)}};
  return out;
}

Json curvature_to_json(const CurvatureReport& rep, bool include_samples) {
  Json j = {{"points", rep.grid.size()}, {"min", rep.min}, {"max", rep.max}};
  if (include_samples) {
    j["grid"] = rep.grid;
    j["kappa"] = rep.kappa;
  }
  return j;
}

Json extension_to_json(const ExtensionCertificate& cert, const RadialProfile& p) {
  Json pieces = Json::array();
  for (const auto& piece : p.pieces()) pieces.push_back({{"lo", piece.lo}, {"hi", piece.hi}, {"kind", piece.kind}});
  return {{"r0", cert.r0},
          {"horoball_area", horoball_area(cert.r0)},
          {"window", cert.h},
          {"inner_second_derivative", cert.inner_w},
          {"breakpoints", p.breakpoints()},
          {"pieces", pieces},
          {"negative_curvature", cert.negative_curvature},
          {"convex", cert.convex},
          {"increasing", cert.increasing},
          {"matches_dstar_beyond_r0", cert.matches_dstar},
          {"du_at_zero", cert.du_at_zero},
          {"curvature", curvature_to_json(cert.curvature)},
          {"grid_certified", true}};
}

Json control_to_json(const ControlProfile& c) {
  return {{"eps", c.eps},
          {"r_eps", c.r_eps},
          {"delta", c.delta},
          {"smoothing_width", c.h},
          {"shift", c.shift},
          {"halvings", c.halvings},
          {"breakpoints", c.profile.breakpoints()},
          {"curvature", curvature_to_json(c.curvature)},
          {"bound", {-(1.0 + c.eps), -1.0 / (1.0 + c.eps)}},
          {"smoothing_scheme", "cubic Hermite on [r_eps - h, r_eps], delta halved until the grid bound holds"}};
}

Json comparison_to_json(const ComparisonResult& r) {
  return {{"verdict", to_string(r.verdict)}, {"worst_gap", r.worst_gap}, {"at", r.at}};
}

Json curve_to_json(const CuspCurve& c) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces) {
    Json j = {{"kind", to_string(p.kind)},
              {"start", {p.point(0).real(), p.point(0).imag()}},
              {"end", {p.point(1).real(), p.point(1).imag()}},
              {"hyperbolic_length", p.hyperbolic_length()},
              {"geodesic_curvature", p.geodesic_curvature()}};
    if (p.kind == PieceKind::geodesic)
      j["circle"] = {{"center", p.center}, {"radius", p.radius}, {"phi", {p.phi0, p.phi1}}};
    pieces.push_back(j);
  }
  return {{"period", c.period},
          {"pieces", pieces},
          {"corner_angles", c.corner_angles},
          {"total_geodesic_curvature", total_geodesic_curvature(c)},
          {"integrated_geodesic_curvature", integrated_geodesic_curvature(c)},
          {"enclosed_area", enclosed_area(c)}};
}

Json slit_to_json(const SlitHorocycle& s) {
  const auto& c = s.certificate;
  return {{"R1", s.r1},
          {"R2", s.r2},
          {"theta", s.theta},
          {"curve", curve_to_json(s.curve)},
          {"certificate",
           {{"max_point", {c.max_point.real(), c.max_point.imag()}},
            {"u_at_max", c.u_at_max},
            {"normal_derivative", c.normal_derivative},
            {"total_curvature", c.total_curvature},
            {"enclosed_area", c.enclosed_area},
            {"obstructed", c.obstructed}}}};
}

Json convex_to_json(const ConvexCounterexample& c) {
  return {{"y", c.y},
          {"theta", c.theta},
          {"x", c.x},
          {"radius", c.radius},
          {"theta_root", c.theta_root},
          {"curvature_margin", c.curvature_margin},
          {"u_margin", c.u_margin},
          {"certified", c.curvature_margin >= 1e-6 && c.u_margin >= 1e-6},
          {"curve", curve_to_json(c.curve)}};
}

Json noextend_to_json(const GeodesicHorocycle& g) {
  return {{"phi_end", g.phi_end},
          {"width", g.width},
          {"geodesic_length", g.geodesic_length},
          {"horocyclic_length", g.horocyclic_length},
          {"total_curvature", g.total_curvature},
          {"exceeds_2pi", g.total_curvature > 2.0 * kPi},
          {"endpoint_distance", g.endpoint_distance},
          {"shortcut", g.endpoint_distance < g.geodesic_length},
          {"curve", curve_to_json(g.curve)}};
}

}  // namespace trisurf
