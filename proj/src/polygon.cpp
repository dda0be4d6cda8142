#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "trisurf/hyperbolic.hpp"

namespace trisurf {

namespace {

const Complex kEta = std::polar(1.0, std::numbers::pi / 3);  // e^{i pi/3}

}  // namespace

bool IdealPoint::is_infinite(double tol) const { return std::abs(q) <= tol * std::abs(p); }

Mobius Mobius::axial(double t) { return {std::exp(-t / 2), 0.0, 0.0, std::exp(t / 2)}; }

Mobius Mobius::normalized() const {
  const double det_value = det();
  if (!(det_value > 0)) throw std::domain_error("Mobius map with non-positive determinant");
  const double s = 1.0 / std::sqrt(det_value);
  return {a * s, b * s, c * s, d * s};
}

Mobius Mobius::inverse() const { return {d, -b, -c, a}; }

Mobius operator*(const Mobius& m, const Mobius& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mobius rotation3() { return {0, 1, -1, 1}; }
Mobius half_turn() { return {0, -1, 1, 0}; }

Mobius rotation3_power(int k) {
  k = ((k % 3) + 3) % 3;
  Mobius m;
  for (int i = 0; i < k; ++i) m = rotation3() * m;
  return m;
}

Complex to_disk(Complex z) { return (z - kEta) / (z - std::conj(kEta)); }
Complex to_disk(IdealPoint x) { return (x.p - kEta * x.q) / (x.p - std::conj(kEta) * x.q); }
Complex from_disk(Complex w) { return (w * std::conj(kEta) - kEta) / (w - 1.0); }

double hyperbolic_distance(Complex z, Complex w) {
  return std::acosh(1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag()));
}

double distance_to_geodesic(Complex z, IdealPoint u, IdealPoint v) {
  // Send u to 0 and v to infinity; the geodesic becomes the imaginary axis.
  const Complex w = (u.q * z - u.p) / (v.q * z - v.p);
  return std::asinh(std::abs(w.real()) / std::abs(w.imag()));
}

double disk_gap(IdealPoint x, IdealPoint y) { return std::abs(to_disk(x) - to_disk(y)); }

MarkedIdealTriangle place(const Mobius& m, const std::array<double, 3>& side_shifts) {
  MarkedIdealTriangle t;
  t.placement = m;
  for (int j = 0; j < 3; ++j) {
    const Mobius rj = rotation3_power(j);
    t.vertices[j] = (m * rj)(IdealPoint::infinity());
    t.ticks[j] = (m * rj * Mobius::axial(side_shifts[j]))(Complex(0.0, 1.0));
  }
  return t;
}

MarkedIdealTriangle standard_triangle() { return place(Mobius::identity()); }

double ideal_triangle_area(const std::array<IdealPoint, 3>& vertices) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const auto inv_semicircle = [](double lo, double hi) {
    return [lo, hi](double x) { return 1.0 / std::sqrt((x - lo) * (hi - x)); };
  };

  std::vector<double> finite;
  int infinite = 0;
  for (const auto& v : vertices) {
    if (v.is_infinite(1e-15)) {
      ++infinite;
    } else {
      finite.push_back(v.value());
    }
  }
  if (infinite > 1) throw DegeneratePlacement("ideal triangle with two vertices at infinity");
  std::sort(finite.begin(), finite.end());
  // Affine maps x -> (x - a) / L are isometries; normalize to [0, 1].
  const double a = finite.front();
  const double len = finite.back() - a;
  if (!(len > 0)) throw DegeneratePlacement("ideal triangle with coincident vertices");
  if (infinite == 1) {
    // Strip between two verticals above one semicircle.
    return integrator.integrate(inv_semicircle(0.0, 1.0), 0.0, 1.0);
  }
  const double b = (finite[1] - a) / len;
  const auto outer = inv_semicircle(0.0, 1.0);
  const auto left = inv_semicircle(0.0, b);
  const auto right = inv_semicircle(b, 1.0);
  const double lhs = integrator.integrate([&](double x) { return left(x) - outer(x); }, 0.0, b);
  const double rhs = integrator.integrate([&](double x) { return right(x) - outer(x); }, b, 1.0);
  return lhs + rhs;
}

int side_of(const RotationGraph& g, DartId d) { return (g.position(d) + 1) % 3; }

namespace {

// Glues the standard triangle across side side_of(twin d) onto side
// side_of(d), reversing the side and matching shifted ticks.
Mobius gluing(const RotationGraph& g, const TickShifts& shifts, DartId d) {
  const DartId e = g.twin(d);
  return rotation3_power(side_of(g, d)) * Mobius::axial(shifts[d] + shifts[e]) * half_turn() *
         rotation3_power(-side_of(g, e));
}

std::array<double, 3> side_shifts(const RotationGraph& g, const TickShifts& shifts, VertexId v) {
  std::array<double, 3> s{};
  for (DartId d : g.darts_at(v)) s[side_of(g, d)] = shifts[d];
  return s;
}

}  // namespace

FundamentalPolygon assemble_polygon(const RotationGraph& g, const TickShifts& shifts) {
  if (!shifts.alpha.empty() && static_cast<std::int32_t>(shifts.alpha.size()) != g.dart_count())
    throw std::invalid_argument("tick shifts must have one entry per dart");
  for (double x : shifts.alpha)
    if (!std::isfinite(x)) throw std::invalid_argument("tick shift is not finite");

  const VertexId n = g.vertex_count();
  FundamentalPolygon poly;
  std::vector<Mobius> frame(n);
  std::vector<bool> placed(n, false);
  poly.tree_dart.assign(g.dart_count(), false);
  poly.tree_parent.assign(n, -1);

  std::queue<VertexId> queue;
  placed[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    std::array<DartId, 3> out = g.darts_at(v);
    std::sort(out.begin(), out.end());
    for (DartId d : out) {
      const VertexId w = g.vertex_of(g.twin(d));
      if (placed[w]) continue;
      placed[w] = true;
      frame[w] = (frame[v] * gluing(g, shifts, d)).normalized();
      poly.tree_dart[d] = poly.tree_dart[g.twin(d)] = true;
      poly.tree_parent[w] = v;
      queue.push(w);
    }
  }

  poly.triangles.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    auto t = place(frame[v], side_shifts(g, shifts, v));
    for (int i = 0; i < 3; ++i)
      if (disk_gap(t.vertices[i], t.vertices[(i + 1) % 3]) < 1e-8)
        throw DegeneratePlacement("triangle " + std::to_string(v) + " has coincident vertices");
    poly.triangles.push_back(t);
  }

  poly.pairing.resize(g.dart_count());
  poly.gluing.resize(g.dart_count());
  for (DartId d = 0; d < g.dart_count(); ++d) {
    poly.gluing[d] = gluing(g, shifts, d).normalized();
    if (poly.tree_dart[d]) continue;  // exactly the identity
    const VertexId v = g.vertex_of(d);
    const VertexId w = g.vertex_of(g.twin(d));
    poly.pairing[d] = (frame[v] * poly.gluing[d] * frame[w].inverse()).normalized();
  }
  poly.cycle_transforms = vertex_cycle_transforms(poly, g);
  return poly;
}

std::vector<Mobius> vertex_cycle_transforms(const FundamentalPolygon& p, const RotationGraph& g) {
  std::vector<Mobius> out;
  out.reserve(g.lht_paths().size());
  for (const auto& path : g.lht_paths()) {
    Mobius m;
    for (DartId d : path.darts) m = m * p.gluing[d];
    const Mobius& frame = p.triangles[g.vertex_of(path.darts.front())].placement;
    out.push_back(frame * m * frame.inverse());
  }
  return out;
}

std::vector<double> check_shift_condition(const RotationGraph& g, const TickShifts& shifts) {
  std::vector<double> sums;
  sums.reserve(g.lht_paths().size());
  for (const auto& path : g.lht_paths()) {
    double s = 0.0;
    for (DartId d : path.darts) s += shifts[d] + shifts[g.rotation_inverse(d)];
    sums.push_back(s);
  }
  return sums;
}

std::vector<double> cusp_sizes(const RotationGraph& g) {
  std::vector<double> sizes;
  for (const auto& path : g.lht_paths()) sizes.push_back(static_cast<double>(path.length()));
  return sizes;
}

bool large_cusps(const RotationGraph& g, double threshold) {
  const auto sizes = cusp_sizes(g);
  return std::all_of(sizes.begin(), sizes.end(), [&](double s) { return s > threshold; });
}

}  // namespace trisurf
