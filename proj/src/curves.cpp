#include "trisurf/curves.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "trisurf/errors.hpp"
#include "trisurf/metrics.hpp"

namespace trisurf {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvE = std::exp(-1.0);
using C = std::complex<double>;

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-12; };
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol);
  return (a + b) / 2.0;
}

}  // namespace

const char* to_string(PieceKind k) {
  switch (k) {
    case PieceKind::horocyclic:
      return "horocyclic";
    case PieceKind::vertical:
      return "vertical";
    case PieceKind::geodesic:
      return "geodesic";
  }
  return "?";
}

CurvePiece CurvePiece::horocyclic(double y, double x_from, double x_to) {
  CurvePiece p;
  p.kind = PieceKind::horocyclic;
  p.y0 = p.y1 = y;
  p.x0 = x_from;
  p.x1 = x_to;
  return p;
}

CurvePiece CurvePiece::vertical(double x, double y_from, double y_to) {
  CurvePiece p;
  p.kind = PieceKind::vertical;
  p.x0 = p.x1 = x;
  p.y0 = y_from;
  p.y1 = y_to;
  return p;
}

CurvePiece CurvePiece::geodesic_arc(double center, double radius, double phi_from, double phi_to) {
  CurvePiece p;
  p.kind = PieceKind::geodesic;
  p.center = center;
  p.radius = radius;
  p.phi0 = phi_from;
  p.phi1 = phi_to;
  const C a = p.point(0.0), b = p.point(1.0);
  p.x0 = a.real();
  p.y0 = a.imag();
  p.x1 = b.real();
  p.y1 = b.imag();
  return p;
}

C CurvePiece::point(double t) const {
  if (kind == PieceKind::geodesic) {
    const double phi = phi0 + t * (phi1 - phi0);
    return {center + radius * std::sin(phi), radius * std::cos(phi)};
  }
  return {x0 + t * (x1 - x0), y0 + t * (y1 - y0)};
}

C CurvePiece::velocity(double t) const {
  if (kind == PieceKind::geodesic) {
    const double phi = phi0 + t * (phi1 - phi0), s = phi1 - phi0;
    return {radius * std::cos(phi) * s, -radius * std::sin(phi) * s};
  }
  return {x1 - x0, y1 - y0};
}

C CurvePiece::acceleration(double t) const {
  if (kind == PieceKind::geodesic) {
    const double phi = phi0 + t * (phi1 - phi0), s = phi1 - phi0;
    return {-radius * std::sin(phi) * s * s, -radius * std::cos(phi) * s * s};
  }
  return {0.0, 0.0};
}

double CurvePiece::hyperbolic_length() const {
  switch (kind) {
    case PieceKind::horocyclic:
      return std::abs(x1 - x0) / y0;
    case PieceKind::vertical:
      return std::abs(std::log(y1 / y0));
    case PieceKind::geodesic:
      return std::abs(std::atanh(std::sin(phi1)) - std::atanh(std::sin(phi0)));
  }
  return 0.0;
}

double CurvePiece::geodesic_curvature() const { return kind == PieceKind::horocyclic ? 1.0 : 0.0; }

void CuspCurve::check_closed(double tol) const {
  if (pieces.empty()) throw std::invalid_argument("curve has no pieces");
  if (corner_angles.size() != pieces.size()) throw std::invalid_argument("need one corner angle per piece");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    C end = pieces[i].point(1.0);
    C next = pieces[(i + 1) % pieces.size()].point(0.0);
    if (i + 1 == pieces.size()) next += period;
    if (std::abs(end - next) > tol)
      throw std::invalid_argument(fmt::format("curve pieces {} and {} do not meet", i, (i + 1) % pieces.size()));
  }
  for (const auto& p : pieces)
    if (!(p.y0 > 0 && p.y1 > 0)) throw std::invalid_argument("curve leaves the upper half-plane");
}

double total_geodesic_curvature(const CuspCurve& c) {
  double total = 0.0;
  for (const auto& p : c.pieces) total += p.geodesic_curvature() * p.hyperbolic_length();
  for (double a : c.corner_angles) total += a;
  return total;
}

double integrated_geodesic_curvature(const CuspCurve& c) {
  // kappa_g ds = (y kappa_euclid + n_y) |z'| / y dt with n the left normal.
  double total = 0.0;
  for (const auto& p : c.pieces) {
    const auto integrand = [&p](double t) {
      const C v = p.velocity(t), a = p.acceleration(t);
      const double y = p.point(t).imag();
      return (v.real() * a.imag() - v.imag() * a.real()) / std::norm(v) + v.real() / y;
    };
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15, 1e-13);
  }
  for (double a : c.corner_angles) total += a;
  return total;
}

double enclosed_area(const CuspCurve& c) {
  double area = 0.0;
  for (const auto& p : c.pieces) {
    switch (p.kind) {
      case PieceKind::horocyclic:
        area += (p.x1 - p.x0) / p.y0;
        break;
      case PieceKind::vertical:
        break;
      case PieceKind::geodesic:
        area += p.phi1 - p.phi0;  // dx / y = dphi on the arc
        break;
    }
  }
  return area;
}

double level_of_radius(double r) { return -std::log(r) / (2.0 * kPi); }
double radius_of_level(double y) { return std::exp(-2.0 * kPi * y); }

CuspCurve horocycle_curve(double r) {
  if (!(r > 0 && r < 1)) throw std::domain_error("horocycle radius must lie in (0, 1)");
  CuspCurve c;
  c.pieces = {CurvePiece::horocyclic(level_of_radius(r), 0.0, 1.0)};
  c.corner_angles = {0.0};
  return c;
}

double slit_area(double r1, double r2, double theta) {
  return -2.0 * theta / std::log(r1) - 2.0 * (kPi - theta) / std::log(r2);
}

double slit_inner_radius(double r2, double gap) {
  const double target = u_dstar(r2) + gap;
  // u_D* decreases on (0, 1/e) from infinity to 1.
  if (!(target > 1.0)) throw std::domain_error("slit_inner_radius: target u must exceed the minimum 1");
  return bisect([&](double r) { return u_dstar(r) - target; }, 1e-300, kInvE);
}

double slit_theta_for_area(double r1, double r2, double area) {
  const double l1 = std::log(r1), l2 = std::log(r2);
  return (area + 2.0 * kPi / l2) / (2.0 / l2 - 2.0 / l1);
}

SlitHorocycle slit_horocycle(double r1, double r2, double theta) {
  if (!(r1 > 0.0)) throw std::domain_error("slit_horocycle: need R1 > 0");
  if (!(r1 < kInvE)) throw std::domain_error("slit_horocycle: need R1 < 1/e");
  if (!(kInvE < r2)) throw std::domain_error("slit_horocycle: need 1/e < R2");
  if (!(r2 < 1.0)) throw std::domain_error("slit_horocycle: need R2 < 1");
  if (!(theta > 0.0 && theta < kPi)) throw std::domain_error("slit_horocycle: need 0 < theta < pi");

  SlitHorocycle s{r1, r2, theta, {}, {}};
  const double y1 = level_of_radius(r1), y2 = level_of_radius(r2);
  const double half = theta / (2.0 * kPi);
  s.curve.pieces = {CurvePiece::horocyclic(y1, -half, half), CurvePiece::vertical(half, y1, y2),
                    CurvePiece::horocyclic(y2, half, 1.0 - half), CurvePiece::vertical(1.0 - half, y2, y1)};
  s.curve.corner_angles = {-kPi / 2, kPi / 2, kPi / 2, -kPi / 2};
  s.curve.check_closed();

  // u_D* is monotone on each side of 1/e, so along the slits it stays below
  // its endpoint values and the maximum sits on one of the two arcs.
  const Jet inner = dstar_jet(r1), outer = dstar_jet(r2);
  auto& cert = s.certificate;
  const bool inner_max = inner.u >= outer.u;
  const Jet at = inner_max ? inner : outer;
  cert.max_point = inner_max ? C(r1, 0.0) : C(-r2, 0.0);
  cert.u_at_max = at.u;
  cert.normal_derivative = std::exp(at.u) * at.du;
  cert.total_curvature = total_geodesic_curvature(s.curve);
  cert.enclosed_area = enclosed_area(s.curve);
  cert.obstructed = inner.u > outer.u && cert.enclosed_area > 2.0 * kPi && cert.normal_derivative < 0.0;
  return s;
}

double convex_gap(double theta) {
  const double c = std::cos(theta);
  return kPi / (kPi + std::tan(theta) - theta) - (-c * std::log(c)) / (1.0 - c);
}

ConvexCounterexample convex_counterexample() {
  constexpr int kScan = 10000;
  const double hi = kPi / 2.0;
  // The gap is positive near 0; find where it first turns negative.
  int last_positive = -1, best = -1;
  for (int i = 1; i < kScan; ++i) {
    const double t = hi * i / kScan;
    const double g = convex_gap(t);
    if (!(g > 0.0)) break;
    last_positive = i;
    if (best < 0 || g > convex_gap(hi * best / kScan)) best = i;
  }
  if (last_positive < 1 || last_positive + 1 >= kScan) throw InternalError("convex_counterexample: no sign change of the gap");
  ConvexCounterexample out;
  out.theta_root = bisect(convex_gap, hi * last_positive / kScan, hi * (last_positive + 1) / kScan);

  const double theta0 = hi * best / kScan;
  const double y = 1.0 / (2.0 * kPi + 2.0 * std::tan(theta0) - 2.0 * theta0);
  const auto margins = [y](double theta) {
    const double curvature = 1.0 / y - 2.0 * std::tan(theta) + 2.0 * theta - 2.0 * kPi;
    const double r = y / std::cos(theta);
    return std::pair{curvature, u_dstar(radius_of_level(r)) - u_dstar(radius_of_level(y))};
  };

  for (double step = theta0 / 2.0; step > 1e-12; step /= 2.0) {
    const double theta = theta0 - step;
    const auto [mc, mu] = margins(theta);
    if (mc >= 1e-6 && mu >= 1e-6) {
      out.y = y;
      out.theta = theta;
      out.x = (1.0 - 2.0 * y * std::tan(theta)) / 2.0;
      out.radius = y / std::cos(theta);
      out.curvature_margin = mc;
      out.u_margin = mu;
      const double foot = y * std::tan(theta);
      out.curve.pieces = {CurvePiece::horocyclic(y, foot, 1.0 - foot),
                          CurvePiece::geodesic_arc(1.0, out.radius, -theta, theta)};
      out.curve.corner_angles = {theta, theta};
      out.curve.check_closed();
      return out;
    }
  }
  throw InternalError("convex_counterexample: no admissible theta below the gap maximum");
}

GeodesicHorocycle geodesic_horocycle_curve() {
  GeodesicHorocycle g;
  g.geodesic_length = 3.0 * kPi;
  g.horocyclic_length = kPi;
  // Unit semicircle: arc length from the apex to angle phi is atanh(sin phi).
  g.phi_end = std::atan(std::sinh(g.geodesic_length / 2.0));
  const double s = std::sin(g.phi_end), y = std::cos(g.phi_end);
  const double foot = g.horocyclic_length * y;  // Euclidean length at height y
  g.width = 2.0 * s + 2.0 * foot;

  g.curve.period = g.width;
  g.curve.pieces = {CurvePiece::horocyclic(y, -s - foot, -s), CurvePiece::geodesic_arc(0.0, 1.0, -g.phi_end, g.phi_end),
                    CurvePiece::horocyclic(y, s, s + foot)};
  g.curve.corner_angles = {g.phi_end, g.phi_end, 0.0};
  g.curve.check_closed();
  g.total_curvature = total_geodesic_curvature(g.curve);

  const C p(-s, y), q(s, y);
  g.endpoint_distance = INFINITY;
  for (int k = -3; k <= 3; ++k) {
    const C qk = q + static_cast<double>(k) * g.width;
    g.endpoint_distance = std::min(g.endpoint_distance, std::acosh(1.0 + std::norm(p - qk) / (2.0 * p.imag() * qk.imag())));
  }
  return g;
}

}  // namespace trisurf
