#include "trisurf/metrics.hpp"

#include "trisurf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace trisurf {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvE = std::exp(-1.0);

void require_open_unit(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error(fmt::format("{}: r = {} is outside (0, 1)", what, r));
}

// Cubic on [0, h] with p(0) = p0, p'(0) = m0, p(h) = p1, p'(h) = m1.
Polynomial hermite(double origin, double h, double p0, double m0, double p1, double m1) {
  const double c2 = (3.0 * (p1 - p0) / h - 2.0 * m0 - m1) / h;
  const double c3 = (2.0 * (p0 - p1) / h + m0 + m1) / (h * h);
  return {origin, {p0, m0, c2, c3}};
}

// (r - origin + origin) * p(r), as a polynomial about the same origin.
Polynomial times_r(const Polynomial& p) {
  Polynomial out{p.origin, std::vector<double>(p.coeffs.size() + 1, 0.0)};
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    out.coeffs[i + 1] += p.coeffs[i];
    out.coeffs[i] += p.origin * p.coeffs[i];
  }
  return out;
}

Polynomial scaled(Polynomial p, double s) {
  for (auto& c : p.coeffs) c *= s;
  return p;
}

}  // namespace

double Polynomial::operator()(double r) const {
  const double t = r - origin;
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial out{origin, {}};
  for (std::size_t i = 1; i < coeffs.size(); ++i) out.coeffs.push_back(static_cast<double>(i) * coeffs[i]);
  if (out.coeffs.empty()) out.coeffs.push_back(0.0);
  return out;
}

Polynomial Polynomial::integral() const {
  Polynomial out{origin, {0.0}};
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs.push_back(coeffs[i] / static_cast<double>(i + 1));
  return out;
}

RadialProfile::RadialProfile(std::vector<ProfilePiece> pieces, bool defined_at_zero)
    : pieces_(std::move(pieces)), at_zero_(defined_at_zero) {
  if (pieces_.empty()) throw std::invalid_argument("profile needs at least one piece");
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i].lo != pieces_[i - 1].hi) throw std::invalid_argument("profile pieces must be contiguous");
}

Jet RadialProfile::jet(double r) const {
  if (r < lo() || r >= pieces_.back().hi || (r == 0.0 && !at_zero_))
    throw std::domain_error(fmt::format("profile evaluated at r = {} outside its domain", r));
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), r, [](double x, const ProfilePiece& p) { return x < p.hi; });
  return it->eval(r);
}

std::vector<double> RadialProfile::breakpoints() const {
  std::vector<double> out;
  for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].lo);
  return out;
}

RadialProfile RadialProfile::shifted(double c) const {
  RadialProfile out = *this;
  for (auto& piece : out.pieces_) {
    piece.eval = [f = piece.eval, c](double r) {
      Jet j = f(r);
      j.u += c;
      return j;
    };
  }
  return out;
}

double u_dstar(double r) {
  require_open_unit(r, "u_dstar");
  return std::log(-1.0 / (r * std::log(r)));
}

Jet dstar_jet(double r) {
  require_open_unit(r, "u_dstar");
  const double l = std::log(r);
  return {std::log(-1.0 / (r * l)), -(1.0 + 1.0 / l) / r, 1.0 / (r * r) + (l + 1.0) / (r * r * l * l)};
}

double dstar_d3u(double r) {
  require_open_unit(r, "u_dstar");
  const double l = std::log(r);
  const double r3 = r * r * r;
  return -2.0 / r3 + (l - 2.0 * (l + 1.0) * (l + 1.0)) / (r3 * l * l * l);
}

RadialProfile dstar_profile() { return RadialProfile({{0.0, 1.0, "closed-form", dstar_jet}}, false); }

RadialProfile disk_profile() {
  return RadialProfile({{0.0, 1.0, "closed-form",
                         [](double r) {
                           const double q = 1.0 - r * r;
                           return Jet{std::log(2.0 / q), 2.0 * r / q, 2.0 * (1.0 + r * r) / (q * q)};
                         }}},
                       true);
}

double horoball_area(double r) {
  require_open_unit(r, "horoball_area");
  return -2.0 * kPi / std::log(r);
}

double radial_curvature(const RadialProfile& p, double r) {
  const Jet j = p.jet(r);
  if (r == 0.0) {
    if (std::abs(j.du) > 1e-12) throw std::domain_error("curvature at r = 0 needs u'(0) = 0");
    return -2.0 * j.d2u * std::exp(-2.0 * j.u);
  }
  return -(j.d2u + j.du / r) * std::exp(-2.0 * j.u);
}

double circle_total_curvature(const RadialProfile& p, double r) { return 2.0 * kPi * (1.0 + r * p.du(r)); }

std::vector<double> chebyshev_grid(std::size_t n, double lo, double hi) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (1.0 - std::cos(kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n))) / 2.0;
    out[i] = lo + (hi - lo) * x;
  }
  return out;
}

CurvatureReport curvature_report(const RadialProfile& p, const std::vector<double>& grid) {
  CurvatureReport rep;
  rep.grid = grid;
  rep.kappa.reserve(grid.size());
  for (double r : grid) rep.kappa.push_back(radial_curvature(p, r));
  if (!rep.kappa.empty()) {
    auto [mn, mx] = std::minmax_element(rep.kappa.begin(), rep.kappa.end());
    rep.min = *mn;
    rep.max = *mx;
  }
  return rep;
}

RadialProfile extend_metric(double r0) {
  require_open_unit(r0, "extend_metric");
  if (!(r0 > kInvE))
    throw std::domain_error(fmt::format(
        "extend_metric: area(B_r0) = {:.6f} <= 2pi; no negatively curved extension exists for r0 <= 1/e",
        -2.0 * kPi / std::log(r0)));

  const double h = std::min(0.05, (r0 - kInvE) / 2.0);
  const Jet at = dstar_jet(r0);
  const double w1 = at.d2u, w1_slope = dstar_d3u(r0);
  // int_0^r0 w = u'_{D*}(r0) with w = c on [0, r0 - h] and a Hermite cubic on
  // the window.
  const double c = (at.du - h * w1 / 2.0 + h * h * w1_slope / 12.0) / (r0 - h / 2.0);
  if (!(c > 0.0)) throw InternalError("extend_metric: non-positive inner second derivative");

  const double a = r0 - h;
  const Polynomial w = hermite(a, h, c, 0.0, w1, w1_slope);
  Polynomial v = w.integral();
  v.coeffs[0] = c * a;
  Polynomial u = v.integral();
  u.coeffs[0] = at.u - u(r0);
  const double u_a = u.coeffs[0];

  const Polynomial inner{0.0, {u_a - c * a * a / 2.0, 0.0, c / 2.0}};
  const Polynomial inner_d = inner.derivative(), inner_dd = inner_d.derivative();
  const Polynomial du = u.derivative(), d2u = du.derivative();

  return RadialProfile(
      {{0.0, a, "polynomial", [=](double r) { return Jet{inner(r), inner_d(r), inner_dd(r)}; }},
       {a, r0, "polynomial", [=](double r) { return Jet{u(r), du(r), d2u(r)}; }},
       {r0, 1.0, "closed-form", dstar_jet}},
      true);
}

ExtensionCertificate certify_extension(const RadialProfile& p, double r0, std::size_t grid_points) {
  ExtensionCertificate cert;
  cert.r0 = r0;
  const auto bps = p.breakpoints();
  if (bps.size() == 2) {
    cert.h = bps[1] - bps[0];
    cert.inner_w = p.d2u(0.0);
  }
  auto grid = chebyshev_grid(grid_points);
  grid.insert(grid.begin(), 0.0);
  cert.curvature = curvature_report(p, grid);
  cert.negative_curvature = cert.curvature.max < 0.0;
  cert.du_at_zero = p.du(0.0);
  cert.convex = cert.increasing = cert.matches_dstar = true;
  for (double r : grid) {
    const Jet j = p.jet(r);
    if (!(j.d2u > 0.0)) cert.convex = false;
    if (r > 0.0 && !(j.du > 0.0)) cert.increasing = false;
    if (r >= r0) {
      const Jet d = dstar_jet(r);
      if (j.u != d.u || j.du != d.du || j.d2u != d.d2u) cert.matches_dstar = false;
    }
  }
  return cert;
}

bool sharpness_certificate(const RadialProfile& p, double r0) {
  require_open_unit(r0, "sharpness_certificate");
  if (std::abs(p.u(r0) - u_dstar(r0)) > 1e-8)
    throw std::invalid_argument("sharpness_certificate: profile does not meet u_D* at r0");
  return dstar_jet(r0).du > 1e-12;
}

double g_disk(double r) { return (1.0 - r * r) / 2.0; }
double g_disk_derivative(double r) { return -r; }
double g_dstar(double r) {
  const double l = -std::log(r);
  return l - l * l;
}
double g_dstar_derivative(double r) { return -(1.0 + 2.0 * std::log(r)) / r; }

namespace {

// u, u', u'' from g, g' and I = int_r^1 2 s g.
Jet jet_from_g(double r, double g, double dg, double i) {
  return {-0.5 * std::log(i), r * g / i, (g + r * dg) / i + 2.0 * r * r * g * g / (i * i)};
}

RadialProfile glued_profile(double r_eps, double h, double shift) {
  const double a = r_eps - h;
  const double i_eps = std::pow(r_eps * std::log(r_eps), 2);
  const Polynomial g = hermite(a, h, g_disk(a) + shift, g_disk_derivative(a), g_dstar(r_eps), g_dstar_derivative(r_eps));
  const Polynomial dg = g.derivative();
  const Polynomial prim = scaled(times_r(g), 2.0).integral();
  const double i_a = i_eps + prim(r_eps) - prim(a);
  // Below the window g = (1 - s^2)/2 + shift, with int 2 s g = s^2/2 - s^4/4 + shift s^2.
  const auto q = [shift](double s) { return s * s / 2.0 - s * s * s * s / 4.0 + shift * s * s; };

  return RadialProfile(
      {{0.0, a, "shifted-disk",
        [=](double r) {
          return jet_from_g(r, g_disk(r) + shift, g_disk_derivative(r), i_a + q(a) - q(r));
        }},
       {a, r_eps, "polynomial-g",
        [=](double r) { return jet_from_g(r, g(r), dg(r), i_eps + prim(r_eps) - prim(r)); }},
       {r_eps, 1.0, "closed-form", dstar_jet}},
      true);
}

}  // namespace

ControlProfile curvature_control_profile(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::domain_error("curvature_control_profile: eps must be positive");
  const double lower = -(1.0 + eps), upper = -1.0 / (1.0 + eps);

  constexpr int kScan = 10000;
  auto grid = chebyshev_grid(2000);
  grid.insert(grid.begin(), 0.0);

  double delta = eps / 10.0;
  for (int halving = 0; halving <= 40; ++halving, delta /= 2.0) {
    // Smallest scan point above which g and g' of the two metrics stay within delta.
    int first = kScan - 1;
    while (first > 1) {
      const double r = static_cast<double>(first - 1) / kScan;
      if (std::abs(g_disk(r) - g_dstar(r)) >= delta || std::abs(g_disk_derivative(r) - g_dstar_derivative(r)) >= delta)
        break;
      --first;
    }
    const double r_eps = static_cast<double>(first) / kScan;
    if (r_eps <= kInvE) continue;
    const double h = (1.0 - r_eps) / 2.0;
    const double shift = g_dstar(r_eps) - g_disk(r_eps);

    ControlProfile out;
    out.eps = eps;
    out.r_eps = r_eps;
    out.delta = delta;
    out.h = h;
    out.shift = shift;
    out.halvings = halving;
    out.profile = glued_profile(r_eps, h, shift);
    out.curvature = curvature_report(out.profile, grid);
    if (out.curvature.min >= lower && out.curvature.max <= upper) return out;
  }
  throw std::runtime_error(fmt::format("curvature_control_profile: eps = {} not met after 40 halvings of delta", eps));
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::holds:
      return "holds";
    case Comparison::fails:
      return "fails";
    case Comparison::hypothesis_violation:
      return "hypothesis_violation";
  }
  return "?";
}

ComparisonResult compare_metrics(const RadialProfile& p1, const RadialProfile& p2, const std::vector<double>& grid) {
  ComparisonResult res;
  for (double r : grid) {
    const double k1 = radial_curvature(p1, r), k2 = radial_curvature(p2, r);
    if (!(k2 < 0.0) || k1 > k2 + 1e-12) {
      res.verdict = Comparison::hypothesis_violation;
      res.at = r;
      return res;
    }
  }
  res.worst_gap = -INFINITY;
  for (double r : grid) {
    const double gap = p1.u(r) - p2.u(r);
    if (gap > res.worst_gap) {
      res.worst_gap = gap;
      res.at = r;
    }
  }
  res.verdict = res.worst_gap <= 1e-10 ? Comparison::holds : Comparison::fails;
  return res;
}

}  // namespace trisurf
