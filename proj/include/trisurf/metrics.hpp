#pragma once

#include <functional>
#include <string>
#include <vector>

namespace trisurf {

/// u, u', u'' at one radius.
struct Jet {
  double u = 0, du = 0, d2u = 0;
};

/// Polynomial in (r - origin), coefficients from degree 0 up.
struct Polynomial {
  double origin = 0;
  std::vector<double> coeffs;

  double operator()(double r) const;
  Polynomial derivative() const;
  /// Antiderivative vanishing at origin.
  Polynomial integral() const;
};

struct ProfilePiece {
  double lo = 0, hi = 1;  // [lo, hi)
  std::string kind;       // "polynomial", "closed-form", ...
  std::function<Jet(double)> eval;
};

/// Conformal metric e^{2u(r)} |dz|^2 on the (punctured) unit disk, given by
/// consecutive pieces covering [lo, 1).
class RadialProfile {
 public:
  RadialProfile() = default;
  RadialProfile(std::vector<ProfilePiece> pieces, bool defined_at_zero);

  Jet jet(double r) const;
  double u(double r) const { return jet(r).u; }
  double du(double r) const { return jet(r).du; }
  double d2u(double r) const { return jet(r).d2u; }

  double lo() const { return pieces_.front().lo; }
  bool defined_at_zero() const { return at_zero_; }
  std::vector<double> breakpoints() const;  // interior piece boundaries
  const std::vector<ProfilePiece>& pieces() const { return pieces_; }

  /// Same profile with u replaced by u + c (metric scaled by e^{2c}).
  RadialProfile shifted(double c) const;

 private:
  std::vector<ProfilePiece> pieces_;
  bool at_zero_ = false;
};

/// Complete hyperbolic metric of the punctured disk: u = log(-1 / (r log r)).
double u_dstar(double r);
Jet dstar_jet(double r);
double dstar_d3u(double r);
RadialProfile dstar_profile();

/// Poincare disk: u = log(2 / (1 - r^2)).
RadialProfile disk_profile();

/// Area of {0 < |z| < r} for the punctured-disk metric: -2 pi / log r.
double horoball_area(double r);

/// -(u'' + u'/r) e^{-2u}; at r = 0 the limit -2 u''(0) e^{-2u(0)}.
double radial_curvature(const RadialProfile& p, double r);

/// Total geodesic curvature of the circle |z| = r, 2 pi (1 + r u'(r)).
double circle_total_curvature(const RadialProfile& p, double r);

/// n points in (lo, hi), Chebyshev spaced (dense near both ends).
std::vector<double> chebyshev_grid(std::size_t n, double lo = 0.0, double hi = 1.0);

struct CurvatureReport {
  std::vector<double> grid;
  std::vector<double> kappa;
  double min = 0, max = 0;
};

CurvatureReport curvature_report(const RadialProfile& p, const std::vector<double>& grid);

struct ExtensionCertificate {
  double r0 = 0, h = 0, inner_w = 0;
  bool negative_curvature = false;  // on the grid, including r = 0
  bool convex = false;              // u'' > 0 on the grid
  bool increasing = false;          // u' > 0 on the grid
  bool matches_dstar = false;       // identical closed form beyond r0
  double du_at_zero = 0;
  CurvatureReport curvature;
};

/// Negatively curved metric on the whole disk equal to the punctured-disk
/// metric for r >= r0: u'' is a constant near 0 joined to u''_{D*} over a
/// short window. Requires r0 > 1/e, i.e. horoball_area(r0) > 2 pi; throws
/// std::domain_error otherwise.
RadialProfile extend_metric(double r0);
ExtensionCertificate certify_extension(const RadialProfile& p, double r0, std::size_t grid_points = 1000);

/// Necessary condition for any extension across |z| = r0: u'_{D*}(r0) > 0.
/// Values within 1e-12 of zero count as zero.
bool sharpness_certificate(const RadialProfile& p, double r0);

/// g with e^{-2u(r)} = int_r^1 2 s g(s) ds.
double g_disk(double r);
double g_disk_derivative(double r);
double g_dstar(double r);
double g_dstar_derivative(double r);

struct ControlProfile {
  double eps = 0;
  double r_eps = 0;
  double delta = 0;
  double h = 0;
  double shift = 0;  // constant added to g_D below the window
  int halvings = 0;
  RadialProfile profile;
  CurvatureReport curvature;  // 2000-point grid
};

/// Metric with -(1 + eps) <= kappa <= -1/(1 + eps) that equals the punctured
/// disk metric for r >= r_eps and a shifted disk metric near 0. Throws
/// std::runtime_error when 40 halvings of delta do not meet the bound.
ControlProfile curvature_control_profile(double eps);

enum class Comparison { holds, fails, hypothesis_violation };
const char* to_string(Comparison c);

struct ComparisonResult {
  Comparison verdict = Comparison::fails;
  double worst_gap = 0;  // max of u1 - u2 over the grid
  double at = 0;         // radius of the first hypothesis failure, or of worst_gap
};

/// Checks kappa1 <= kappa2 < 0 on the grid, then u1 <= u2 + 1e-10.
ComparisonResult compare_metrics(const RadialProfile& p1, const RadialProfile& p2, const std::vector<double>& grid);

}  // namespace trisurf
