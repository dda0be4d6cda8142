#pragma once

#include <complex>
#include <vector>

namespace trisurf {

// Curves live in the strip model H / (z -> z + period); the cusp is at
// y = infinity. With period 1, z maps to the punctured disk by
// w = exp(2 pi i z), so the level y is the circle |w| = exp(-2 pi y).
// Curves are traversed with increasing x; the cusp region V lies to the left.

enum class PieceKind { horocyclic, vertical, geodesic };
const char* to_string(PieceKind k);

struct CurvePiece {
  PieceKind kind = PieceKind::horocyclic;
  // horocyclic: height y0 from x0 to x1.  vertical: x0 from y0 to y1.
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  // geodesic: circle about (center, 0), angle phi measured from the top,
  // point = (center + radius sin phi, radius cos phi), phi0 -> phi1.
  double center = 0, radius = 0, phi0 = 0, phi1 = 0;

  static CurvePiece horocyclic(double y, double x_from, double x_to);
  static CurvePiece vertical(double x, double y_from, double y_to);
  static CurvePiece geodesic_arc(double center, double radius, double phi_from, double phi_to);

  // Parametrization over t in [0, 1] and its first two derivatives.
  std::complex<double> point(double t) const;
  std::complex<double> velocity(double t) const;
  std::complex<double> acceleration(double t) const;

  double hyperbolic_length() const;
  /// Constant geodesic curvature toward V: 1 on horocycles, 0 otherwise.
  double geodesic_curvature() const;
};

struct CuspCurve {
  double period = 1.0;
  std::vector<CurvePiece> pieces;
  /// corner_angles[i]: turning angle from the end of piece i to the start of
  /// piece i+1 (cyclically); positive turns toward V.
  std::vector<double> corner_angles;

  /// Throws std::invalid_argument unless the pieces chain into a closed curve
  /// (the last piece ending one period to the right of the first start).
  void check_closed(double tol = 1e-10) const;
};

/// Sum of (curvature x length) over pieces plus the corner angles; by
/// Gauss-Bonnet this is the hyperbolic area of V.
double total_geodesic_curvature(const CuspCurve& c);

/// Same total, integrating y kappa_euclid + n_y along each piece numerically.
double integrated_geodesic_curvature(const CuspCurve& c);

/// Area of V from the line integral of dx / y.
double enclosed_area(const CuspCurve& c);

/// Horocycle |w| = r.
CuspCurve horocycle_curve(double r);

/// Level y of the circle |w| = r, and back.
double level_of_radius(double r);
double radius_of_level(double y);

struct ObstructionCertificate {
  std::complex<double> max_point;  // punctured-disk coordinate
  double u_at_max = 0;
  double normal_derivative = 0;    // d lambda / d n, n pointing away from the cusp
  double total_curvature = 0;
  double enclosed_area = 0;
  bool obstructed = false;         // u(R1) > u(R2), area > 2 pi, derivative < 0
};

struct SlitHorocycle {
  double r1 = 0, r2 = 0, theta = 0;
  CuspCurve curve;
  ObstructionCertificate certificate;
};

/// Arc |w| = R1 over angles (-theta, theta), arc |w| = R2 over the rest,
/// joined by two radial slits. Needs 0 < R1 < 1/e < R2 < 1 and
/// 0 < theta < pi; throws std::domain_error naming the failed inequality.
SlitHorocycle slit_horocycle(double r1, double r2, double theta);

double slit_area(double r1, double r2, double theta);
/// R1 in (0, 1/e) with u_D*(R1) = u_D*(R2) + gap (bisection).
double slit_inner_radius(double r2, double gap);
/// theta with slit_area(r1, r2, theta) = area.
double slit_theta_for_area(double r1, double r2, double area);

/// pi / (pi + tan t - t) - (-cos t log cos t) / (1 - cos t).
double convex_gap(double theta);

struct ConvexCounterexample {
  double y = 0, theta = 0, x = 0, radius = 0;
  double theta_root = 0;        // upper end of {convex_gap > 0}
  double curvature_margin = 0;  // total curvature - 2 pi
  double u_margin = 0;          // u_D*(e^{-2 pi R}) - u_D*(e^{-2 pi y})
  CuspCurve curve;
};

/// Horocycle at height y closed up by a geodesic arc of radius R = y / cos
/// theta; parameters found so both margins are at least 1e-6.
ConvexCounterexample convex_counterexample();

struct GeodesicHorocycle {
  double phi_end = 0;            // endpoint angle of the geodesic segment
  double width = 0;              // translation C of the quotient
  double geodesic_length = 0;    // 3 pi
  double horocyclic_length = 0;  // pi on each side
  double total_curvature = 0;
  double endpoint_distance = 0;  // in H / (z -> z + C)
  CuspCurve curve;
};

GeodesicHorocycle geodesic_horocycle_curve();

}  // namespace trisurf
