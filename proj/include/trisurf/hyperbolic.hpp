#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "trisurf/graph.hpp"

namespace trisurf {

using Complex = std::complex<double>;

/// Boundary point of the upper half-plane in projective form p/q; q = 0 is
/// infinity.
struct IdealPoint {
  double p = 1.0;
  double q = 0.0;

  static IdealPoint infinity() { return {1.0, 0.0}; }
  static IdealPoint real(double x) { return {x, 1.0}; }
  bool is_infinite(double tol = 1e-300) const;
  double value() const { return p / q; }
};

/// z -> (a z + b) / (c z + d), real entries, det 1 after normalized().
struct Mobius {
  double a = 1, b = 0, c = 0, d = 1;

  static Mobius identity() { return {}; }
  /// Translation along the imaginary axis: i -> i e^{-t}.
  static Mobius axial(double t);

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Mobius normalized() const;
  Mobius inverse() const;  // adjugate, det preserved

  Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }
  IdealPoint operator()(IdealPoint x) const { return {a * x.p + b * x.q, c * x.p + d * x.q}; }

  friend Mobius operator*(const Mobius& m, const Mobius& n);
};

/// Order-3 rotation z -> 1/(1-z): infinity -> 0 -> 1 -> infinity.
Mobius rotation3();
/// z -> -1/z.
Mobius half_turn();
/// rotation3()^k for any integer k.
Mobius rotation3_power(int k);

/// Cayley map to the disk sending infinity, 0, 1 to 1, omega, omega^2.
Complex to_disk(Complex z);
Complex to_disk(IdealPoint x);
Complex from_disk(Complex w);

double hyperbolic_distance(Complex z, Complex w);
/// Distance from z to the geodesic with the given ideal endpoints.
double distance_to_geodesic(Complex z, IdealPoint u, IdealPoint v);
/// Chordal distance of two boundary points after mapping into the disk.
double disk_gap(IdealPoint x, IdealPoint y);

/// Vertices 0, 1, 2 of the standard triangle are infinity, 0, 1. Side j runs
/// from vertex j to vertex j+1 and carries tick j.
struct MarkedIdealTriangle {
  std::array<IdealPoint, 3> vertices;
  std::array<Complex, 3> ticks;
  Mobius placement;
};

MarkedIdealTriangle standard_triangle();
MarkedIdealTriangle place(const Mobius& m, const std::array<double, 3>& side_shifts = {0, 0, 0});

/// Hyperbolic area of the ideal triangle with these vertices, by quadrature.
double ideal_triangle_area(const std::array<IdealPoint, 3>& vertices);

/// Shift alpha(v, e) per flag, stored by dart. Positive alpha moves a tick
/// counterclockwise along its triangle's boundary.
struct TickShifts {
  std::vector<double> alpha;

  static TickShifts zero(const RotationGraph& g) { return {std::vector<double>(g.dart_count(), 0.0)}; }
  double operator[](DartId d) const { return alpha.empty() ? 0.0 : alpha[d]; }
};

/// Side of the triangle at vertex_of(d) that dart d crosses.
int side_of(const RotationGraph& g, DartId d);

class DegeneratePlacement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FundamentalPolygon {
  std::vector<MarkedIdealTriangle> triangles;  // by vertex id
  std::vector<bool> tree_dart;                 // by dart id, both darts of a tree edge
  std::vector<VertexId> tree_parent;           // -1 at the root
  /// pairing[d] carries the side crossed by twin(d) onto the side crossed by
  /// d, tick to tick. Identity for tree darts.
  std::vector<Mobius> pairing;
  /// gluing[d] in the frame of the standard triangle: pairing[d] =
  /// P_v gluing[d] P_w^-1 with P the placements of the two triangles.
  std::vector<Mobius> gluing;
  std::vector<Mobius> cycle_transforms;        // aligned with lht_paths()
};

/// Lays out one triangle per vertex along a BFS tree from vertex 0 (darts in id
/// order), starting from the standard triangle. Throws DegeneratePlacement if
/// two vertices of a placed triangle coincide within 1e-8 in the disk.
FundamentalPolygon assemble_polygon(const RotationGraph& g, const TickShifts& shifts);

/// Product of the pairings along each left-hand-turn path; the result fixes
/// the placed corner of the path's first dart. The placements telescope, so
/// this is evaluated as P (product of gluings) P^-1.
std::vector<Mobius> vertex_cycle_transforms(const FundamentalPolygon& p, const RotationGraph& g);

/// Per path, sum over its corners of the shifts of the two sides meeting
/// there. Every cycle transform is parabolic exactly when all sums vanish;
/// in general |trace| = 2 cosh(sum / 2).
std::vector<double> check_shift_condition(const RotationGraph& g, const TickShifts& shifts);

/// Cusp size per path: its number of unit horocyclic segments.
std::vector<double> cusp_sizes(const RotationGraph& g);
bool large_cusps(const RotationGraph& g, double threshold);

}  // namespace trisurf
