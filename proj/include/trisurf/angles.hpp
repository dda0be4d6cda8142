#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trisurf/graph.hpp"

namespace trisurf {

using Rational = boost::multiprecision::cpp_rational;

/// sum(terms[d] * angle(d)) = rhs_pi * pi. One angle variable per corner,
/// indexed by the dart that closes the corner.
struct Equation {
  std::map<DartId, Rational> terms;
  Rational rhs_pi;
};

struct LinearSystem {
  std::vector<DartId> variables;  // sorted
  std::vector<Equation> equations;

  /// Appends other's equations and merges the variable sets.
  LinearSystem& append(const LinearSystem& other);
};

enum class SolveStatus { unique, underdetermined, inconsistent };
const char* to_string(SolveStatus s);

struct AngleSolution {
  SolveStatus status = SolveStatus::inconsistent;
  // Exact values in units of pi; minimum-norm particular solution when
  // underdetermined, empty when inconsistent.
  std::map<DartId, Rational> values_pi;
  std::map<DartId, double> values;  // radians
  int rank = 0;
  int nullity = 0;
  double max_residual = 0.0;  // radians, over all equations
};

/// One equation per left-hand-turn path: the corners along it sum to 2pi.
LinearSystem cusp_equations(const RotationGraph& g);

/// c1 - ci = 0 for every orbit {c1, ..., ck}.
LinearSystem symmetry_equalities(const std::vector<std::vector<DartId>>& orbits);

/// x + y + z = pi for the three corners at each vertex.
LinearSystem flat_triangle_equations(const RotationGraph& g);

/// Exact elimination over the rationals. With `flat`, the per-triangle
/// equations are added first; this needs genus 1 and throws
/// std::domain_error otherwise.
AngleSolution solve_angles(const RotationGraph& g, const LinearSystem& sys, bool flat);

}  // namespace trisurf
