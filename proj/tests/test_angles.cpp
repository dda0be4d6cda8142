#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "support.hpp"
#include "trisurf/angles.hpp"
#include "trisurf/symmetry.hpp"

using namespace trisurf;
namespace tt = trisurf::testing;

namespace {

LinearSystem full_system(const RotationGraph& g) {
  LinearSystem sys = cusp_equations(g);
  sys.append(symmetry_equalities(corner_orbits(g, symmetry_group(g))));
  return sys;
}

std::map<Rational, int> value_histogram(const AngleSolution& sol) {
  std::map<Rational, int> h;
  for (const auto& [d, v] : sol.values_pi) ++h[v];
  return h;
}

}  // namespace

TEST(CuspEquations, OnePerPath) {
  const auto g = tt::theta(true);
  const auto sys = cusp_equations(g);
  ASSERT_EQ(sys.equations.size(), 1u);
  EXPECT_EQ(sys.equations[0].terms.size(), 6u);
  EXPECT_EQ(sys.equations[0].rhs_pi, 2);

  const auto t1 = cusp_equations(tt::tetrahedron({0}));
  std::vector<std::size_t> sizes;
  for (const auto& eq : t1.equations) sizes.push_back(eq.terms.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 9}));

  const auto t0 = cusp_equations(tt::tetrahedron());
  ASSERT_EQ(t0.equations.size(), 4u);
  for (const auto& eq : t0.equations) EXPECT_EQ(eq.terms.size(), 3u);
}

TEST(SymmetryEqualities, CountMatchesOrbits) {
  const std::vector<std::vector<DartId>> orbits{{0, 3, 5}, {1}, {2, 4}};
  const auto sys = symmetry_equalities(orbits);
  EXPECT_EQ(sys.equations.size(), 3u);
  for (const auto& eq : sys.equations) {
    EXPECT_EQ(eq.rhs_pi, 0);
    EXPECT_EQ(eq.terms.size(), 2u);
  }
}

TEST(SolveAngles, EquilateralTorus) {
  const auto g = tt::theta(true);
  const auto sol = solve_angles(g, full_system(g), false);
  ASSERT_EQ(sol.status, SolveStatus::unique);
  for (const auto& [d, v] : sol.values_pi) EXPECT_EQ(v, Rational(1, 3));
  EXPECT_LT(sol.max_residual, 1e-12);
}

TEST(SolveAngles, TetrahedronOneFlipFlat) {
  const auto g = tt::tetrahedron({0});
  const auto sol = solve_angles(g, full_system(g), true);
  ASSERT_EQ(sol.status, SolveStatus::unique);
  const auto h = value_histogram(sol);
  EXPECT_EQ(h.at(Rational(2, 3)), 3);
  EXPECT_EQ(h.at(Rational(1, 6)), 6);
  EXPECT_EQ(h.at(Rational(1, 3)), 3);
  // The three pi/3 corners form one equilateral triangle.
  int equilateral = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool all = true;
    for (DartId d : g.darts_at(v)) all = all && sol.values_pi.at(d) == Rational(1, 3);
    equilateral += all;
  }
  EXPECT_EQ(equilateral, 1);
  // The 3-term cusp carries the 2pi/3 corners.
  for (DartId d : g.lht_paths()[0].darts) EXPECT_EQ(sol.values_pi.at(d), Rational(2, 3));
}

TEST(SolveAngles, SquareTorus) {
  const auto g = tt::tetrahedron({0, 1});
  const auto sol = solve_angles(g, full_system(g), true);
  ASSERT_EQ(sol.status, SolveStatus::unique);
  const auto h = value_histogram(sol);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.at(Rational(1, 2)), 4);
  EXPECT_EQ(h.at(Rational(1, 4)), 8);
  for (DartId d : g.lht_paths()[0].darts) EXPECT_EQ(sol.values_pi.at(d), Rational(1, 2));
}

TEST(SolveAngles, FlatRejectedOffGenusOne) {
  const auto g = tt::cube({0, 7});
  EXPECT_THROW(solve_angles(g, full_system(g), true), std::domain_error);
}

TEST(SolveAngles, UnderdeterminedReportsNullity) {
  const auto g = tt::cube({0, 7});
  const auto sol = solve_angles(g, cusp_equations(g), false);
  EXPECT_EQ(sol.status, SolveStatus::underdetermined);
  EXPECT_EQ(sol.rank, 2);
  EXPECT_EQ(sol.nullity, g.dart_count() - 2);
  // Minimum-norm: each cusp of 12 corners spreads 2pi evenly.
  for (const auto& [d, v] : sol.values_pi) EXPECT_EQ(v, Rational(1, 6));
  EXPECT_LT(sol.max_residual, 1e-12);
}

TEST(SolveAngles, Inconsistent) {
  const auto g = tt::theta(false);
  LinearSystem sys = cusp_equations(g);
  Equation e;
  e.terms[0] = 1;
  e.rhs_pi = 5;
  Equation f;
  f.terms[0] = 1;
  f.rhs_pi = 1;
  sys.equations.push_back(e);
  sys.equations.push_back(f);
  EXPECT_EQ(solve_angles(g, sys, false).status, SolveStatus::inconsistent);
}

TEST(SolveAngles, InvariantUnderRelabeling) {
  const auto g = tt::tetrahedron({0, 1});
  std::vector<DartId> perm(g.dart_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto h = tt::relabel(g, perm);
  const auto a = solve_angles(g, full_system(g), true);
  const auto b = solve_angles(h, full_system(h), true);
  for (DartId d = 0; d < g.dart_count(); ++d) EXPECT_EQ(a.values_pi.at(d), b.values_pi.at(perm[d]));
}

TEST(SolveAngles, FlatSumsAgree) {
  // Sum of all cusp equations equals the sum of all triangle equations only
  // when N_v = 2 N_lht.
  for (const auto& gold : tt::golden_graphs()) {
    if (gold.genus != 1) continue;
    const auto& g = gold.graph;
    EXPECT_EQ(g.vertex_count(), 2 * static_cast<int>(g.lht_paths().size()));
    EXPECT_NE(solve_angles(g, full_system(g), true).status, SolveStatus::inconsistent);
  }
}
