#include "trisurf/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trisurf {

LinearSystem& LinearSystem::append(const LinearSystem& other) {
  equations.insert(equations.end(), other.equations.begin(), other.equations.end());
  std::vector<DartId> merged;
  std::set_union(variables.begin(), variables.end(), other.variables.begin(), other.variables.end(),
                 std::back_inserter(merged));
  variables = std::move(merged);
  return *this;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::unique:
      return "unique";
    case SolveStatus::underdetermined:
      return "underdetermined";
    case SolveStatus::inconsistent:
      return "inconsistent";
  }
  return "?";
}

LinearSystem cusp_equations(const RotationGraph& g) {
  LinearSystem sys;
  for (const auto& path : g.lht_paths()) {
    Equation eq;
    for (DartId d : path.darts) eq.terms[d] += 1;
    eq.rhs_pi = 2;
    sys.equations.push_back(std::move(eq));
  }
  for (DartId d = 0; d < g.dart_count(); ++d) sys.variables.push_back(d);
  return sys;
}

LinearSystem symmetry_equalities(const std::vector<std::vector<DartId>>& orbits) {
  LinearSystem sys;
  for (const auto& orbit : orbits) {
    for (std::size_t i = 1; i < orbit.size(); ++i) {
      Equation eq;
      eq.terms[orbit[0]] = 1;
      eq.terms[orbit[i]] = -1;
      eq.rhs_pi = 0;
      sys.equations.push_back(std::move(eq));
    }
    sys.variables.insert(sys.variables.end(), orbit.begin(), orbit.end());
  }
  std::sort(sys.variables.begin(), sys.variables.end());
  sys.variables.erase(std::unique(sys.variables.begin(), sys.variables.end()), sys.variables.end());
  return sys;
}

LinearSystem flat_triangle_equations(const RotationGraph& g) {
  LinearSystem sys;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Equation eq;
    for (DartId d : g.darts_at(v)) eq.terms[d] = 1;
    eq.rhs_pi = 1;
    sys.equations.push_back(std::move(eq));
  }
  for (DartId d = 0; d < g.dart_count(); ++d) sys.variables.push_back(d);
  return sys;
}

namespace {

using Row = std::vector<Rational>;  // coefficients then rhs

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<Row>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (int k = c; k <= cols; ++k)
        if (rows[r][k] != 0) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

AngleSolution solve_angles(const RotationGraph& g, const LinearSystem& sys, bool flat) {
  LinearSystem full = sys;
  if (flat) {
    if (genus(g) != 1) throw std::domain_error("flat angle equations need genus 1, got genus " + std::to_string(genus(g)));
    full.append(flat_triangle_equations(g));
  }

  const auto& vars = full.variables;
  const int n = static_cast<int>(vars.size());
  std::map<DartId, int> column;
  for (int i = 0; i < n; ++i) column[vars[i]] = i;

  std::vector<Row> rows;
  rows.reserve(full.equations.size());
  for (const auto& eq : full.equations) {
    Row row(n + 1);
    for (const auto& [d, coeff] : eq.terms) {
      auto it = column.find(d);
      if (it == column.end()) throw std::invalid_argument("equation uses dart " + std::to_string(d) + " not in variables");
      row[it->second] += coeff;
    }
    row[n] = eq.rhs_pi;
    rows.push_back(std::move(row));
  }
  const auto pivots = rref(rows, n);

  AngleSolution sol;
  sol.rank = static_cast<int>(pivots.size());
  sol.nullity = n - sol.rank;
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    if (rows[i][n] != 0) {
      sol.status = SolveStatus::inconsistent;
      return sol;
    }
  }
  sol.status = sol.nullity == 0 ? SolveStatus::unique : SolveStatus::underdetermined;

  // Minimum-norm solution x = R^T (R R^T)^-1 c over the independent rows R.
  const int r = sol.rank;
  std::vector<Rational> x(n);
  if (sol.nullity == 0) {
    for (int i = 0; i < r; ++i) x[pivots[i]] = rows[i][n];
  } else if (r > 0) {
    std::vector<Row> gram(r, Row(r + 1));
    for (int i = 0; i < r; ++i) {
      for (int j = i; j < r; ++j) {
        Rational s = 0;
        for (int k = 0; k < n; ++k)
          if (rows[i][k] != 0 && rows[j][k] != 0) s += rows[i][k] * rows[j][k];
        gram[i][j] = s;
        gram[j][i] = s;
      }
      gram[i][r] = rows[i][n];
    }
    if (static_cast<int>(rref(gram, r).size()) != r) throw InternalError("singular Gram matrix in angle solver");
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < n; ++k)
        if (rows[i][k] != 0) x[k] += rows[i][k] * gram[i][r];
  }

  for (int k = 0; k < n; ++k) {
    sol.values_pi[vars[k]] = x[k];
    sol.values[vars[k]] = static_cast<double>(x[k]) * std::numbers::pi;
  }
  for (const auto& eq : full.equations) {
    double lhs = 0.0;
    for (const auto& [d, coeff] : eq.terms) lhs += static_cast<double>(coeff) * sol.values[d];
    sol.max_residual = std::max(sol.max_residual, std::abs(lhs - static_cast<double>(eq.rhs_pi) * std::numbers::pi));
  }
  if (flat && sol.status != SolveStatus::inconsistent && g.vertex_count() != 2 * static_cast<int>(g.lht_paths().size()))
    throw InternalError("flat solution on a graph with N_v != 2 N_lht");
  return sol;
}

}  // namespace trisurf
