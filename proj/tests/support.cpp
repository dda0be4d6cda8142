#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>

namespace trisurf::testing {

RotationGraph theta(bool flipped) { return named_graph({BaseGraph::theta, flipped ? std::set<VertexId>{1} : std::set<VertexId>{}}); }
RotationGraph tetrahedron(std::set<VertexId> flips) { return named_graph({BaseGraph::tetrahedron, std::move(flips)}); }
RotationGraph cube(std::set<VertexId> flips) { return named_graph({BaseGraph::cube, std::move(flips)}); }

std::vector<Golden> golden_graphs() {
  using L = std::vector<std::size_t>;
  std::vector<Golden> out{
      {"theta", theta(false), L{2, 2, 2}, 0},
      {"theta-flipped", theta(true), L{6}, 1},
      {"tetrahedron", tetrahedron(), L{3, 3, 3, 3}, 0},
      {"tetrahedron-one-flip", tetrahedron({0}), L{3, 9}, 1},
      {"tetrahedron-two-flips", tetrahedron({0, 1}), L{4, 8}, 1},
      {"cube", cube(), L{4, 4, 4, 4, 4, 4}, 0},
      {"cube-one-flip", cube({0}), L{4, 4, 4, 12}, 1},
      {"cube-opposite-flips", cube({0, 7}), L{12, 12}, 2},
  };
  out.push_back({"gamma-2", platonic_graph(2), L(3, 2), 0});
  out.push_back({"gamma-3", platonic_graph(3), L(4, 3), 0});
  out.push_back({"gamma-4", platonic_graph(4), L(6, 4), 0});
  out.push_back({"gamma-5", platonic_graph(5), L(12, 5), 0});
  out.push_back({"gamma-7", platonic_graph(7), L(24, 7), 3});
  return out;
}

RotationGraph random_graph(std::mt19937_64& rng, VertexId n) {
  const DartId darts = 3 * n;
  while (true) {
    GraphData g;
    g.vertex_count = n;
    std::vector<DartId> order(darts);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    g.twin.resize(darts);
    for (DartId i = 0; i < darts; i += 2) {
      g.twin[order[i]] = order[i + 1];
      g.twin[order[i + 1]] = order[i];
    }
    g.rotation.resize(darts);
    g.dart_vertex.resize(darts);
    std::bernoulli_distribution coin(0.5);
    for (VertexId v = 0; v < n; ++v) {
      const DartId a = 3 * v, b = a + 1, c = a + 2;
      g.dart_vertex[a] = g.dart_vertex[b] = g.dart_vertex[c] = v;
      if (coin(rng)) {
        g.rotation[a] = b, g.rotation[b] = c, g.rotation[c] = a;
      } else {
        g.rotation[a] = c, g.rotation[c] = b, g.rotation[b] = a;
      }
    }
    if (validate(g).ok()) return RotationGraph(std::move(g));
  }
}

RotationGraph relabel(const RotationGraph& g, const std::vector<DartId>& perm) {
  GraphData d;
  d.vertex_count = g.vertex_count();
  const DartId n = g.dart_count();
  d.twin.resize(n);
  d.rotation.resize(n);
  d.dart_vertex.resize(n);
  for (DartId x = 0; x < n; ++x) {
    d.twin[perm[x]] = perm[g.twin(x)];
    d.rotation[perm[x]] = perm[g.rotation(x)];
    d.dart_vertex[perm[x]] = g.vertex_of(x);
  }
  return RotationGraph(std::move(d));
}

TickShifts zero_sum_shifts(const RotationGraph& g, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> uni(-scale, scale);
  const DartId n = g.dart_count();
  std::vector<double> alpha(n);
  for (auto& a : alpha) a = uni(rng);
  // Rows of M: path p has a 1 at d and at rotation_inverse(d) for d in p.
  const auto& paths = g.lht_paths();
  const std::size_t m = paths.size();
  std::vector<std::vector<double>> rows(m, std::vector<double>(n, 0.0));
  for (std::size_t p = 0; p < m; ++p)
    for (DartId d : paths[p].darts) {
      rows[p][d] += 1.0;
      rows[p][g.rotation_inverse(d)] += 1.0;
    }
  // alpha -= M^T (M M^T)^+ M alpha, via Gram-Schmidt on the rows.
  std::vector<std::vector<double>> basis;
  for (auto row : rows) {
    for (const auto& b : basis) {
      double dot = 0;
      for (DartId k = 0; k < n; ++k) dot += row[k] * b[k];
      for (DartId k = 0; k < n; ++k) row[k] -= dot * b[k];
    }
    double norm = 0;
    for (double x : row) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-9) continue;
    for (double& x : row) x /= norm;
    basis.push_back(std::move(row));
  }
  for (const auto& b : basis) {
    double dot = 0;
    for (DartId k = 0; k < n; ++k) dot += alpha[k] * b[k];
    for (DartId k = 0; k < n; ++k) alpha[k] -= dot * b[k];
  }
  return {alpha};
}

std::vector<std::size_t> sorted_lengths(const RotationGraph& g) {
  auto l = path_lengths(g);
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace trisurf::testing

namespace trisurf::testing {

double dstar_area_by_quadrature(double r) {
  // With rho = e^{-s} the density lambda^2 rho d rho d phi becomes
  // (lambda rho)^2 ds d phi, and lambda rho = -1 / log rho = 1 / s.
  boost::math::quadrature::exp_sinh<double> radial;
  const double s0 = -std::log(r);
  const double inner = radial.integrate([&](double t) {
    const double lambda_rho = 1.0 / (s0 + t);
    return lambda_rho * lambda_rho;
  });
  return boost::math::quadrature::gauss<double, 15>::integrate([&](double) { return inner; }, 0.0,
                                                               2 * std::numbers::pi);
}

double fd_curvature(const RadialProfile& p, double r, double h) {
  const ProfilePiece* piece = &p.pieces().front();
  for (const auto& q : p.pieces())
    if (r >= q.lo && r < q.hi) piece = &q;
  const auto u = [&](double x) { return piece->eval(x).u; };
  const double um2 = u(r - 2 * h), um1 = u(r - h), u0 = u(r), up1 = u(r + h), up2 = u(r + 2 * h);
  const double d1 = (um2 - 8 * um1 + 8 * up1 - up2) / (12 * h);
  const double d2 = (-um2 + 16 * um1 - 30 * u0 + 16 * up1 - up2) / (12 * h * h);
  return -(d2 + d1 / r) * std::exp(-2 * u0);
}

double max_fd_error(const RadialProfile& p) {
  double worst = 0;
  for (int i = 0; i <= 900; ++i) {
    const double r = 0.05 + 0.001 * i;
    worst = std::max(worst, std::abs(fd_curvature(p, r) - radial_curvature(p, r)));
  }
  return worst;
}

}  // namespace trisurf::testing
