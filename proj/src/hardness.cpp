#include "pzono/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "kernels.hpp"
#include "pzono/errors.hpp"
#include "pzono/oracles.hpp"
#include "pzono/overapprox.hpp"
#include "pzono/splitting.hpp"

namespace pzono {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (auto& [i, j] : edges_) {
    if (i == j) throw RepresentationError("graph: self-loop at vertex " + std::to_string(i));
    if (i >= n_ || j >= n_) {
      throw RepresentationError("graph: edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") out of range for " + std::to_string(n_) + " vertices");
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw RepresentationError("graph: duplicate edge");
  }
}

Graph Graph::random(std::size_t vertex_count, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw RepresentationError("graph: edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vertex_count; ++i) {
    for (std::size_t j = i + 1; j < vertex_count; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(vertex_count, std::move(edges));
}

PolyZonotope graph_to_bilinear_pz(const Graph& g) {
  const auto n = static_cast<Index>(g.vertex_count());
  const auto h = static_cast<Index>(g.edges().size());
  RawPolyZonotope raw;
  raw.center = Vector::Zero(1);
  raw.indep_generators = Matrix(1, 0);
  raw.dep_generators = Matrix::Constant(1, h, 0.5);
  raw.exponents = RawExponentMatrix::Zero(n, h);
  for (Index t = 0; t < h; ++t) {
    const auto [i, j] = g.edges()[static_cast<std::size_t>(t)];
    raw.exponents(static_cast<Index>(i), t) = 1;
    raw.exponents(static_cast<Index>(j), t) = 1;
  }
  raw.factor_ids.resize(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) raw.factor_ids[static_cast<std::size_t>(v)] = static_cast<FactorId>(v);
  return canonicalize(raw);
}

long bipartization_via_pz(const Graph& g) {
  if (g.vertex_count() > kBipartizationVertexCap) {
    throw BudgetError("bipartization: " + std::to_string(g.vertex_count()) + " vertices exceed the cap of " +
                      std::to_string(kBipartizationVertexCap));
  }
  const auto pz = graph_to_bilinear_pz(g);
  const double delta = static_cast<double>(g.edges().size()) / 2.0 + corner_min(pz).min;
  const double rounded = std::round(delta);
  if (std::abs(delta - rounded) >= 1e-9) {
    throw PreconditionError("bipartization: non-integral optimum " + std::to_string(delta));
  }
  return static_cast<long>(rounded);
}

namespace kernels {

BipartitionProgram::BipartitionProgram(const Graph& g) : adj(g.vertex_count(), 0u), n(g.vertex_count()) {
  for (const auto& [i, j] : g.edges()) {
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
  }
}

}  // namespace kernels

long bipartization_brute(const Graph& g) {
  if (g.vertex_count() > kBipartizationVertexCap) {
    throw BudgetError("bipartization: " + std::to_string(g.vertex_count()) + " vertices exceed the cap of " +
                      std::to_string(kBipartizationVertexCap));
  }
  if (g.vertex_count() <= 1) return 0;
  const kernels::BipartitionProgram prog(g);
  // The last vertex stays on side 0; that covers every unordered bipartition once.
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << (g.vertex_count() - 1));
  long best = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t side = 0; side < count; ++side) {
    best = std::min(best, prog.within(static_cast<std::uint32_t>(side)));
  }
  return best;
}

std::vector<std::int64_t> chebyshev_coefficients(unsigned k) {
  std::vector<std::int64_t> prev{1};    // T_0
  std::vector<std::int64_t> cur{0, 1};  // T_1
  if (k == 0) return prev;
  for (unsigned m = 1; m < k; ++m) {
    std::vector<std::int64_t> next(cur.size() + 1, 0);
    for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] += 2 * cur[d];
    for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolyZonotope chebyshev_pz(unsigned k) {
  if (k % 2 == 0 || k < 1 || k > kMaxChebyshevOrder) {
    throw PreconditionError("chebyshev_pz: order must be odd and in [1, " + std::to_string(kMaxChebyshevOrder) +
                            "], got " + std::to_string(k));
  }
  const auto coeffs = chebyshev_coefficients(k);
  std::vector<std::size_t> degrees;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] != 0) degrees.push_back(d);
  }
  RawPolyZonotope raw;
  raw.center = Vector::Zero(1);
  raw.indep_generators = Matrix(1, 0);
  raw.dep_generators.resize(1, static_cast<Index>(degrees.size()));
  raw.exponents.resize(1, static_cast<Index>(degrees.size()));
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    raw.dep_generators(0, static_cast<Index>(t)) = static_cast<double>(coeffs[degrees[t]]);
    raw.exponents(0, static_cast<Index>(t)) = static_cast<std::int64_t>(degrees[t]);
  }
  return canonicalize(raw);
}

std::pair<double, double> interval_of(const Zonotope& z1d) {
  if (z1d.dim() != 1) throw RepresentationError("interval_of: expected a 1-dimensional zonotope");
  const Vector up = Vector::Ones(1);
  return {zonotope_support_min(z1d, up), -zonotope_support_min(z1d, -up)};
}

Prop2Report prop2_counterexample() {
  RawPolyZonotope raw;
  raw.center = Vector::Zero(1);
  raw.dep_generators = Matrix::Ones(1, 1);
  raw.exponents = RawExponentMatrix::Constant(1, 1, 2);
  const auto pz = canonicalize(raw);

  Prop2Report report;
  std::tie(report.parent_lo, report.parent_hi) = interval_of(overapproximate(pz));

  const auto [pos, neg] = split_factor(pz, 0);
  const auto [lo1, hi1] = interval_of(overapproximate(pos));
  const auto [lo2, hi2] = interval_of(overapproximate(neg));
  report.child_lo = std::min(lo1, lo2);
  report.child_hi = std::max(hi1, hi2);

  // Both unions are intervals here (the children share the same range), and
  // Hausdorff distance between nested intervals is the larger endpoint gap.
  report.hausdorff = std::max(std::abs(report.parent_lo - report.child_lo), std::abs(report.parent_hi - report.child_hi));
  return report;
}

}  // namespace pzono
