#pragma once

/**
 * @file hardness.hpp
 * @brief Executable hardness evidence.
 *
 * Minimum edge-deletion bipartization reduces to minimizing a bilinear 1-D
 * polynomial zonotope: with a generator of 1/2 per edge {i, j} on the term
 * alpha_i * alpha_j, the bipartization number equals |E|/2 plus the minimum.
 * Also the two counterexamples for the overapproximate-and-split algorithm:
 * odd Chebyshev polynomials (bounded range, unbounded overapproximation) and
 * alpha^2 (splitting enlarges the overapproximation).
 */

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pzono/sets.hpp"

namespace pzono {

inline constexpr std::size_t kBipartizationVertexCap = 20;
inline constexpr unsigned kMaxChebyshevOrder = 25;

/// Undirected simple graph on vertices 0..n-1. Edges are stored (i, j) with i < j, sorted.
class Graph {
 public:
  /// Throws RepresentationError on self-loops, duplicates or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  /// G(n, p) with a seeded std::mt19937_64.
  static Graph random(std::size_t vertex_count, double edge_probability, std::uint64_t seed);

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// 1-D set with zero center and one term alpha_i * alpha_j (generator 1/2) per edge.
/// Factor id of vertex v is v; isolated vertices do not appear.
PolyZonotope graph_to_bilinear_pz(const Graph& g);

/// |E|/2 + corner_min(graph_to_bilinear_pz(g)), rounded after checking it is integral.
long bipartization_via_pz(const Graph& g);

/// Fewest within-part edges over all 2^(n-1) bipartitions. OpenMP-parallel.
long bipartization_brute(const Graph& g);

/// Integer coefficients of T_k, index = degree, from T_{k+1} = 2x T_k - T_{k-1}.
std::vector<std::int64_t> chebyshev_coefficients(unsigned k);

/// 1-D set T_k(alpha) for odd k in [1, kMaxChebyshevOrder].
PolyZonotope chebyshev_pz(unsigned k);

struct Prop2Report {
  double parent_lo = 0.0;
  double parent_hi = 0.0;
  double child_lo = 0.0;  ///< union of both children's overapproximations
  double child_hi = 0.0;
  double hausdorff = 0.0; ///< between the parent overapproximation and the child union
};

/// Overapproximation of {alpha^2} before ([0, 1]) and after one split ([-1/4, 1]).
Prop2Report prop2_counterexample();

/// [lo, hi] of a 1-D zonotope.
std::pair<double, double> interval_of(const Zonotope& z1d);

}  // namespace pzono
