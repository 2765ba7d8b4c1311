#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force ground truth for 1-D polynomial zonotopes.
 *
 * All oracles take a 1-dimensional set (see scalar_project()). Independent
 * factors are never enumerated: their contribution to the minimum is
 * -sum_j |G_I(0,j)| and to the maximum +sum_j |G_I(0,j)|.
 */

#include <cstddef>
#include <optional>
#include <utility>

#include "pzono/sets.hpp"

namespace pzono {

inline constexpr std::size_t kCornerFactorCap = 20;
inline constexpr std::size_t kGridFactorCap = 4;

struct MultiAffineCheck {
  bool is_multi_affine = true;
  std::optional<std::pair<Index, Index>> violating_entry;  ///< (row, column) of E
};

MultiAffineCheck check_multi_affine(const PolyZonotope& pz);

struct CornerResult {
  double min = 0.0;
  Vector argmin;  ///< dependent factors in {-1, 1}, row order
};

/**
 * @brief Exact minimum of a multi-affine 1-D set by enumerating all 2^r corners.
 *
 * Ties resolve to the corner with the smallest enumeration index, so the
 * OpenMP result matches the serial reference bit for bit.
 */
CornerResult corner_min(const PolyZonotope& pz1d, std::size_t max_factors = kCornerFactorCap);

struct GridResult {
  double min = 0.0;
  double max = 0.0;
  Vector argmin;
  double spacing = 0.0;  ///< distance between neighbouring grid values
  /// Certified gap to the true range: sum_k L_k * spacing / 2 with
  /// L_k = sum_i |G_D(0,i)| * E(k,i) bounding |d/d alpha_k|.
  double slack = 0.0;
  std::size_t points_per_dim = 0;
};

/// Evaluate on the uniform grid {-1, ..., 1}^r. points_per_dim >= 2, r <= max_factors.
GridResult grid_search(const PolyZonotope& pz1d, std::size_t points_per_dim,
                       std::size_t max_factors = kGridFactorCap);

/// Grid minimum; an upper bound on the true minimum.
double grid_min(const PolyZonotope& pz1d, std::size_t points_per_dim);

/// (grid min, grid max); an inner approximation of the range.
std::pair<double, double> interval_hull_1d(const PolyZonotope& pz1d, std::size_t points_per_dim);

struct BoundResult {
  double lower = 0.0;     ///< certified lower bound on the minimum
  double upper = 0.0;     ///< value attained at argmin
  Vector argmin;          ///< dependent factors, row order
  std::size_t nodes = 0;  ///< sub-boxes expanded
  bool converged = false; ///< upper - lower <= tolerance * (1 + |upper|)
};

/**
 * @brief Branch and bound on the factor box for any 1-D set.
 *
 * Sub-boxes are the split tree of the set (largest exponent norm first), so
 * each node is re-expanded around its own centre; its zonotope enclosure gives
 * the lower bound and evaluations at the centre and at the sign corner of the
 * linear terms give upper bounds. Stops at the tolerance or after max_nodes
 * expansions; `lower` is certified either way.
 */
BoundResult certified_min(const PolyZonotope& pz1d, double tolerance = 1e-9, std::size_t max_nodes = 1u << 16);

namespace detail {

/// Throws RepresentationError unless pz is 1-dimensional.
void require_1d(const PolyZonotope& pz, const char* who);

}  // namespace detail

}  // namespace pzono
