#pragma once

// Flattened per-point evaluators shared by the OpenMP kernels and their serial
// references. Both loop over the same index space and call the same point
// function, so results agree exactly.

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "pzono/hardness.hpp"
#include "pzono/sets.hpp"

namespace pzono::kernels {

/// Multi-affine 1-D set evaluated at a corner. Bit k of `mask` set means alpha_k = -1.
struct CornerProgram {
  double constant = 0.0;  // c - sum |G_I|
  std::vector<double> coeffs;
  std::vector<std::uint64_t> odd_masks;
  int num_factors = 0;

  explicit CornerProgram(const PolyZonotope& pz1d);

  double value(std::uint64_t mask) const {
    double v = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      v += (std::popcount(odd_masks[i] & mask) & 1) ? -coeffs[i] : coeffs[i];
    }
    return v;
  }

  Vector assignment(std::uint64_t mask) const;
};

/// 1-D set on a uniform grid; point index decodes to per-factor digits (factor 0 fastest).
struct GridProgram {
  double lo_constant = 0.0;  // c - sum |G_I|
  double hi_constant = 0.0;  // c + sum |G_I|
  std::vector<double> coeffs;
  std::vector<std::uint32_t> exponents;  // term-major: exponents[i * r + k]
  std::vector<double> power_table;       // power_table[(v * (max_deg+1)) + p] = grid[v]^p
  std::vector<double> grid;
  std::size_t points = 0;
  int num_factors = 0;
  std::uint32_t max_degree = 0;
  std::uint64_t total_points = 1;

  GridProgram(const PolyZonotope& pz1d, std::size_t points_per_dim);

  double dependent_value(std::uint64_t index) const {
    std::uint64_t digits[64];
    std::uint64_t rest = index;
    for (int k = 0; k < num_factors; ++k) {
      digits[k] = rest % points;
      rest /= points;
    }
    const std::size_t stride = max_degree + 1;
    double v = 0.0;
    const auto r = static_cast<std::size_t>(num_factors);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      double m = coeffs[i];
      for (std::size_t k = 0; k < r; ++k) m *= power_table[digits[k] * stride + exponents[i * r + k]];
      v += m;
    }
    return v;
  }

  Vector assignment(std::uint64_t index) const;
  double spacing() const;
  double slack(const PolyZonotope& pz1d) const;
};

/// Minimum/maximum with the smallest index among ties.
struct ArgBest {
  double value;
  std::uint64_t index;

  static ArgBest worst_min() { return {std::numeric_limits<double>::infinity(), 0}; }
  static ArgBest worst_max() { return {-std::numeric_limits<double>::infinity(), 0}; }

  void offer_min(double v, std::uint64_t i) {
    if (v < value || (v == value && i < index)) {
      value = v;
      index = i;
    }
  }
  void offer_max(double v, std::uint64_t i) {
    if (v > value || (v == value && i < index)) {
      value = v;
      index = i;
    }
  }
};

/// Adjacency bitmasks; bit j of adj[i] set iff edge {i, j}.
struct BipartitionProgram {
  std::vector<std::uint32_t> adj;
  std::size_t n = 0;

  explicit BipartitionProgram(const Graph& g);

  /// Edges with both ends on the same side; bit v of `side` gives v's side.
  long within(std::uint32_t side) const {
    long twice = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t same = ((side >> v) & 1u) ? side : ~side;
      twice += std::popcount(adj[v] & same);
    }
    return twice / 2;
  }
};

}  // namespace pzono::kernels
