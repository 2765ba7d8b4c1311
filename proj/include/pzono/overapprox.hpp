#pragma once

#include <cstddef>
#include <optional>

#include "pzono/sets.hpp"

namespace pzono {

struct OverapproxDiagnostics {
  double dep_norm = 0.0;          ///< entry-wise one-norm of G_D
  std::optional<double> rho;      ///< contraction factor; empty when h == 0
  std::size_t even_index_count = 0;
  std::size_t odd_index_count = 0;
};

/// True when every exponent of term `term` is even (the term is then >= 0 on the box).
bool is_all_even(const PolyZonotope& pz, Index term);

/**
 * @brief Enclosing zonotope Z_I + Z_D.
 *
 * Each dependent term becomes one generator. Terms whose exponents are all
 * even range over [0, 1], so they contribute G_D(:,i)/2 to the center and
 * G_D(:,i)/2 as generator; all other terms keep G_D(:,i). Generator order is
 * G_I first, then the dependent terms in column order.
 */
Zonotope overapproximate(const PolyZonotope& pz);

/// sum_i ||G_D(:,i)||_1, an upper bound on the Hausdorff distance to overapproximate(pz).
double error_bound(const PolyZonotope& pz);

/// max_i (1 - 2^-||E(:,i)||_1). Throws PreconditionError when the set has no dependent terms.
double contraction_factor(const PolyZonotope& pz);

OverapproxDiagnostics diagnose(const PolyZonotope& pz);

}  // namespace pzono
