#pragma once

/**
 * @file intersect.hpp
 * @brief Overapproximate-and-split halfspace intersection check.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pzono/sets.hpp"
#include "pzono/splitting.hpp"

namespace pzono {

enum class Outcome { Separated, Witness, Exhausted };

std::string_view to_string(Outcome outcome);

struct WitnessFactors {
  Vector alpha;  ///< dependent factors of the queried set, row order
  Vector beta;
};

struct IntersectionVerdict {
  Outcome outcome = Outcome::Exhausted;
  std::optional<Vector> witness_point;
  std::optional<WitnessFactors> witness_factors;
  std::size_t splits_used = 0;
  std::size_t leaves_closed = 0;
  std::size_t max_depth = 0;     ///< deepest node examined
  double residual_bound = 0.0;   ///< max dep_norm among unresolved nodes (0 unless Exhausted)
};

struct CheckOptions {
  SplitStrategy strategy = SplitStrategy::cyclic();
  std::size_t max_splits = 4096;
  std::size_t samples_per_node = 1;
  std::uint64_t seed = 0;
};

/**
 * @brief Decide whether pz meets the halfspace.
 *
 * Nodes are processed largest dep_norm first (FIFO among equals). A node is
 * closed when the support minimum of its zonotope overapproximation exceeds
 * the offset. Otherwise samples_per_node member points are tried: the first
 * at the centre of the node's dependent box, the rest uniform, all with the
 * independent factors at the vertex of Z_I that minimizes along the normal.
 * A sample inside the halfspace ends the search with a Witness, re-evaluated
 * on the input set. Remaining nodes are split until max_splits split
 * operations were spent; what is left open makes the verdict Exhausted.
 */
IntersectionVerdict check_halfspace(const PolyZonotope& pz, const Halfspace& hs, const CheckOptions& options);

IntersectionVerdict check_halfspace(const PolyZonotope& pz, const Halfspace& hs, const SplitStrategy& strategy,
                                    std::size_t max_splits, std::size_t samples_per_node, std::uint64_t seed = 0);

struct TerminationEstimate {
  double lower_bound = 0.0;            ///< certified lower bound of min over pz of x^T normal
  double margin = 0.0;                 ///< lower_bound - offset, > 0
  double projected_error_bound = 0.0;  ///< error_bound(scalar_project(pz, normal))
  double rho = 0.0;                    ///< contraction factor of the projected set (0 if h = 0)
  std::size_t rounds = 0;              ///< smallest R with rho^R * projected_error_bound < margin
  std::string oracle;                  ///< "exact", "corners" or "branch_and_bound"
};

/// Cyclic rounds that suffice for check_halfspace to separate pz from hs.
/// Empty when the certified margin is <= 0.
std::optional<TerminationEstimate> termination_margin(const PolyZonotope& pz, const Halfspace& hs);

}  // namespace pzono
