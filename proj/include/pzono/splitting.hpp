#pragma once

/**
 * @file splitting.hpp
 * @brief Bisection of a dependent factor's domain and split-tree expansion.
 *
 * Splitting factor s replaces alpha_s by (1+alpha_s)/2 in the first child and
 * by -(1+alpha_s)/2 in the second; each term alpha_s^e expands binomially and
 * the children are re-canonicalized. The union of the children is the parent.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "pzono/sets.hpp"

namespace pzono {

inline constexpr std::size_t kDefaultLeafCap = std::size_t{1} << 20;

/// Leaf cap from PZ_LEAF_CAP, or kDefaultLeafCap when unset. Throws RepresentationError on garbage.
std::size_t leaf_cap_from_env();

enum class SplitKind { Cyclic, MaxExponentNorm };

/**
 * Cyclic picks the root factor with index depth mod r at every node, so every
 * root-to-leaf path sees 1, 2, ..., r, 1, 2, ... . MaxExponentNorm picks the
 * factor k maximizing sum_i E(k,i) * ||G_D(:,i)||_1, smallest index on ties.
 */
struct SplitStrategy {
  SplitKind kind = SplitKind::Cyclic;

  static SplitStrategy cyclic() { return {SplitKind::Cyclic}; }
  static SplitStrategy max_exponent_norm() { return {SplitKind::MaxExponentNorm}; }

  /// Factor index (into the root's factor list) scheduled at `depth`.
  static std::size_t cyclic_cursor(std::size_t depth, std::size_t num_root_factors) {
    return depth % num_root_factors;
  }
};

/// One node of the split tree. Remembers how its factors map back to the root's.
class SplitNode {
 public:
  static SplitNode root(PolyZonotope set);

  const PolyZonotope& set() const { return set_; }
  std::size_t depth() const { return sign_path_.size(); }
  const std::vector<std::int8_t>& sign_path() const { return sign_path_; }
  double dep_norm() const { return dep_norm_; }
  const std::vector<FactorId>& root_factor_ids() const { return *root_ids_; }

  /// Root-row dependent factors corresponding to this node's factors (row order of set()).
  /// Root factors this node no longer uses are taken at the centre of the node's sub-box.
  Vector root_alpha(const Vector& node_alpha) const;

  /// Child obtained by substituting id <- side*(1+id)/2 (side is +1 or -1) into `child_set`.
  SplitNode child(PolyZonotope child_set, FactorId id, std::int8_t side) const;

 private:
  SplitNode(PolyZonotope set, std::shared_ptr<const std::vector<FactorId>> root_ids, Vector offset,
            Vector scale, std::vector<std::int8_t> path);

  PolyZonotope set_;
  std::shared_ptr<const std::vector<FactorId>> root_ids_;
  Vector offset_;  // root alpha_k = offset_k + scale_k * node alpha (per root row)
  Vector scale_;
  std::vector<std::int8_t> sign_path_;
  double dep_norm_ = 0.0;
};

/// Split on exponent row `row` (0-based). Throws IndexError when row >= r.
std::pair<PolyZonotope, PolyZonotope> split_factor(const PolyZonotope& pz, Index row);

/// Split on factor `id`; if the set does not use it both children equal pz.
std::pair<PolyZonotope, PolyZonotope> split_factor_id(const PolyZonotope& pz, FactorId id);

/// Factor id the strategy picks at this node. Throws PreconditionError when there is nothing to split.
FactorId select_split_factor(const SplitNode& node, const SplitStrategy& strategy);

/// Split the node once; children have depth+1, extended sign path and fresh dep_norm.
std::pair<SplitNode, SplitNode> split_once(const SplitNode& node, const SplitStrategy& strategy);

/// Split every node once. Children of nodes[i] land at 2i and 2i+1. OpenMP-parallel.
std::vector<SplitNode> expand_level(std::span<const SplitNode> nodes, const SplitStrategy& strategy);

/// Leaves after `steps` splits of every branch. Throws BudgetError if 2^steps > leaf_cap.
std::vector<SplitNode> expand_tree(const PolyZonotope& pz, std::size_t steps, const SplitStrategy& strategy,
                                   std::size_t leaf_cap = kDefaultLeafCap);

/// Max leaf dep_norm after s = 0, 1, ..., steps cyclic splits (steps+1 entries).
std::vector<double> cyclic_norm_profile(const PolyZonotope& pz, std::size_t steps,
                                        std::size_t leaf_cap = kDefaultLeafCap);

/// Max leaf dep_norm after rounds * r cyclic splits. rounds == 0 gives error_bound(pz).
double norm_after_round(const PolyZonotope& pz, std::size_t rounds, std::size_t leaf_cap = kDefaultLeafCap);

/// dep_norm along one root-to-leaf path that always descends into the child with the
/// larger dep_norm (first child on ties): a lower bound on the max leaf norm at each
/// depth when the full tree is too large to enumerate. steps+1 entries.
std::vector<double> worst_path_profile(const PolyZonotope& pz, std::size_t steps, const SplitStrategy& strategy);

}  // namespace pzono
