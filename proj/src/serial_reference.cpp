#include "pzono/serial.hpp"

#include <algorithm>
#include <limits>

#include "kernels.hpp"
#include "pzono/errors.hpp"

namespace pzono::serial {

CornerResult corner_min(const PolyZonotope& pz1d, std::size_t max_factors) {
  detail::require_1d(pz1d, "corner_min");
  if (!check_multi_affine(pz1d).is_multi_affine) throw PreconditionError("corner_min: set is not multi-affine");
  if (static_cast<std::size_t>(pz1d.num_factors()) > max_factors) throw BudgetError("corner_min: too many factors");

  const kernels::CornerProgram prog(pz1d);
  const std::uint64_t count = std::uint64_t{1} << prog.num_factors;
  auto best = kernels::ArgBest::worst_min();
  for (std::uint64_t m = 0; m < count; ++m) best.offer_min(prog.value(m), m);
  return {best.value, prog.assignment(best.index)};
}

GridResult grid_search(const PolyZonotope& pz1d, std::size_t points_per_dim, std::size_t max_factors) {
  detail::require_1d(pz1d, "grid oracle");
  if (points_per_dim < 2) throw PreconditionError("grid oracle: points_per_dim must be at least 2");
  if (static_cast<std::size_t>(pz1d.num_factors()) > max_factors) throw BudgetError("grid oracle: too many factors");

  const kernels::GridProgram prog(pz1d, points_per_dim);
  auto lo = kernels::ArgBest::worst_min();
  auto hi = kernels::ArgBest::worst_max();
  for (std::uint64_t i = 0; i < prog.total_points; ++i) {
    const double v = prog.dependent_value(i);
    lo.offer_min(v, i);
    hi.offer_max(v, i);
  }
  GridResult res;
  res.min = prog.lo_constant + lo.value;
  res.max = prog.hi_constant + hi.value;
  res.argmin = prog.assignment(lo.index);
  res.spacing = prog.spacing();
  res.slack = prog.slack(pz1d);
  res.points_per_dim = points_per_dim;
  return res;
}

long bipartization_brute(const Graph& g) {
  if (g.vertex_count() > kBipartizationVertexCap) throw BudgetError("bipartization: too many vertices");
  if (g.vertex_count() <= 1) return 0;
  const kernels::BipartitionProgram prog(g);
  const std::uint32_t count = 1u << (g.vertex_count() - 1);
  long best = std::numeric_limits<long>::max();
  for (std::uint32_t side = 0; side < count; ++side) best = std::min(best, prog.within(side));
  return best;
}

std::vector<SplitNode> expand_level(std::span<const SplitNode> nodes, const SplitStrategy& strategy) {
  std::vector<SplitNode> out;
  out.reserve(2 * nodes.size());
  for (const auto& node : nodes) {
    auto [a, b] = split_once(node, strategy);
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace pzono::serial
