#include "pzono/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "kernels.hpp"
#include "pzono/errors.hpp"
#include "pzono/overapprox.hpp"
#include "pzono/splitting.hpp"

namespace pzono {

namespace detail {

void require_1d(const PolyZonotope& pz, const char* who) {
  if (pz.dim() != 1) {
    throw RepresentationError(std::string(who) + ": expected a 1-dimensional set, got dimension " +
                              std::to_string(pz.dim()));
  }
}

}  // namespace detail

namespace kernels {

CornerProgram::CornerProgram(const PolyZonotope& pz1d)
    : constant(pz1d.center()(0) - pz1d.indep_generators().cwiseAbs().sum()),
      num_factors(static_cast<int>(pz1d.num_factors())) {
  const auto& e = pz1d.exponents();
  for (Index i = 0; i < pz1d.num_terms(); ++i) {
    std::uint64_t mask = 0;
    for (Index k = 0; k < e.rows(); ++k) {
      if (e(k, i) % 2 == 1) mask |= std::uint64_t{1} << k;
    }
    coeffs.push_back(pz1d.dep_generators()(0, i));
    odd_masks.push_back(mask);
  }
}

Vector CornerProgram::assignment(std::uint64_t mask) const {
  Vector a(num_factors);
  for (int k = 0; k < num_factors; ++k) a(k) = ((mask >> k) & 1) ? -1.0 : 1.0;
  return a;
}

GridProgram::GridProgram(const PolyZonotope& pz1d, std::size_t points_per_dim)
    : points(points_per_dim), num_factors(static_cast<int>(pz1d.num_factors())) {
  const double indep = pz1d.indep_generators().cwiseAbs().sum();
  lo_constant = pz1d.center()(0) - indep;
  hi_constant = pz1d.center()(0) + indep;
  const auto& e = pz1d.exponents();
  for (Index i = 0; i < pz1d.num_terms(); ++i) {
    coeffs.push_back(pz1d.dep_generators()(0, i));
    for (Index k = 0; k < e.rows(); ++k) {
      exponents.push_back(e(k, i));
      max_degree = std::max(max_degree, e(k, i));
    }
  }
  grid.resize(points);
  for (std::size_t v = 0; v < points; ++v) {
    grid[v] = -1.0 + 2.0 * static_cast<double>(v) / static_cast<double>(points - 1);
  }
  const std::size_t stride = max_degree + 1;
  power_table.assign(points * stride, 1.0);
  for (std::size_t v = 0; v < points; ++v) {
    for (std::size_t p = 1; p < stride; ++p) power_table[v * stride + p] = power_table[v * stride + p - 1] * grid[v];
  }
  for (int k = 0; k < num_factors; ++k) total_points *= points;
}

Vector GridProgram::assignment(std::uint64_t index) const {
  Vector a(num_factors);
  for (int k = 0; k < num_factors; ++k) {
    a(k) = grid[index % points];
    index /= points;
  }
  return a;
}

double GridProgram::spacing() const { return 2.0 / static_cast<double>(points - 1); }

double GridProgram::slack(const PolyZonotope& pz1d) const {
  const auto& e = pz1d.exponents();
  double total = 0.0;
  for (Index k = 0; k < e.rows(); ++k) {
    double lipschitz = 0.0;
    for (Index i = 0; i < e.cols(); ++i) lipschitz += std::abs(pz1d.dep_generators()(0, i)) * e(k, i);
    total += lipschitz;
  }
  return total * spacing() / 2.0;
}

}  // namespace kernels

MultiAffineCheck check_multi_affine(const PolyZonotope& pz) {
  const auto& e = pz.exponents();
  for (Index i = 0; i < e.cols(); ++i) {
    for (Index k = 0; k < e.rows(); ++k) {
      if (e(k, i) > 1) return {false, std::make_pair(k, i)};
    }
  }
  return {};
}

namespace {

void check_corner_preconditions(const PolyZonotope& pz1d, std::size_t max_factors) {
  detail::require_1d(pz1d, "corner_min");
  if (const auto check = check_multi_affine(pz1d); !check.is_multi_affine) {
    const auto [row, col] = *check.violating_entry;
    throw PreconditionError("corner_min: set is not multi-affine (exponent " +
                            std::to_string(pz1d.exponents()(row, col)) + " at row " + std::to_string(row) +
                            ", column " + std::to_string(col) + ")");
  }
  if (static_cast<std::size_t>(pz1d.num_factors()) > max_factors || pz1d.num_factors() >= 63) {
    throw BudgetError("corner_min: " + std::to_string(pz1d.num_factors()) + " factors exceed the cap of " +
                      std::to_string(max_factors));
  }
}

void check_grid_preconditions(const PolyZonotope& pz1d, std::size_t points, std::size_t max_factors) {
  detail::require_1d(pz1d, "grid oracle");
  if (points < 2) throw PreconditionError("grid oracle: points_per_dim must be at least 2");
  if (static_cast<std::size_t>(pz1d.num_factors()) > max_factors || pz1d.num_factors() > 63) {
    throw BudgetError("grid oracle: " + std::to_string(pz1d.num_factors()) + " factors exceed the cap of " +
                      std::to_string(max_factors));
  }
  double total = 1.0;
  for (Index k = 0; k < pz1d.num_factors(); ++k) total *= static_cast<double>(points);
  if (total > 1e12) throw BudgetError("grid oracle: grid too large");
}

}  // namespace

CornerResult corner_min(const PolyZonotope& pz1d, std::size_t max_factors) {
  check_corner_preconditions(pz1d, max_factors);
  const kernels::CornerProgram prog(pz1d);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << prog.num_factors);

  auto best = kernels::ArgBest::worst_min();
#pragma omp parallel
  {
    auto local = kernels::ArgBest::worst_min();
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < count; ++m) {
      local.offer_min(prog.value(static_cast<std::uint64_t>(m)), static_cast<std::uint64_t>(m));
    }
#pragma omp critical(pzono_corner_min)
    best.offer_min(local.value, local.index);
  }
  return {best.value, prog.assignment(best.index)};
}

GridResult grid_search(const PolyZonotope& pz1d, std::size_t points_per_dim, std::size_t max_factors) {
  check_grid_preconditions(pz1d, points_per_dim, max_factors);
  const kernels::GridProgram prog(pz1d, points_per_dim);
  const auto count = static_cast<std::int64_t>(prog.total_points);

  auto lo = kernels::ArgBest::worst_min();
  auto hi = kernels::ArgBest::worst_max();
#pragma omp parallel
  {
    auto local_lo = kernels::ArgBest::worst_min();
    auto local_hi = kernels::ArgBest::worst_max();
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const double v = prog.dependent_value(static_cast<std::uint64_t>(i));
      local_lo.offer_min(v, static_cast<std::uint64_t>(i));
      local_hi.offer_max(v, static_cast<std::uint64_t>(i));
    }
#pragma omp critical(pzono_grid_search)
    {
      lo.offer_min(local_lo.value, local_lo.index);
      hi.offer_max(local_hi.value, local_hi.index);
    }
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

double grid_min(const PolyZonotope& pz1d, std::size_t points_per_dim) {
  return grid_search(pz1d, points_per_dim).min;
}

std::pair<double, double> interval_hull_1d(const PolyZonotope& pz1d, std::size_t points_per_dim) {
  const auto res = grid_search(pz1d, points_per_dim);
  return {res.min, res.max};
}

namespace {

struct BoundNode {
  double lower;
  std::size_t order;
  SplitNode node;
};

struct LooserFirst {
  bool operator()(const BoundNode& a, const BoundNode& b) const {
    if (a.lower != b.lower) return a.lower > b.lower;
    return a.order > b.order;
  }
};

// Centre and sign-corner evaluations of a node; updates the incumbent.
void probe(const SplitNode& node, double indep, BoundResult& best) {
  const PolyZonotope& set = node.set();
  const Index r = set.num_factors();
  Vector corner = Vector::Zero(r);
  for (Index i = 0; i < set.num_terms(); ++i) {
    if (set.exponents().col(i).sum() != 1) continue;
    Index k = 0;
    set.exponents().col(i).maxCoeff(&k);
    corner(k) = set.dep_generators()(0, i) > 0 ? -1.0 : 1.0;
  }
  for (const Vector& alpha : {Vector(Vector::Zero(r)), corner}) {
    const double v = evaluate(set, alpha, Vector::Zero(set.num_indep()))(0) - indep;
    if (v < best.upper) {
      best.upper = v;
      best.argmin = node.root_alpha(alpha);
    }
  }
}

}  // namespace

BoundResult certified_min(const PolyZonotope& pz1d, double tolerance, std::size_t max_nodes) {
  detail::require_1d(pz1d, "certified_min");
  // The independent part is handled analytically; drop it from the search.
  const double indep = pz1d.indep_generators().cwiseAbs().sum();
  auto raw = pz1d.to_raw();
  raw.indep_generators = Matrix(1, 0);
  const PolyZonotope dep = canonicalize(raw);

  BoundResult best;
  best.upper = std::numeric_limits<double>::infinity();
  const Vector up = Vector::Ones(1);
  const auto strategy = SplitStrategy::max_exponent_norm();

  std::priority_queue<BoundNode, std::vector<BoundNode>, LooserFirst> open;
  std::size_t order = 0;
  auto push = [&](SplitNode node) {
    probe(node, indep, best);
    const double lower = zonotope_support_min(overapproximate(node.set()), up) - indep;
    open.push({lower, order++, std::move(node)});
  };
  push(SplitNode::root(dep));

  while (true) {
    const BoundNode top = open.top();
    best.lower = std::min(top.lower, best.upper);
    if (best.upper - best.lower <= tolerance * (1.0 + std::abs(best.upper))) {
      best.converged = true;
      break;
    }
    if (best.nodes >= max_nodes) break;
    open.pop();
    // A constant node is exact and already probed, so it never reaches this point.
    ++best.nodes;
    auto [a, b] = split_once(top.node, strategy);
    push(std::move(a));
    push(std::move(b));
  }
  return best;
}

}  // namespace pzono
