#include "pzono/intersect.hpp"

#include <cmath>
#include <queue>
#include <random>

#include "pzono/errors.hpp"
#include "pzono/oracles.hpp"
#include "pzono/overapprox.hpp"

namespace pzono {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Separated:
      return "separated";
    case Outcome::Witness:
      return "witness";
    case Outcome::Exhausted:
      return "exhausted";
  }
  return "unknown";
}

namespace {

struct QueueEntry {
  double dep_norm;
  std::size_t seq;
  std::size_t slot;
};

// Largest dep_norm first, then insertion order.
struct EntryOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.dep_norm != b.dep_norm) return a.dep_norm < b.dep_norm;
    return a.seq > b.seq;
  }
};

}  // namespace

IntersectionVerdict check_halfspace(const PolyZonotope& pz, const Halfspace& hs, const CheckOptions& options) {
  if (hs.dim() != pz.dim()) {
    throw RepresentationError("halfspace dimension " + std::to_string(hs.dim()) + " does not match set dimension " +
                              std::to_string(pz.dim()));
  }
  if (options.samples_per_node == 0) throw PreconditionError("samples_per_node must be at least 1");

  const Vector& d = hs.normal();
  // Z_I is shared by every node; its minimizing vertex does not change under splitting.
  const Vector beta_star = support_minimizer(pz.indep_generators(), d);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  IntersectionVerdict verdict;
  std::vector<std::optional<SplitNode>> store;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, EntryOrder> open;
  std::size_t seq = 0;
  auto push = [&](SplitNode node) {
    const double norm = node.dep_norm();
    store.emplace_back(std::move(node));
    open.push({norm, seq++, store.size() - 1});
  };
  push(SplitNode::root(pz));

  double residual = 0.0;
  bool unresolved = false;

  while (!open.empty()) {
    const QueueEntry top = open.top();
    open.pop();
    SplitNode node = std::move(*store[top.slot]);
    store[top.slot].reset();
    verdict.max_depth = std::max(verdict.max_depth, node.depth());

    if (zonotope_support_min(overapproximate(node.set()), d) > hs.offset()) {
      ++verdict.leaves_closed;
      continue;
    }

    const Index r = node.set().num_factors();
    for (std::size_t s = 0; s < options.samples_per_node; ++s) {
      Vector alpha = Vector::Zero(r);
      if (s > 0) {
        for (Index k = 0; k < r; ++k) alpha(k) = unit(rng);
      }
      const Vector root_alpha = node.root_alpha(alpha);
      const Vector x = evaluate(pz, root_alpha, beta_star);
      if (hs.contains(x)) {
        verdict.outcome = Outcome::Witness;
        verdict.witness_point = x;
        verdict.witness_factors = WitnessFactors{root_alpha, beta_star};
        verdict.residual_bound = 0.0;
        return verdict;
      }
    }

    // Without dependent terms the node is exactly its zonotope and the sample at
    // the minimizing vertex was decisive; nothing is left to refine.
    if (node.set().num_terms() == 0) {
      ++verdict.leaves_closed;
      continue;
    }
    if (verdict.splits_used >= options.max_splits) {
      unresolved = true;
      residual = std::max(residual, node.dep_norm());
      continue;
    }
    auto [a, b] = split_once(node, options.strategy);
    ++verdict.splits_used;
    push(std::move(a));
    push(std::move(b));
  }

  verdict.outcome = unresolved ? Outcome::Exhausted : Outcome::Separated;
  verdict.residual_bound = residual;
  return verdict;
}

IntersectionVerdict check_halfspace(const PolyZonotope& pz, const Halfspace& hs, const SplitStrategy& strategy,
                                    std::size_t max_splits, std::size_t samples_per_node, std::uint64_t seed) {
  return check_halfspace(pz, hs, CheckOptions{strategy, max_splits, samples_per_node, seed});
}

std::optional<TerminationEstimate> termination_margin(const PolyZonotope& pz, const Halfspace& hs) {
  const PolyZonotope line = scalar_project(pz, hs.normal());
  TerminationEstimate est;
  est.projected_error_bound = error_bound(line);

  if (line.num_terms() == 0) {
    est.lower_bound = line.center()(0) - line.indep_generators().cwiseAbs().sum();
    est.oracle = "exact";
  } else if (check_multi_affine(line).is_multi_affine &&
             static_cast<std::size_t>(line.num_factors()) <= kCornerFactorCap) {
    est.lower_bound = corner_min(line).min;
    est.oracle = "corners";
  } else {
    est.lower_bound = certified_min(line).lower;
    est.oracle = "branch_and_bound";
  }

  est.margin = est.lower_bound - hs.offset();
  if (!(est.margin > 0.0)) return std::nullopt;
  if (line.num_terms() == 0) return est;

  est.rho = contraction_factor(line);
  std::size_t rounds = 0;
  if (est.projected_error_bound >= est.margin) {
    rounds = static_cast<std::size_t>(std::ceil(std::log(est.margin / est.projected_error_bound) / std::log(est.rho)));
    while (std::pow(est.rho, static_cast<double>(rounds)) * est.projected_error_bound >= est.margin) ++rounds;
    while (rounds > 0 && std::pow(est.rho, static_cast<double>(rounds - 1)) * est.projected_error_bound < est.margin) {
      --rounds;
    }
  }
  est.rounds = rounds;
  return est;
}

}  // namespace pzono
