#include "pzono/splitting.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

#include "pzono/errors.hpp"
#include "pzono/overapprox.hpp"

namespace pzono {

std::size_t leaf_cap_from_env() {
  const char* env = std::getenv("PZ_LEAF_CAP");
  if (env == nullptr || *env == '\0') return kDefaultLeafCap;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0' || v == 0) {
    throw RepresentationError(std::string("PZ_LEAF_CAP: not a positive integer: ") + env);
  }
  return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------- SplitNode

SplitNode::SplitNode(PolyZonotope set, std::shared_ptr<const std::vector<FactorId>> root_ids, Vector offset,
                     Vector scale, std::vector<std::int8_t> path)
    : set_(std::move(set)),
      root_ids_(std::move(root_ids)),
      offset_(std::move(offset)),
      scale_(std::move(scale)),
      sign_path_(std::move(path)),
      dep_norm_(error_bound(set_)) {}

SplitNode SplitNode::root(PolyZonotope set) {
  auto ids = std::make_shared<const std::vector<FactorId>>(set.factor_ids());
  const auto r = static_cast<Index>(ids->size());
  return SplitNode(std::move(set), std::move(ids), Vector::Zero(r), Vector::Ones(r), {});
}

Vector SplitNode::root_alpha(const Vector& node_alpha) const {
  if (node_alpha.size() != set_.num_factors()) {
    throw RepresentationError("root_alpha: expected " + std::to_string(set_.num_factors()) + " factors");
  }
  const auto& ids = *root_ids_;
  Vector out(static_cast<Index>(ids.size()));
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const auto row = set_.factor_row(ids[k]);
    const double local = row ? node_alpha(*row) : 0.0;
    const auto kk = static_cast<Index>(k);
    out(kk) = std::clamp(offset_(kk) + scale_(kk) * local, -1.0, 1.0);
  }
  return out;
}

SplitNode SplitNode::child(PolyZonotope child_set, FactorId id, std::int8_t side) const {
  Vector offset = offset_;
  Vector scale = scale_;
  const auto& ids = *root_ids_;
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it != ids.end()) {
    const auto k = static_cast<Index>(it - ids.begin());
    // parent = side * (1 + child) / 2
    offset(k) += scale(k) * side * 0.5;
    scale(k) *= side * 0.5;
  }
  auto path = sign_path_;
  path.push_back(side);
  return SplitNode(std::move(child_set), root_ids_, std::move(offset), std::move(scale), std::move(path));
}

// ---------------------------------------------------------------- split_factor

namespace {

// binom(e, j) / 2^e for j = 0..e, computed by Pascal rows in doubles; exact for e <= 53.
std::vector<double> binomial_weights(std::uint32_t e) {
  std::vector<double> row{1.0};
  for (std::uint32_t m = 0; m < e; ++m) {
    std::vector<double> next(row.size() + 1, 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += 0.5 * row[j];
      next[j + 1] += 0.5 * row[j];
    }
    row = std::move(next);
  }
  return row;
}

PolyZonotope substitute(const PolyZonotope& pz, Index row, double side) {
  const auto& e = pz.exponents();
  const auto& g = pz.dep_generators();
  Index out_terms = 0;
  for (Index i = 0; i < pz.num_terms(); ++i) out_terms += static_cast<Index>(e(row, i)) + 1;

  RawPolyZonotope raw;
  raw.center = pz.center();
  raw.indep_generators = pz.indep_generators();
  raw.dep_generators.resize(pz.dim(), out_terms);
  raw.exponents.resize(pz.num_factors(), out_terms);
  raw.factor_ids = pz.factor_ids();

  Index col = 0;
  for (Index i = 0; i < pz.num_terms(); ++i) {
    const std::uint32_t p = e(row, i);
    const auto w = binomial_weights(p);
    // (side*(1+a)/2)^p = side^p * sum_j binom(p,j)/2^p a^j
    const double sign = (p % 2 == 1) ? side : 1.0;
    for (std::uint32_t j = 0; j <= p; ++j, ++col) {
      raw.dep_generators.col(col) = sign * w[j] * g.col(i);
      raw.exponents.col(col) = e.col(i).cast<std::int64_t>();
      raw.exponents(row, col) = j;
    }
  }
  return canonicalize(raw);
}

}  // namespace

std::pair<PolyZonotope, PolyZonotope> split_factor(const PolyZonotope& pz, Index row) {
  if (row < 0 || row >= pz.num_factors()) {
    throw IndexError("split factor row " + std::to_string(row) + " out of range; set has " +
                     std::to_string(pz.num_factors()) + " dependent factors");
  }
  return {substitute(pz, row, 1.0), substitute(pz, row, -1.0)};
}

std::pair<PolyZonotope, PolyZonotope> split_factor_id(const PolyZonotope& pz, FactorId id) {
  if (const auto row = pz.factor_row(id)) return split_factor(pz, *row);
  return {pz, pz};
}

// ---------------------------------------------------------------- strategies

FactorId select_split_factor(const SplitNode& node, const SplitStrategy& strategy) {
  const auto& set = node.set();
  switch (strategy.kind) {
    case SplitKind::Cyclic: {
      const auto& ids = node.root_factor_ids();
      if (ids.empty()) throw PreconditionError("cannot split: the set has no dependent factors");
      return ids[SplitStrategy::cyclic_cursor(node.depth(), ids.size())];
    }
    case SplitKind::MaxExponentNorm: {
      if (set.num_factors() == 0) throw PreconditionError("cannot split: the set has no dependent factors");
      const auto& e = set.exponents();
      Eigen::VectorXd col_norm = set.dep_generators().cwiseAbs().colwise().sum().transpose();
      Index best = 0;
      double best_score = -1.0;
      for (Index k = 0; k < set.num_factors(); ++k) {
        double score = 0.0;
        for (Index i = 0; i < set.num_terms(); ++i) score += static_cast<double>(e(k, i)) * col_norm(i);
        if (score > best_score) {
          best_score = score;
          best = k;
        }
      }
      return set.factor_ids()[static_cast<std::size_t>(best)];
    }
  }
  throw PreconditionError("unknown split strategy");
}

std::pair<SplitNode, SplitNode> split_once(const SplitNode& node, const SplitStrategy& strategy) {
  const FactorId id = select_split_factor(node, strategy);
  auto [pos, neg] = split_factor_id(node.set(), id);
  return {node.child(std::move(pos), id, 1), node.child(std::move(neg), id, -1)};
}

std::vector<SplitNode> expand_level(std::span<const SplitNode> nodes, const SplitStrategy& strategy) {
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
  std::vector<std::optional<SplitNode>> slots(nodes.size() * 2);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    auto [a, b] = split_once(nodes[static_cast<std::size_t>(i)], strategy);
    slots[2 * static_cast<std::size_t>(i)].emplace(std::move(a));
    slots[2 * static_cast<std::size_t>(i) + 1].emplace(std::move(b));
  }
  std::vector<SplitNode> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------- tree expansion

namespace {

void check_leaf_budget(std::size_t steps, std::size_t leaf_cap) {
  if (steps >= 63 || (std::size_t{1} << steps) > leaf_cap) {
    throw BudgetError("splitting " + std::to_string(steps) + " times would create 2^" + std::to_string(steps) +
                      " leaves, above the cap of " + std::to_string(leaf_cap));
  }
}

double max_norm(const std::vector<SplitNode>& level) {
  double m = 0.0;
  for (const auto& n : level) m = std::max(m, n.dep_norm());
  return m;
}

}  // namespace

std::vector<SplitNode> expand_tree(const PolyZonotope& pz, std::size_t steps, const SplitStrategy& strategy,
                                   std::size_t leaf_cap) {
  check_leaf_budget(steps, leaf_cap);
  std::vector<SplitNode> level{SplitNode::root(pz)};
  for (std::size_t s = 0; s < steps; ++s) level = expand_level(level, strategy);
  return level;
}

std::vector<double> cyclic_norm_profile(const PolyZonotope& pz, std::size_t steps, std::size_t leaf_cap) {
  check_leaf_budget(steps, leaf_cap);
  std::vector<double> profile{error_bound(pz)};
  if (steps > 0 && pz.num_factors() == 0) throw PreconditionError("cannot split: the set has no dependent factors");
  std::vector<SplitNode> level{SplitNode::root(pz)};
  for (std::size_t s = 0; s < steps; ++s) {
    level = expand_level(level, SplitStrategy::cyclic());
    profile.push_back(max_norm(level));
  }
  return profile;
}

double norm_after_round(const PolyZonotope& pz, std::size_t rounds, std::size_t leaf_cap) {
  if (rounds == 0) return error_bound(pz);
  const std::size_t steps = rounds * static_cast<std::size_t>(pz.num_factors());
  return cyclic_norm_profile(pz, steps, leaf_cap).back();
}

std::vector<double> worst_path_profile(const PolyZonotope& pz, std::size_t steps, const SplitStrategy& strategy) {
  SplitNode node = SplitNode::root(pz);
  std::vector<double> profile{node.dep_norm()};
  for (std::size_t s = 0; s < steps; ++s) {
    auto [a, b] = split_once(node, strategy);
    node = b.dep_norm() > a.dep_norm() ? std::move(b) : std::move(a);
    profile.push_back(node.dep_norm());
  }
  return profile;
}

}  // namespace pzono
