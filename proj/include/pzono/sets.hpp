#pragma once

/**
 * @file sets.hpp
 * @brief Zonotopes, sparse polynomial zonotopes and halfspaces.
 *
 * A polynomial zonotope is the set
 *
 *   { c + sum_i (prod_k alpha_k^E(k,i)) G_D(:,i) + sum_j beta_j G_I(:,j) | alpha, beta in [-1,1] }
 *
 * Rows of the exponent matrix are dependent factors, columns are terms. Every
 * PolyZonotope value is in canonical form (see canonicalize()); the only way
 * to build one is through canonicalize().
 */

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace pzono {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;
using ExponentMatrix = Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>;
using RawExponentMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Stable identifier of a dependent factor. Survives canonicalization, which
/// may drop unused factor rows.
using FactorId = std::uint32_t;

/// Generator columns whose one-norm falls below this after merging are dropped.
inline constexpr double kDustThreshold = 1e-14;

/**
 * @brief Zonotope <c, G>: the affine image of a unit box.
 */
class Zonotope {
 public:
  explicit Zonotope(Vector center);
  Zonotope(Vector center, Matrix generators);

  const Vector& center() const { return center_; }
  const Matrix& generators() const { return generators_; }
  Index dim() const { return center_.size(); }
  Index num_generators() const { return generators_.cols(); }

  /// c + G * factors; factors must lie in [-1, 1].
  Vector point(const Vector& factors) const;

 private:
  Vector center_;
  Matrix generators_;
};

/// H = { x | x^T normal <= offset }.
class Halfspace {
 public:
  Halfspace(Vector normal, double offset);

  const Vector& normal() const { return normal_; }
  double offset() const { return offset_; }
  Index dim() const { return normal_.size(); }
  bool contains(const Vector& x) const;

 private:
  Vector normal_;
  double offset_;
};

/// Unvalidated polynomial zonotope data, the input to canonicalize().
struct RawPolyZonotope {
  Vector center;
  Matrix indep_generators;     ///< n x q
  Matrix dep_generators;       ///< n x h
  RawExponentMatrix exponents; ///< r x h
  /// One id per exponent row. Empty means 0, 1, ..., r-1.
  std::vector<FactorId> factor_ids;
};

class PolyZonotope;

/**
 * @brief Validate and bring a polynomial zonotope into canonical form.
 *
 * Canonical form: no all-zero exponent column (folded into the center), no
 * duplicate exponent columns (generators summed), no dependent generator with
 * one-norm below kDustThreshold, and no all-zero exponent row (the factor is
 * dropped, its id goes with it). Independent generators are kept as given.
 *
 * Throws RepresentationError on inconsistent shapes, non-finite entries,
 * negative or oversized exponents, or duplicate factor ids.
 */
PolyZonotope canonicalize(const RawPolyZonotope& raw);

class PolyZonotope {
 public:
  Index dim() const { return center_.size(); }
  Index num_factors() const { return exponents_.rows(); }       ///< r
  Index num_indep() const { return indep_generators_.cols(); }  ///< q
  Index num_terms() const { return dep_generators_.cols(); }    ///< h

  const Vector& center() const { return center_; }
  const Matrix& indep_generators() const { return indep_generators_; }
  const Matrix& dep_generators() const { return dep_generators_; }
  const ExponentMatrix& exponents() const { return exponents_; }
  const std::vector<FactorId>& factor_ids() const { return factor_ids_; }

  /// Row of the exponent matrix holding factor `id`, if the factor is still used.
  std::optional<Index> factor_row(FactorId id) const;

  RawPolyZonotope to_raw() const;

 private:
  PolyZonotope() = default;
  friend PolyZonotope canonicalize(const RawPolyZonotope& raw);

  Vector center_;
  Matrix indep_generators_;
  Matrix dep_generators_;
  ExponentMatrix exponents_;
  std::vector<FactorId> factor_ids_;
};

/// Point of the set for factors alpha (length r, row order) and beta (length q).
/// Throws DomainError when a factor leaves [-1, 1].
Vector evaluate(const PolyZonotope& pz, const Vector& alpha, const Vector& beta);

/// Like evaluate(), but alpha is indexed by factor id (alpha_by_id[factor_ids()[k]]).
/// Lets callers evaluate sets that share factors but dropped different rows.
Vector evaluate_by_id(const PolyZonotope& pz, const Vector& alpha_by_id, const Vector& beta);

/// Splits pz into Z_I = <c, G_I> and the dependent part <G_D, E> with zero center.
std::pair<Zonotope, PolyZonotope> minkowski_decompose(const PolyZonotope& pz);

/// min over x in z of x^T d = c^T d - sum_j |G(:,j)^T d|.
double zonotope_support_min(const Zonotope& z, const Vector& d);

/// The generator choice attaining zonotope_support_min: -sign(G(:,j)^T d), 0 on ties.
Vector support_minimizer(const Matrix& generators, const Vector& d);

/// Keep rows dims[0], dims[1] (duplicates allowed). Result is re-canonicalized.
PolyZonotope project(const PolyZonotope& pz, std::array<Index, 2> dims);

/// The 1-D set { x^T d | x in pz }; factor ids are preserved.
PolyZonotope scalar_project(const PolyZonotope& pz, const Vector& d);

}  // namespace pzono
