#include "pzono/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "pzono/errors.hpp"

namespace pzono {

namespace {

bool all_finite(const Matrix& m) { return m.allFinite(); }

std::string shape(Index rows, Index cols) {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

// Normalise an n x 0 matrix that may have been default-constructed as 0 x 0.
Matrix with_rows(const Matrix& m, Index n, const char* name) {
  if (m.cols() == 0) return Matrix(n, 0);
  if (m.rows() != n) {
    throw RepresentationError(std::string(name) + ": expected " + std::to_string(n) +
                              " rows, got " + shape(m.rows(), m.cols()));
  }
  return m;
}

void check_factor(double v, const char* what, Index k) {
  if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
    std::ostringstream os;
    os << what << "[" << k << "] = " << v << " is outside [-1, 1]";
    throw DomainError(os.str());
  }
}

double monomial(const ExponentMatrix& e, Index col, const auto& factor_of_row) {
  double m = 1.0;
  for (Index k = 0; k < e.rows(); ++k) {
    for (std::uint32_t p = 0; p < e(k, col); ++p) m *= factor_of_row(k);
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------- Zonotope

Zonotope::Zonotope(Vector center) : Zonotope(center, Matrix(center.size(), 0)) {}

Zonotope::Zonotope(Vector center, Matrix generators)
    : center_(std::move(center)), generators_(with_rows(generators, center_.size(), "generators")) {
  if (!center_.allFinite() || !all_finite(generators_)) {
    throw RepresentationError("zonotope entries must be finite");
  }
}

Vector Zonotope::point(const Vector& factors) const {
  if (factors.size() != generators_.cols()) {
    throw RepresentationError("zonotope point: expected " + std::to_string(generators_.cols()) +
                              " factors, got " + std::to_string(factors.size()));
  }
  for (Index j = 0; j < factors.size(); ++j) check_factor(factors(j), "beta", j);
  return center_ + generators_ * factors;
}

// ---------------------------------------------------------------- Halfspace

Halfspace::Halfspace(Vector normal, double offset) : normal_(std::move(normal)), offset_(offset) {
  if (normal_.size() == 0 || !normal_.allFinite() || !std::isfinite(offset_)) {
    throw RepresentationError("halfspace normal and offset must be finite and non-empty");
  }
  if (normal_.isZero(0.0)) throw RepresentationError("halfspace normal must not be the zero vector");
}

bool Halfspace::contains(const Vector& x) const { return x.dot(normal_) <= offset_; }

// ---------------------------------------------------------------- canonicalize

PolyZonotope canonicalize(const RawPolyZonotope& raw) {
  const Index n = raw.center.size();
  Matrix indep = with_rows(raw.indep_generators, n, "indep_generators");
  Matrix dep = with_rows(raw.dep_generators, n, "dep_generators");
  const RawExponentMatrix& e_in = raw.exponents;
  const Index h_in = dep.cols();

  if (e_in.cols() != h_in) {
    throw RepresentationError("exponents: " + std::to_string(e_in.cols()) +
                              " columns but dep_generators has " + std::to_string(h_in));
  }
  const Index r_in = h_in == 0 ? (raw.factor_ids.empty() ? 0 : static_cast<Index>(raw.factor_ids.size()))
                               : e_in.rows();
  if (!raw.factor_ids.empty() && static_cast<Index>(raw.factor_ids.size()) != r_in) {
    throw RepresentationError("factor_ids: expected " + std::to_string(r_in) + " ids, got " +
                              std::to_string(raw.factor_ids.size()));
  }
  if (!raw.center.allFinite() || !all_finite(indep) || !all_finite(dep)) {
    throw RepresentationError("set entries must be finite");
  }
  for (Index i = 0; i < e_in.cols(); ++i) {
    for (Index k = 0; k < e_in.rows(); ++k) {
      const auto v = e_in(k, i);
      if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
        throw RepresentationError("exponents[" + std::to_string(i) + "][" + std::to_string(k) +
                                  "] = " + std::to_string(v) + " is not a valid exponent");
      }
    }
  }

  std::vector<FactorId> ids = raw.factor_ids;
  if (ids.empty()) {
    ids.resize(static_cast<std::size_t>(r_in));
    for (Index k = 0; k < r_in; ++k) ids[static_cast<std::size_t>(k)] = static_cast<FactorId>(k);
  } else {
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw RepresentationError("factor_ids must be unique");
    }
  }

  Vector center = raw.center;

  // Merge like terms keyed on the exact exponent column; keep first-seen order.
  std::map<std::vector<std::uint32_t>, std::size_t> slot_of;
  std::vector<std::vector<std::uint32_t>> columns;
  std::vector<Vector> gens;
  for (Index i = 0; i < h_in; ++i) {
    std::vector<std::uint32_t> col(static_cast<std::size_t>(r_in));
    bool constant = true;
    for (Index k = 0; k < r_in; ++k) {
      col[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(e_in(k, i));
      constant = constant && e_in(k, i) == 0;
    }
    if (constant) {
      center += dep.col(i);
      continue;
    }
    auto [it, inserted] = slot_of.try_emplace(col, columns.size());
    if (inserted) {
      columns.push_back(std::move(col));
      gens.emplace_back(dep.col(i));
    } else {
      gens[it->second] += dep.col(i);
    }
  }

  std::vector<std::size_t> keep;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (gens[t].lpNorm<1>() >= kDustThreshold) keep.push_back(t);
  }

  std::vector<Index> used_rows;
  for (Index k = 0; k < r_in; ++k) {
    const bool used = std::any_of(keep.begin(), keep.end(),
                                  [&](std::size_t t) { return columns[t][static_cast<std::size_t>(k)] != 0; });
    if (used) used_rows.push_back(k);
  }

  PolyZonotope pz;
  pz.center_ = std::move(center);
  pz.indep_generators_ = std::move(indep);
  pz.dep_generators_.resize(n, static_cast<Index>(keep.size()));
  pz.exponents_.resize(static_cast<Index>(used_rows.size()), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    pz.dep_generators_.col(static_cast<Index>(c)) = gens[keep[c]];
    for (std::size_t k = 0; k < used_rows.size(); ++k) {
      pz.exponents_(static_cast<Index>(k), static_cast<Index>(c)) =
          columns[keep[c]][static_cast<std::size_t>(used_rows[k])];
    }
  }
  pz.factor_ids_.reserve(used_rows.size());
  for (Index k : used_rows) pz.factor_ids_.push_back(ids[static_cast<std::size_t>(k)]);
  return pz;
}

std::optional<Index> PolyZonotope::factor_row(FactorId id) const {
  auto it = std::find(factor_ids_.begin(), factor_ids_.end(), id);
  if (it == factor_ids_.end()) return std::nullopt;
  return static_cast<Index>(it - factor_ids_.begin());
}

RawPolyZonotope PolyZonotope::to_raw() const {
  return RawPolyZonotope{center_, indep_generators_, dep_generators_, exponents_.cast<std::int64_t>(),
                         factor_ids_};
}

// ---------------------------------------------------------------- evaluation

namespace {

Vector evaluate_impl(const PolyZonotope& pz, const auto& factor_of_row, const Vector& beta) {
  if (beta.size() != pz.num_indep()) {
    throw RepresentationError("evaluate: expected " + std::to_string(pz.num_indep()) +
                              " independent factors, got " + std::to_string(beta.size()));
  }
  for (Index j = 0; j < beta.size(); ++j) check_factor(beta(j), "beta", j);

  Vector x = pz.center() + pz.indep_generators() * beta;
  for (Index i = 0; i < pz.num_terms(); ++i) {
    x += monomial(pz.exponents(), i, factor_of_row) * pz.dep_generators().col(i);
  }
  return x;
}

}  // namespace

Vector evaluate(const PolyZonotope& pz, const Vector& alpha, const Vector& beta) {
  if (alpha.size() != pz.num_factors()) {
    throw RepresentationError("evaluate: expected " + std::to_string(pz.num_factors()) +
                              " dependent factors, got " + std::to_string(alpha.size()));
  }
  for (Index k = 0; k < alpha.size(); ++k) check_factor(alpha(k), "alpha", k);
  return evaluate_impl(pz, [&](Index k) { return alpha(k); }, beta);
}

Vector evaluate_by_id(const PolyZonotope& pz, const Vector& alpha_by_id, const Vector& beta) {
  const auto& ids = pz.factor_ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (static_cast<Index>(ids[k]) >= alpha_by_id.size()) {
      throw RepresentationError("evaluate_by_id: no value for factor id " + std::to_string(ids[k]));
    }
    check_factor(alpha_by_id(ids[k]), "alpha_by_id", ids[k]);
  }
  return evaluate_impl(pz, [&](Index k) { return alpha_by_id(ids[static_cast<std::size_t>(k)]); }, beta);
}

// ---------------------------------------------------------------- decomposition & projections

std::pair<Zonotope, PolyZonotope> minkowski_decompose(const PolyZonotope& pz) {
  Zonotope indep(pz.center(), pz.indep_generators());
  RawPolyZonotope dep{Vector::Zero(pz.dim()), Matrix(pz.dim(), 0), pz.dep_generators(),
                      pz.exponents().cast<std::int64_t>(), pz.factor_ids()};
  return {std::move(indep), canonicalize(dep)};
}

double zonotope_support_min(const Zonotope& z, const Vector& d) {
  if (d.size() != z.dim()) {
    throw RepresentationError("support direction has length " + std::to_string(d.size()) +
                              ", zonotope dimension is " + std::to_string(z.dim()));
  }
  const Vector proj = z.generators().transpose() * d;
  return z.center().dot(d) - proj.lpNorm<1>();
}

Vector support_minimizer(const Matrix& generators, const Vector& d) {
  const Vector proj = generators.transpose() * d;
  Vector beta(proj.size());
  for (Index j = 0; j < proj.size(); ++j) beta(j) = proj(j) > 0 ? -1.0 : (proj(j) < 0 ? 1.0 : 0.0);
  return beta;
}

PolyZonotope project(const PolyZonotope& pz, std::array<Index, 2> dims) {
  for (Index d : dims) {
    if (d < 0 || d >= pz.dim()) {
      throw IndexError("projection index " + std::to_string(d) + " out of range for dimension " +
                       std::to_string(pz.dim()));
    }
  }
  auto rows = [&](const Matrix& m) {
    Matrix out(2, m.cols());
    out.row(0) = m.row(dims[0]);
    out.row(1) = m.row(dims[1]);
    return out;
  };
  Vector c(2);
  c << pz.center()(dims[0]), pz.center()(dims[1]);
  return canonicalize({c, rows(pz.indep_generators()), rows(pz.dep_generators()),
                       pz.exponents().cast<std::int64_t>(), pz.factor_ids()});
}

PolyZonotope scalar_project(const PolyZonotope& pz, const Vector& d) {
  if (d.size() != pz.dim()) {
    throw RepresentationError("projection direction has length " + std::to_string(d.size()) +
                              ", set dimension is " + std::to_string(pz.dim()));
  }
  Vector c(1);
  c(0) = pz.center().dot(d);
  return canonicalize({c, d.transpose() * pz.indep_generators(), d.transpose() * pz.dep_generators(),
                       pz.exponents().cast<std::int64_t>(), pz.factor_ids()});
}

}  // namespace pzono
