#pragma once

// Shared test sets, random generators and brute-force evaluators. The naive
// evaluator works on raw (non-canonical) data with std::pow and never touches
// canonicalize(), so it stays independent of the library's evaluation path.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pzono/sets.hpp"

namespace fixtures {

using pzono::Index;
using pzono::Matrix;
using pzono::PolyZonotope;
using pzono::RawExponentMatrix;
using pzono::RawPolyZonotope;
using pzono::Vector;

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

/// Columns given as a list of column vectors.
inline Matrix cols(Index rows, std::initializer_list<std::initializer_list<double>> columns) {
  Matrix m(rows, static_cast<Index>(columns.size()));
  Index c = 0;
  for (const auto& col : columns) {
    Index r = 0;
    for (double x : col) m(r++, c) = x;
    ++c;
  }
  return m;
}

inline RawExponentMatrix exps(Index rows, std::initializer_list<std::initializer_list<std::int64_t>> columns) {
  RawExponentMatrix m(rows, static_cast<Index>(columns.size()));
  Index c = 0;
  for (const auto& col : columns) {
    Index r = 0;
    for (auto x : col) m(r++, c) = x;
    ++c;
  }
  return m;
}

/// The worked example: c = (4,4), G_I = (1,0), terms a1 (2,0), a2 (1,2), a1^3 a2 (2,2).
inline RawPolyZonotope example1_raw() {
  return {vec({4, 4}), cols(2, {{1, 0}}), cols(2, {{2, 0}, {1, 2}, {2, 2}}), exps(2, {{1, 0}, {0, 1}, {3, 1}}), {}};
}
inline PolyZonotope example1() { return pzono::canonicalize(example1_raw()); }

/// Dependent part of example1 only.
inline PolyZonotope example1_dep() {
  return pzono::canonicalize({vec({0, 0}), Matrix(2, 0), cols(2, {{2, 0}, {1, 2}, {2, 2}}),
                              exps(2, {{1, 0}, {0, 1}, {3, 1}}), {}});
}

/// { a^2 }.
inline PolyZonotope square() { return pzono::canonicalize({vec({0}), Matrix(1, 0), cols(1, {{1}}), exps(1, {{2}}), {}}); }

/// 1-D set from (coefficient, exponent column) pairs.
inline PolyZonotope line(double c, std::vector<double> g, std::vector<std::vector<std::int64_t>> e,
                         std::vector<double> gi = {}) {
  const auto h = static_cast<Index>(g.size());
  const Index r = e.empty() ? 0 : static_cast<Index>(e[0].size());
  RawPolyZonotope raw;
  raw.center = vec({c});
  raw.indep_generators = Matrix(1, static_cast<Index>(gi.size()));
  for (std::size_t j = 0; j < gi.size(); ++j) raw.indep_generators(0, static_cast<Index>(j)) = gi[j];
  raw.dep_generators = Matrix(1, h);
  raw.exponents = RawExponentMatrix(r, h);
  for (Index i = 0; i < h; ++i) {
    raw.dep_generators(0, i) = g[static_cast<std::size_t>(i)];
    for (Index k = 0; k < r; ++k) raw.exponents(k, i) = e[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }
  return pzono::canonicalize(raw);
}

struct RandomSpec {
  Index dim = 2;
  Index factors = 3;
  Index terms = 5;
  std::int64_t max_degree = 3;
  Index indep = 1;
  bool multi_affine = false;
};

/// Random raw set; every exponent column is nonzero. May still contain duplicate columns.
inline RawPolyZonotope random_raw(std::mt19937_64& rng, const RandomSpec& s) {
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<std::int64_t> deg(0, s.multi_affine ? 1 : s.max_degree);
  std::uniform_int_distribution<Index> pick(0, s.factors - 1);
  RawPolyZonotope raw;
  raw.center = Vector(s.dim);
  for (Index i = 0; i < s.dim; ++i) raw.center(i) = coef(rng);
  raw.indep_generators = Matrix(s.dim, s.indep);
  for (Index j = 0; j < s.indep; ++j)
    for (Index i = 0; i < s.dim; ++i) raw.indep_generators(i, j) = coef(rng);
  raw.dep_generators = Matrix(s.dim, s.terms);
  raw.exponents = RawExponentMatrix(s.factors, s.terms);
  for (Index t = 0; t < s.terms; ++t) {
    for (Index i = 0; i < s.dim; ++i) raw.dep_generators(i, t) = coef(rng);
    bool any = false;
    for (Index k = 0; k < s.factors; ++k) {
      raw.exponents(k, t) = deg(rng);
      any = any || raw.exponents(k, t) != 0;
    }
    if (!any) raw.exponents(pick(rng), t) = 1;
  }
  return raw;
}

inline PolyZonotope random_set(std::mt19937_64& rng, const RandomSpec& s) {
  return pzono::canonicalize(random_raw(rng, s));
}

/// Direct evaluation of raw data; alpha has one entry per raw exponent row.
inline Vector naive_eval(const RawPolyZonotope& raw, const Vector& alpha, const Vector& beta) {
  Vector x = raw.center;
  if (raw.indep_generators.cols() > 0) x += raw.indep_generators * beta;
  for (Index i = 0; i < raw.dep_generators.cols(); ++i) {
    double m = 1.0;
    for (Index k = 0; k < raw.exponents.rows(); ++k) m *= std::pow(alpha(k), static_cast<double>(raw.exponents(k, i)));
    x += m * raw.dep_generators.col(i);
  }
  return x;
}

inline Vector uniform(std::mt19937_64& rng, Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

/// alpha indexed by factor id for a set whose ids are a subset of 0..max_id.
inline Vector by_id(const PolyZonotope& pz, const Vector& local, Index id_space) {
  Vector out = Vector::Zero(id_space);
  for (std::size_t k = 0; k < pz.factor_ids().size(); ++k) out(pz.factor_ids()[k]) = local(static_cast<Index>(k));
  return out;
}

}  // namespace fixtures
