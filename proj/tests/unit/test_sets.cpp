#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "pzono/errors.hpp"
#include "pzono/sets.hpp"

using namespace pzono;
using fixtures::cols;
using fixtures::exps;
using fixtures::vec;

TEST_CASE("canonicalize merges like terms") {
  const auto pz = canonicalize({vec({0}), Matrix(1, 0), cols(1, {{1}, {1}}), exps(1, {{2}, {2}}), {}});
  REQUIRE(pz.num_terms() == 1);
  CHECK(pz.dep_generators()(0, 0) == 2.0);
  CHECK(pz.exponents()(0, 0) == 2u);
}

TEST_CASE("canonicalize folds constant columns into the center") {
  const auto pz = canonicalize({vec({1, 1}), Matrix(2, 0), cols(2, {{3, -1}, {1, 0}}), exps(1, {{0}, {1}}), {}});
  REQUIRE(pz.num_terms() == 1);
  CHECK(pz.center()(0) == 4.0);
  CHECK(pz.center()(1) == 0.0);
  CHECK(pz.dep_generators()(0, 0) == 1.0);
}

TEST_CASE("canonicalize leaves the worked example unchanged") {
  const auto pz = fixtures::example1();
  CHECK(pz.num_indep() == 1);
  CHECK(pz.num_factors() == 2);
  CHECK(pz.num_terms() == 3);
  CHECK(pz.dep_generators() == cols(2, {{2, 0}, {1, 2}, {2, 2}}));
  CHECK(pz.exponents().cast<std::int64_t>() == exps(2, {{1, 0}, {0, 1}, {3, 1}}));
  CHECK(pz.factor_ids() == std::vector<FactorId>{0, 1});
}

TEST_CASE("canonicalize drops unused factors and cancelled terms but keeps ids") {
  const auto pz = canonicalize(
      {vec({0}), Matrix(1, 0), cols(1, {{1}, {-1}, {2}}), exps(3, {{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}), {7, 8, 9}});
  REQUIRE(pz.num_terms() == 1);
  CHECK(pz.factor_ids() == std::vector<FactorId>{9});
  CHECK(pz.factor_row(9) == 0);
  CHECK_FALSE(pz.factor_row(8).has_value());
}

TEST_CASE("canonicalize rejects malformed input") {
  CHECK_THROWS_AS(canonicalize({vec({0}), cols(2, {{1, 0}}), Matrix(1, 0), RawExponentMatrix(0, 0), {}}),
                  RepresentationError);
  CHECK_THROWS_AS(canonicalize({vec({0}), Matrix(1, 0), cols(1, {{1}}), exps(1, {{-1}}), {}}), RepresentationError);
  CHECK_THROWS_AS(canonicalize({vec({0}), Matrix(1, 0), cols(1, {{1}, {1}}), exps(1, {{1}}), {}}),
                  RepresentationError);
  CHECK_THROWS_AS(canonicalize({vec({std::nan("")}), Matrix(1, 0), Matrix(1, 0), RawExponentMatrix(0, 0), {}}),
                  RepresentationError);
  CHECK_THROWS_AS(canonicalize({vec({0}), Matrix(1, 0), cols(1, {{1}, {1}}), exps(2, {{1, 0}, {0, 1}}), {3, 3}}),
                  RepresentationError);
}

TEST_CASE("evaluate") {
  const auto pz = fixtures::example1();
  const Vector x = evaluate(pz, vec({1, 1}), vec({1}));
  CHECK(x(0) == 10.0);
  CHECK(x(1) == 8.0);
  CHECK(evaluate(pz, vec({0, 0}), vec({0})) == pz.center());
  CHECK(evaluate(fixtures::square(), vec({-1}), Vector(0))(0) == 1.0);
  CHECK_THROWS_AS(evaluate(pz, vec({1.5, 0}), vec({0})), DomainError);
  CHECK_THROWS_AS(evaluate(pz, vec({0}), vec({0})), RepresentationError);
}

TEST_CASE("minkowski_decompose") {
  const auto [zi, dep] = minkowski_decompose(fixtures::example1());
  CHECK(zi.center() == vec({4, 4}));
  CHECK(zi.generators() == cols(2, {{1, 0}}));
  CHECK(dep.center().isZero());
  CHECK(dep.dep_generators() == cols(2, {{2, 0}, {1, 2}, {2, 2}}));
  CHECK(dep.num_indep() == 0);

  const auto no_dep = canonicalize({vec({1}), cols(1, {{2}}), Matrix(1, 0), RawExponentMatrix(0, 0), {}});
  const auto [z2, d2] = minkowski_decompose(no_dep);
  CHECK(z2.num_generators() == 1);
  CHECK(d2.num_terms() == 0);
}

TEST_CASE("zonotope_support_min") {
  CHECK(zonotope_support_min(Zonotope(vec({4, 4}), cols(2, {{1, 0}})), vec({1, 1})) == 7.0);
  CHECK(zonotope_support_min(Zonotope(vec({1, 2})), vec({3, -1})) == 1.0);
  const Zonotope over(vec({4, 4}), cols(2, {{1, 0}, {2, 0}, {1, 2}, {2, 2}}));
  CHECK(zonotope_support_min(over, vec({1, 1})) == -2.0);
}

TEST_CASE("project and scalar_project") {
  const auto pz = fixtures::example1();
  const auto same = project(pz, {0, 1});
  CHECK(same.center() == pz.center());
  CHECK(same.dep_generators() == pz.dep_generators());

  const auto dup = project(pz, {0, 0});
  CHECK(dup.dim() == 2);
  CHECK(dup.dep_generators().row(0) == dup.dep_generators().row(1));
  CHECK_THROWS_AS(project(pz, {0, 2}), IndexError);

  const auto line = scalar_project(pz, vec({1, 1}));
  CHECK(line.center()(0) == 8.0);
  CHECK(line.indep_generators() == cols(1, {{1}}));
  CHECK(line.dep_generators() == cols(1, {{2}, {3}, {4}}));

  const auto zero = scalar_project(pz, vec({0, 0}));
  CHECK(zero.num_terms() == 0);
  CHECK(zero.center()(0) == 0.0);

  const auto sq = scalar_project(fixtures::square(), vec({1}));
  CHECK(sq.dep_generators() == fixtures::square().dep_generators());
}

TEST_CASE("property: canonical form preserves pointwise values") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    fixtures::RandomSpec spec{2, 3, 6, 3, 2, false};
    auto raw = fixtures::random_raw(rng, spec);
    // Inject a duplicate column and a constant column.
    raw.dep_generators.conservativeResize(Eigen::NoChange, raw.dep_generators.cols() + 2);
    raw.exponents.conservativeResize(Eigen::NoChange, raw.exponents.cols() + 2);
    const Index h = raw.dep_generators.cols();
    raw.dep_generators.col(h - 2) = raw.dep_generators.col(0) * 0.5;
    raw.exponents.col(h - 2) = raw.exponents.col(0);
    raw.dep_generators.col(h - 1) = fixtures::vec({0.25, -0.75});
    raw.exponents.col(h - 1).setZero();
    const auto pz = canonicalize(raw);
    for (int draw = 0; draw < 20; ++draw) {
      const Vector alpha = fixtures::uniform(rng, 3);
      const Vector beta = fixtures::uniform(rng, 2);
      const Vector expect = fixtures::naive_eval(raw, alpha, beta);
      const Vector got = evaluate_by_id(pz, alpha, beta);
      CHECK((got - expect).norm() <= 1e-12 * (1.0 + expect.norm()));
    }
  }
}

TEST_CASE("property: decomposition, support and projection agree with evaluation") {
  std::mt19937_64 rng(12);
  for (int draw = 0; draw < 1000; ++draw) {
    const auto pz = fixtures::random_set(rng, {2, 3, 4, 3, 2, false});
    const Vector alpha = fixtures::uniform(rng, 3);
    const Vector beta = fixtures::uniform(rng, 2);
    const Vector x = evaluate_by_id(pz, alpha, beta);

    const auto [zi, dep] = minkowski_decompose(pz);
    const Vector re = zi.point(beta) + evaluate_by_id(dep, alpha, Vector(0));
    CHECK((re - x).norm() <= 1e-12 * (1.0 + x.norm()));

    const Vector d = fixtures::uniform(rng, 2);
    const auto line = scalar_project(pz, d);
    const double lx = evaluate_by_id(line, alpha, beta)(0);
    CHECK(std::abs(lx - x.dot(d)) <= 1e-12 * (1.0 + std::abs(lx)));

    const double smin = zonotope_support_min(zi, d);
    CHECK(smin <= zi.point(beta).dot(d) + 1e-12);
    CHECK(std::abs(zi.point(support_minimizer(zi.generators(), d)).dot(d) - smin) <= 1e-12);
  }
}

TEST_CASE("halfspace validation") {
  CHECK_THROWS_AS(Halfspace(vec({0, 0}), 1.0), RepresentationError);
  const Halfspace h(vec({1, 1}), 0.0);
  CHECK(h.contains(vec({-1, 1})));
  CHECK_FALSE(h.contains(vec({1, 0.5})));
}
