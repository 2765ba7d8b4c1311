#include <doctest.h>

#include <random>

#include <omp.h>

#include "fixtures.hpp"
#include "pzono/hardness.hpp"
#include "pzono/oracles.hpp"
#include "pzono/serial.hpp"
#include "pzono/splitting.hpp"

using namespace pzono;

namespace {

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  Threads threads(4);
  std::mt19937_64 rng(81);

  for (int trial = 0; trial < 20; ++trial) {
    const auto pz = fixtures::random_set(rng, {1, 14, 30, 1, 2, true});
    const auto a = corner_min(pz);
    const auto b = serial::corner_min(pz);
    CHECK(a.min == b.min);
    CHECK(a.argmin == b.argmin);
  }
  // Many equal corners exercise the tie rule.
  const auto flat = fixtures::line(0, {1}, {{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}});
  CHECK(corner_min(flat).argmin == serial::corner_min(flat).argmin);

  for (int trial = 0; trial < 10; ++trial) {
    const auto pz = fixtures::random_set(rng, {1, 4, 6, 3, 1, false});
    const auto a = grid_search(pz, 31);
    const auto b = serial::grid_search(pz, 31);
    CHECK(a.min == b.min);
    CHECK(a.max == b.max);
    CHECK(a.argmin == b.argmin);
    CHECK(a.slack == b.slack);
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = Graph::random(14, 0.5, seed);
    CHECK(bipartization_brute(g) == serial::bipartization_brute(g));
  }

  const auto pz = fixtures::random_set(rng, {2, 3, 5, 3, 1, false});
  std::vector<SplitNode> level{SplitNode::root(pz)};
  for (int s = 0; s < 6; ++s) {
    const auto a = expand_level(level, SplitStrategy::cyclic());
    const auto b = serial::expand_level(level, SplitStrategy::cyclic());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].dep_norm() == b[i].dep_norm());
      CHECK(a[i].sign_path() == b[i].sign_path());
      CHECK(a[i].set().dep_generators() == b[i].set().dep_generators());
      CHECK(a[i].set().center() == b[i].set().center());
    }
    level = a;
  }
}
