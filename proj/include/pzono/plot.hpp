#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pzono/sets.hpp"
#include "pzono/splitting.hpp"

namespace pzono {

using Point2 = Eigen::Vector2d;
using VertexLoop = std::vector<Point2>;

/**
 * @brief Vertices of a 2-D zonotope, counterclockwise.
 *
 * Parallel generators are merged and zero generators dropped first, so the
 * loop has 2p' vertices for p' distinct directions. One direction gives a
 * 2-point segment, none gives the single center point.
 */
VertexLoop zonotope_to_polygon(const Zonotope& z);

/// Shoelace area; 0 for segments and points.
double polygon_area(const VertexLoop& loop);

/// Point-in-convex-loop test with tolerance; segments and points use distance.
bool polygon_contains(const VertexLoop& loop, const Point2& p, double tol = 1e-9);

/// `count` member points at seeded uniform factor draws.
std::vector<Vector> sample_members(const PolyZonotope& pz, std::size_t count, std::uint64_t seed);

struct PlotOptions {
  std::array<Index, 2> dims{0, 1};
  std::size_t rounds = 0;
  SplitStrategy strategy = SplitStrategy::cyclic();
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::size_t leaf_cap = kDefaultLeafCap;
};

struct PlotArtifact {
  std::vector<VertexLoop> polygons;  ///< one per leaf overapproximation
  std::vector<Point2> samples;
  std::size_t depth = 0;             ///< split rounds
  std::size_t leaf_count = 0;
  double initial_dep_norm = 0.0;
  double max_residual = 0.0;         ///< max leaf dep_norm
};

/// Split rounds * r times, overapproximate every leaf and project it onto dims.
PlotArtifact build_plot(const PolyZonotope& pz, const PlotOptions& options);

/// Gray polygons and black sample dots in a flat SVG.
std::string render_svg(const PlotArtifact& plot);

/// `kind,leaf_id,x,y` rows; samples use leaf_id -1.
std::string render_csv(const PlotArtifact& plot);

}  // namespace pzono
