#include "pzono/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "pzono/errors.hpp"
#include "pzono/overapprox.hpp"

namespace pzono {

namespace {

double cross(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

VertexLoop zonotope_to_polygon(const Zonotope& z) {
  if (z.dim() != 2) {
    throw RepresentationError("zonotope_to_polygon: expected a 2-D zonotope, got dimension " + std::to_string(z.dim()));
  }
  const Point2 c = z.center();
  const double scale = z.num_generators() == 0 ? 1.0 : z.generators().cwiseAbs().maxCoeff();

  std::vector<Point2> gens;
  for (Index j = 0; j < z.num_generators(); ++j) {
    Point2 g = z.generators().col(j);
    if (g.norm() <= 1e-15 * scale) continue;
    if (g.y() < 0.0 || (g.y() == 0.0 && g.x() < 0.0)) g = -g;
    gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end(),
            [](const Point2& a, const Point2& b) { return std::atan2(a.y(), a.x()) < std::atan2(b.y(), b.x()); });

  std::vector<Point2> merged;
  for (const auto& g : gens) {
    if (!merged.empty() && std::abs(cross(merged.back(), g)) <= 1e-12 * merged.back().norm() * g.norm()) {
      merged.back() += g;
    } else {
      merged.push_back(g);
    }
  }
  if (merged.empty()) return {c};
  Point2 sum = Point2::Zero();
  for (const auto& g : merged) sum += g;
  if (merged.size() == 1) return {c - sum, c + sum};

  VertexLoop loop;
  loop.reserve(2 * merged.size());
  Point2 v = c - sum;
  for (const auto& g : merged) {
    loop.push_back(v);
    v += 2.0 * g;
  }
  for (const auto& g : merged) {
    loop.push_back(v);
    v -= 2.0 * g;
  }
  return loop;
}

double polygon_area(const VertexLoop& loop) {
  if (loop.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) twice += cross(loop[i], loop[(i + 1) % loop.size()]);
  return 0.5 * twice;
}

bool polygon_contains(const VertexLoop& loop, const Point2& p, double tol) {
  if (loop.empty()) return false;
  if (loop.size() == 1) return (p - loop[0]).norm() <= tol;
  if (loop.size() == 2) return distance_to_segment(p, loop[0], loop[1]) <= tol;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2& a = loop[i];
    const Point2& b = loop[(i + 1) % loop.size()];
    const Point2 edge = b - a;
    const double len = edge.norm();
    // Signed distance of p to the left of edge a->b; CCW loops keep the inside on the left.
    if (len > 0.0 && cross(edge, p - a) / len < -tol) return false;
  }
  return true;
}

std::vector<Vector> sample_members(const PolyZonotope& pz, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Vector alpha(pz.num_factors());
    Vector beta(pz.num_indep());
    for (Index k = 0; k < alpha.size(); ++k) alpha(k) = unit(rng);
    for (Index j = 0; j < beta.size(); ++j) beta(j) = unit(rng);
    out.push_back(evaluate(pz, alpha, beta));
  }
  return out;
}

PlotArtifact build_plot(const PolyZonotope& pz, const PlotOptions& options) {
  for (Index d : options.dims) {
    if (d < 0 || d >= pz.dim()) throw IndexError("plot: projection index " + std::to_string(d) + " out of range");
  }
  const std::size_t steps = options.rounds * static_cast<std::size_t>(pz.num_factors());
  const auto leaves = expand_tree(pz, steps, options.strategy, options.leaf_cap);

  PlotArtifact plot;
  plot.depth = options.rounds;
  plot.leaf_count = leaves.size();
  plot.initial_dep_norm = error_bound(pz);

  auto to_2d = [&](const Vector& x) { return Point2(x(options.dims[0]), x(options.dims[1])); };

  plot.polygons.reserve(leaves.size());
  for (const auto& leaf : leaves) {
    plot.max_residual = std::max(plot.max_residual, leaf.dep_norm());
    const Zonotope z = overapproximate(leaf.set());
    Matrix g(2, z.num_generators());
    g.row(0) = z.generators().row(options.dims[0]);
    g.row(1) = z.generators().row(options.dims[1]);
    plot.polygons.push_back(zonotope_to_polygon(Zonotope(to_2d(z.center()), std::move(g))));
  }
  for (const auto& x : sample_members(pz, options.samples, options.seed)) plot.samples.push_back(to_2d(x));
  return plot;
}

std::string render_svg(const PlotArtifact& plot) {
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  auto grow = [&](const Point2& p) {
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  };
  for (const auto& loop : plot.polygons) std::for_each(loop.begin(), loop.end(), grow);
  std::for_each(plot.samples.begin(), plot.samples.end(), grow);
  if (!std::isfinite(xmin)) xmin = ymin = -1.0, xmax = ymax = 1.0;
  const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-9});
  xmin -= pad, xmax += pad, ymin -= pad, ymax += pad;

  // Vertices are written in data coordinates; the viewBox and a y flip place them.
  const double width = 800.0;
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double dot = 0.004 * span;
  auto xy = [](const Point2& p) { return fmt(p.x()) + "," + fmt(p.y()); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width * (xmax - xmin) / span) << "\" height=\""
     << fmt(width * (ymax - ymin) / span) << "\" viewBox=\"" << fmt(xmin) << ' ' << fmt(-ymax) << ' '
     << fmt(xmax - xmin) << ' ' << fmt(ymax - ymin) << "\">\n";
  os << "<rect x=\"" << fmt(xmin) << "\" y=\"" << fmt(-ymax) << "\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g transform=\"scale(1,-1)\">\n";
  for (const auto& loop : plot.polygons) {
    os << (loop.size() >= 3 ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < loop.size(); ++i) os << (i ? " " : "") << xy(loop[i]);
    os << "\" fill=\"" << (loop.size() >= 3 ? "#c8c8c8" : "none")
       << "\" fill-opacity=\"0.6\" stroke=\"#808080\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  for (const auto& p : plot.samples) {
    os << "<circle cx=\"" << fmt(p.x()) << "\" cy=\"" << fmt(p.y()) << "\" r=\"" << fmt(dot) << "\" fill=\"black\"/>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_csv(const PlotArtifact& plot) {
  std::ostringstream os;
  os << "kind,leaf_id,x,y\n";
  for (std::size_t leaf = 0; leaf < plot.polygons.size(); ++leaf) {
    for (const auto& v : plot.polygons[leaf]) os << "vertex," << leaf << ',' << fmt(v.x()) << ',' << fmt(v.y()) << '\n';
  }
  for (const auto& p : plot.samples) os << "sample,-1," << fmt(p.x()) << ',' << fmt(p.y()) << '\n';
  return os.str();
}

}  // namespace pzono
