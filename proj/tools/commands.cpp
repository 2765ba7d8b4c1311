#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pzono/pzono.hpp"

namespace pzcli {

using nlohmann::json;
using namespace pzono;

namespace {

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

Vector parse_direction(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw RepresentationError("--direction: not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw RepresentationError("--direction: not a number: '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw RepresentationError("--direction: empty");
  return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

std::array<Index, 2> parse_dims(const std::string& text) {
  const Vector v = parse_direction(text);
  if (v.size() != 2 || v(0) != std::floor(v(0)) || v(1) != std::floor(v(1)) || v(0) < 0 || v(1) < 0) {
    throw RepresentationError("--dims: expected two nonnegative indices like 0,1");
  }
  return {static_cast<Index>(v(0)), static_cast<Index>(v(1))};
}

SplitStrategy parse_strategy(const std::string& name) {
  if (name == "cyclic") return SplitStrategy::cyclic();
  if (name == "maxnorm") return SplitStrategy::max_exponent_norm();
  throw RepresentationError("--strategy: expected cyclic or maxnorm, got '" + name + "'");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- commands

struct CheckArgs {
  std::string set, halfspace, strategy = "cyclic";
  std::size_t max_splits = 4096, samples = 1;
  std::uint64_t seed = 0;
};

int do_check(const CheckArgs& a, std::ostream& out) {
  const auto pz = io::read_polyzonotope(a.set);
  const auto hs = io::read_halfspace(a.halfspace);
  const auto v = check_halfspace(pz, hs, CheckOptions{parse_strategy(a.strategy), a.max_splits, a.samples, a.seed});
  json j;
  j["outcome"] = std::string(to_string(v.outcome));
  if (v.witness_point) {
    j["witness"] = to_std(*v.witness_point);
    j["witness_alpha"] = to_std(v.witness_factors->alpha);
    j["witness_beta"] = to_std(v.witness_factors->beta);
  }
  j["splits_used"] = v.splits_used;
  j["leaves_closed"] = v.leaves_closed;
  j["max_depth"] = v.max_depth;
  j["residual_bound"] = v.residual_bound;
  emit(out, j);
  return v.outcome == Outcome::Exhausted ? kExhausted : kOk;
}

struct PlotArgs {
  std::string set, dims = "0,1", strategy = "cyclic", out_path, csv_path;
  std::size_t depth = 0, samples = 500;
  std::uint64_t seed = 0;
};

int do_plot(const PlotArgs& a, std::ostream& out) {
  const auto pz = io::read_polyzonotope(a.set);
  PlotOptions opts;
  opts.dims = parse_dims(a.dims);
  opts.rounds = a.depth;
  opts.strategy = parse_strategy(a.strategy);
  opts.samples = a.samples;
  opts.seed = a.seed;
  opts.leaf_cap = leaf_cap_from_env();
  const auto plot = build_plot(pz, opts);

  std::filesystem::path svg = a.out_path;
  std::filesystem::path csv = a.csv_path.empty() ? std::filesystem::path(svg).replace_extension(".csv")
                                                 : std::filesystem::path(a.csv_path);
  io::write_file_atomic(svg, render_svg(plot));
  io::write_file_atomic(csv, render_csv(plot));

  emit(out, {{"leaf_count", plot.leaf_count},
             {"depth", plot.depth},
             {"initial_dep_norm", plot.initial_dep_norm},
             {"max_residual", plot.max_residual},
             {"samples", plot.samples.size()},
             {"svg", svg.string()},
             {"csv", csv.string()}});
  return kOk;
}

struct OracleArgs {
  std::string set, direction, method = "grid";
  std::size_t points = 101;
};

int do_oracle(const OracleArgs& a, std::ostream& out) {
  const auto pz = io::read_polyzonotope(a.set);
  const Vector d = parse_direction(a.direction);
  if (d.size() != pz.dim()) {
    throw RepresentationError("--direction: expected " + std::to_string(pz.dim()) + " components, got " +
                              std::to_string(d.size()));
  }
  const auto line = scalar_project(pz, d);
  json j;
  if (a.method == "corners") {
    const auto res = corner_min(line);
    j = {{"min", res.min}, {"argmin", to_std(res.argmin)}, {"method", "corners"}};
  } else if (a.method == "grid") {
    const auto res = grid_search(line, a.points);
    j = {{"min", res.min},       {"argmin", to_std(res.argmin)}, {"method", "grid"},
         {"points", a.points},   {"spacing", res.spacing},       {"slack", res.slack}};
  } else {
    throw RepresentationError("--method: expected corners or grid, got '" + a.method + "'");
  }
  j["argmin_factor_ids"] = line.factor_ids();
  emit(out, j);
  return kOk;
}

int do_info(const std::string& set, std::ostream& out) {
  const auto pz = io::read_polyzonotope(set);
  const auto diag = diagnose(pz);
  json j = {{"dep_norm", diag.dep_norm},
            {"rho", nullptr},
            {"h", pz.num_terms()},
            {"r", pz.num_factors()},
            {"q", pz.num_indep()},
            {"n", pz.dim()},
            {"even_terms", diag.even_index_count},
            {"odd_terms", diag.odd_index_count}};
  if (diag.rho) j["rho"] = *diag.rho;
  emit(out, j);
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> random;
  std::string graph;
  std::size_t count = 1;
};

json bench_row(const Graph& g) {
  const long via = bipartization_via_pz(g);
  const long brute = bipartization_brute(g);
  return {{"n", g.vertex_count()}, {"edges", g.edges().size()}, {"via_pz", via}, {"brute", brute}, {"agree", via == brute}};
}

int do_bench(const BenchArgs& a, std::ostream& out) {
  json rows = json::array();
  if (!a.graph.empty()) {
    auto row = bench_row(io::read_graph(a.graph));
    row["graph"] = a.graph;
    rows.push_back(std::move(row));
  } else {
    if (a.random.size() != 3) throw RepresentationError("--random: expected n p seed");
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    try {
      n = std::stoul(a.random[0]);
      p = std::stod(a.random[1]);
      seed = std::stoull(a.random[2]);
    } catch (const std::exception&) {
      throw RepresentationError("--random: expected integer n, probability p, integer seed");
    }
    for (std::size_t t = 0; t < a.count; ++t) {
      const std::uint64_t s = seed + t;
      auto row = bench_row(Graph::random(n, p, s));
      row["seed"] = s;
      row["p"] = p;
      rows.push_back(std::move(row));
    }
  }
  bool all = true;
  for (const auto& r : rows) all = all && r["agree"].get<bool>();
  emit(out, {{"instances", rows}, {"all_agree", all}});
  return all ? kOk : kExhausted;
}

int do_chebyshev(unsigned max_order, std::ostream& out) {
  json rows = json::array();
  for (unsigned k = 1; k <= max_order; k += 2) {
    const auto pz = chebyshev_pz(k);
    const auto [lo, hi] = interval_hull_1d(pz, 2001);
    const auto z = interval_of(overapproximate(pz));
    rows.push_back({{"k", k},
                    {"coefficients", chebyshev_coefficients(k)},
                    {"error_bound", error_bound(pz)},
                    {"range", {lo, hi}},
                    {"overapproximation", {z.first, z.second}}});
  }
  emit(out, {{"chebyshev", rows}});
  return kOk;
}

int do_prop2(std::ostream& out) {
  const auto r = prop2_counterexample();
  emit(out, {{"parent", {r.parent_lo, r.parent_hi}}, {"children", {r.child_lo, r.child_hi}}, {"hausdorff", r.hausdorff}});
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pz: polynomial zonotope intersection checking, plotting and hardness demos", "pz"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "overapproximate-and-split halfspace intersection check");
  c->add_option("--set", check.set, "set JSON file")->required()->check(CLI::ExistingFile);
  c->add_option("--halfspace", check.halfspace, "halfspace JSON file")->required()->check(CLI::ExistingFile);
  c->add_option("--strategy", check.strategy, "cyclic or maxnorm")->capture_default_str();
  c->add_option("--max-splits", check.max_splits, "split operation budget")->capture_default_str();
  c->add_option("--samples", check.samples, "member samples per node")->capture_default_str()->check(CLI::PositiveNumber);
  c->add_option("--seed", check.seed, "seed for sample draws")->required();

  PlotArgs plot;
  auto* p = app.add_subcommand("plot", "plot leaf overapproximations after cyclic split rounds");
  p->add_option("--set", plot.set, "set JSON file")->required()->check(CLI::ExistingFile);
  p->add_option("--dims", plot.dims, "two projection indices, e.g. 0,1")->capture_default_str();
  p->add_option("--depth", plot.depth, "split rounds")->capture_default_str();
  p->add_option("--strategy", plot.strategy, "cyclic or maxnorm")->capture_default_str();
  p->add_option("--out", plot.out_path, "SVG output path")->required();
  p->add_option("--csv", plot.csv_path, "CSV output path (default: SVG path with .csv)");
  p->add_option("--samples", plot.samples, "random member points to draw")->capture_default_str();
  p->add_option("--seed", plot.seed, "seed for member samples")->required();

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "brute-force minimum of x^T d over the set");
  o->add_option("--set", oracle.set, "set JSON file")->required()->check(CLI::ExistingFile);
  o->add_option("--direction", oracle.direction, "comma-separated direction")->required();
  o->add_option("--method", oracle.method, "corners or grid")->capture_default_str();
  o->add_option("--points", oracle.points, "grid points per factor")->capture_default_str();

  std::string info_set;
  auto* info = app.add_subcommand("info", "overapproximation diagnostics");
  info->add_option("--set", info_set, "set JSON file")->required()->check(CLI::ExistingFile);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "benchmarks");
  b->require_subcommand(1);
  auto* bip = b->add_subcommand("bipartize", "bipartization via bilinear optimum vs brute force");
  auto* random_opt = bip->add_option("--random", bench.random, "n p seed")->expected(3);
  auto* graph_opt = bip->add_option("--graph", bench.graph, "graph JSON file")->check(CLI::ExistingFile);
  random_opt->excludes(graph_opt);
  bip->add_option("--count", bench.count, "number of random graphs (seeds seed, seed+1, ...)")->capture_default_str();

  unsigned max_order = 9;
  auto* demo = app.add_subcommand("demo", "counterexample demonstrations");
  demo->require_subcommand(1);
  auto* cheb = demo->add_subcommand("chebyshev", "odd Chebyshev polynomials: range vs overapproximation");
  cheb->add_option("--max-order", max_order, "largest odd order")->capture_default_str();
  auto* prop2 = demo->add_subcommand("prop2", "alpha^2: overapproximation grows after one split");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pz: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*c) return do_check(check, out);
    if (*p) return do_plot(plot, out);
    if (*o) return do_oracle(oracle, out);
    if (*info) return do_info(info_set, out);
    if (*bip) {
      if (bench.random.empty() && bench.graph.empty()) throw RepresentationError("bench bipartize: need --random or --graph");
      return do_bench(bench, out);
    }
    if (*cheb) return do_chebyshev(max_order, out);
    if (*prop2) return do_prop2(out);
  } catch (const std::exception& e) {
    err << "pz: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pz");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pzcli
