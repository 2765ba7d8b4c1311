#include "pzono/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pzono/errors.hpp"

namespace pzono::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw RepresentationError(field + ": " + what);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) fail("<root>", "expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) fail(name, "missing field");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number, got " + std::string(v.type_name()));
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "not finite");
  return x;
}

Vector vector_of(const json& v, const std::string& where, std::optional<Index> expected) {
  if (!v.is_array()) fail(where, "expected an array");
  if (expected && static_cast<Index>(v.size()) != *expected) {
    fail(where, "expected " + std::to_string(*expected) + " numbers, got " + std::to_string(v.size()));
  }
  Vector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = number(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

// Array of columns, each of `rows` numbers.
Matrix columns_of(const json& v, const std::string& where, Index rows) {
  if (!v.is_array()) fail(where, "expected an array of columns");
  Matrix m(rows, static_cast<Index>(v.size()));
  for (std::size_t c = 0; c < v.size(); ++c) {
    m.col(static_cast<Index>(c)) = vector_of(v[c], where + "[" + std::to_string(c) + "]", rows);
  }
  return m;
}

std::int64_t exponent(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    const auto e = v.get<std::int64_t>();
    if (e < 0) fail(where, "exponent must be nonnegative, got " + std::to_string(e));
    return e;
  }
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (x != std::floor(x)) fail(where, "exponent must be an integer, got " + v.dump());
    if (x < 0) fail(where, "exponent must be nonnegative, got " + v.dump());
    return static_cast<std::int64_t>(x);
  }
  fail(where, "expected an integer exponent, got " + std::string(v.type_name()));
}

json columns_json(const Matrix& m) {
  json out = json::array();
  for (Index c = 0; c < m.cols(); ++c) {
    json col = json::array();
    for (Index r = 0; r < m.rows(); ++r) col.push_back(m(r, c));
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace

PolyZonotope parse_polyzonotope(const json& j) {
  const json& dim_field = field(j, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<std::int64_t>() < 1) fail("dim", "expected a positive integer");
  const auto n = static_cast<Index>(dim_field.get<std::int64_t>());

  RawPolyZonotope raw;
  raw.center = vector_of(field(j, "center"), "center", n);
  raw.indep_generators = j.contains("indep_generators") ? columns_of(j.at("indep_generators"), "indep_generators", n)
                                                        : Matrix(n, 0);
  raw.dep_generators =
      j.contains("dep_generators") ? columns_of(j.at("dep_generators"), "dep_generators", n) : Matrix(n, 0);

  const json empty = json::array();
  const json& ex = j.contains("exponents") ? j.at("exponents") : empty;
  if (!ex.is_array()) fail("exponents", "expected an array of columns");
  if (static_cast<Index>(ex.size()) != raw.dep_generators.cols()) {
    fail("exponents", "has " + std::to_string(ex.size()) + " columns but dep_generators has " +
                          std::to_string(raw.dep_generators.cols()));
  }
  const Index r = ex.empty() ? 0 : (ex[0].is_array() ? static_cast<Index>(ex[0].size()) : 0);
  raw.exponents.resize(r, static_cast<Index>(ex.size()));
  for (std::size_t c = 0; c < ex.size(); ++c) {
    const std::string where = "exponents[" + std::to_string(c) + "]";
    if (!ex[c].is_array()) fail(where, "expected an array");
    if (static_cast<Index>(ex[c].size()) != r) {
      fail(where, "expected " + std::to_string(r) + " exponents, got " + std::to_string(ex[c].size()));
    }
    for (std::size_t k = 0; k < ex[c].size(); ++k) {
      raw.exponents(static_cast<Index>(k), static_cast<Index>(c)) =
          exponent(ex[c][k], where + "[" + std::to_string(k) + "]");
    }
  }
  return canonicalize(raw);
}

Halfspace parse_halfspace(const json& j) {
  const Vector normal = vector_of(field(j, "normal"), "normal", std::nullopt);
  if (normal.size() == 0) fail("normal", "must not be empty");
  return Halfspace(normal, number(field(j, "offset"), "offset"));
}

Graph parse_graph(const json& j) {
  const json& n_field = field(j, "n");
  if (!n_field.is_number_integer() || n_field.get<std::int64_t>() < 0) fail("n", "expected a nonnegative integer");
  const auto n = static_cast<std::size_t>(n_field.get<std::int64_t>());
  const json& edges = field(j, "edges");
  if (!edges.is_array()) fail("edges", "expected an array of [i, j] pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    const json& pair = edges[e];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      fail(where, "expected [i, j] with integer endpoints");
    }
    const auto i = pair[0].get<std::int64_t>();
    const auto k = pair[1].get<std::int64_t>();
    if (i < 1 || k < 1 || i > static_cast<std::int64_t>(n) || k > static_cast<std::int64_t>(n)) {
      fail(where, "endpoints must lie in 1.." + std::to_string(n));
    }
    if (i >= k) fail(where, "expected i < j");
    out.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1));
  }
  return Graph(n, std::move(out));
}

json to_json(const PolyZonotope& pz) {
  json j;
  j["dim"] = pz.dim();
  j["center"] = std::vector<double>(pz.center().data(), pz.center().data() + pz.dim());
  j["indep_generators"] = columns_json(pz.indep_generators());
  j["dep_generators"] = columns_json(pz.dep_generators());
  json ex = json::array();
  for (Index c = 0; c < pz.num_terms(); ++c) {
    json col = json::array();
    for (Index k = 0; k < pz.num_factors(); ++k) col.push_back(pz.exponents()(k, c));
    ex.push_back(std::move(col));
  }
  j["exponents"] = std::move(ex);
  return j;
}

json to_json(const Halfspace& hs) {
  return {{"normal", std::vector<double>(hs.normal().data(), hs.normal().data() + hs.dim())}, {"offset", hs.offset()}};
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [i, k] : g.edges()) edges.push_back({i + 1, k + 1});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw RepresentationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": JSON syntax error: " + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RepresentationError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path.string());
}

namespace {

template <typename F>
auto with_source(const std::filesystem::path& path, F&& parse) {
  const json j = read_json_file(path);
  try {
    return parse(j);
  } catch (const RepresentationError& e) {
    throw RepresentationError(path.string() + ": " + e.what());
  }
}

}  // namespace

PolyZonotope read_polyzonotope(const std::filesystem::path& path) {
  return with_source(path, [](const json& j) { return parse_polyzonotope(j); });
}

Halfspace read_halfspace(const std::filesystem::path& path) {
  return with_source(path, [](const json& j) { return parse_halfspace(j); });
}

Graph read_graph(const std::filesystem::path& path) {
  return with_source(path, [](const json& j) { return parse_graph(j); });
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error(path.string() + ": write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error(path.string() + ": rename failed: " + ec.message());
  }
}

}  // namespace pzono::io
