#include "pzono/overapprox.hpp"

#include <algorithm>
#include <cmath>

#include "pzono/errors.hpp"

namespace pzono {

namespace {

std::uint64_t column_degree(const ExponentMatrix& e, Index col) {
  std::uint64_t total = 0;
  for (Index k = 0; k < e.rows(); ++k) total += e(k, col);
  return total;
}

}  // namespace

bool is_all_even(const PolyZonotope& pz, Index term) {
  const auto& e = pz.exponents();
  for (Index k = 0; k < e.rows(); ++k) {
    if (e(k, term) % 2 != 0) return false;
  }
  return true;
}

Zonotope overapproximate(const PolyZonotope& pz) {
  const Index q = pz.num_indep();
  const Index h = pz.num_terms();
  Vector center = pz.center();
  Matrix gens(pz.dim(), q + h);
  gens.leftCols(q) = pz.indep_generators();
  for (Index i = 0; i < h; ++i) {
    if (is_all_even(pz, i)) {
      center += 0.5 * pz.dep_generators().col(i);
      gens.col(q + i) = 0.5 * pz.dep_generators().col(i);
    } else {
      gens.col(q + i) = pz.dep_generators().col(i);
    }
  }
  return Zonotope(std::move(center), std::move(gens));
}

double error_bound(const PolyZonotope& pz) { return pz.dep_generators().cwiseAbs().sum(); }

double contraction_factor(const PolyZonotope& pz) {
  if (pz.num_terms() == 0) {
    throw PreconditionError("contraction factor is undefined for a set without dependent terms");
  }
  double rho = 0.0;
  for (Index i = 0; i < pz.num_terms(); ++i) {
    const auto deg = column_degree(pz.exponents(), i);
    // ldexp underflows to 0 for huge degrees, which is the right limit.
    const double shrink = deg > 2000 ? 0.0 : std::ldexp(1.0, -static_cast<int>(deg));
    rho = std::max(rho, 1.0 - shrink);
  }
  return rho;
}

OverapproxDiagnostics diagnose(const PolyZonotope& pz) {
  OverapproxDiagnostics d;
  d.dep_norm = error_bound(pz);
  if (pz.num_terms() > 0) d.rho = contraction_factor(pz);
  for (Index i = 0; i < pz.num_terms(); ++i) {
    if (is_all_even(pz, i)) {
      ++d.even_index_count;
    } else {
      ++d.odd_index_count;
    }
  }
  return d;
}

}  // namespace pzono
