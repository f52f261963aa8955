#include "liedd/derivations.hpp"

namespace liedd {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

DerivationSpace solve_leibniz(const LieAlgebra& g, const Scalar& t, DerivationSpace::Kind kind) {
  const std::size_t n = g.dim();
  const Matrix sys = leibniz_system(
      n, [&](std::size_t i, std::size_t j) -> const Vector& { return g.bracket_basis(i, j); }, upper_pairs(n), t);
  auto ns = nullspace(sys);
  DerivationSpace ds;
  ds.kind = kind;
  ds.t = t;
  ds.algebra_dim = n;
  for (const auto& v : ns.basis) ds.basis.push_back(map_from_coordinates(v, n));
  ds.exceptional = std::move(ns.exceptional);
  return ds;
}

Matrix coordinate_columns(const std::vector<LinearMap>& maps, std::size_t n) {
  std::vector<Vector> cols;
  cols.reserve(maps.size());
  for (const auto& m : maps) cols.push_back(map_coordinates(m));
  return Matrix::from_columns(cols, n * n);
}

}  // namespace

Vector map_coordinates(const LinearMap& m) { return m.flatten(); }

LinearMap map_from_coordinates(const Vector& v, std::size_t n) { return Matrix::unflatten(v, n, n); }

DerivationSpace derivation_space(const LieAlgebra& g) {
  return solve_leibniz(g, Scalar(1), DerivationSpace::Kind::Ordinary);
}

DerivationSpace generalized_derivation_space(const LieAlgebra& g, const Scalar& t) {
  return solve_leibniz(g, t, DerivationSpace::Kind::Generalized);
}

DerivationSpace inner_derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(map_coordinates(g.ad(g.basis(i))));
  const Subspace s = Subspace::span(n * n, ads);
  DerivationSpace ds;
  ds.kind = DerivationSpace::Kind::Inner;
  ds.algebra_dim = n;
  for (const auto& v : s.basis()) ds.basis.push_back(map_from_coordinates(v, n));
  ds.exceptional = s.exceptional();
  return ds;
}

DerivationCheck is_derivation(const LieAlgebra& g, const LinearMap& m) {
  const std::size_t n = g.dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::AlgebraMismatch, "map size does not match the algebra");
  DerivationCheck out;
  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(m.column(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector defect = m * g.bracket_basis(i, j) - g.bracket(images[i], g.basis(j)) - g.bracket(g.basis(i), images[j]);
      if (!is_zero(defect)) {
        out.holds = false;
        out.failing_pair = std::make_pair(i, j);
        out.defect = std::move(defect);
        return out;
      }
    }
  }
  return out;
}

LieAlgebra derivation_lie_structure(const DerivationSpace& ds) {
  const std::size_t n = ds.algebra_dim;
  const std::size_t m = ds.basis.size();
  const Matrix cols = coordinate_columns(ds.basis, n);
  StructureConstants c(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const LinearMap comm = commutator(ds.basis[a], ds.basis[b]);
      if (comm.is_zero()) continue;
      const auto sol = solve_affine(cols, map_coordinates(comm));
      if (sol.kind == AffineSolution::Kind::NoSolution) {
        throw Error(ErrorKind::NotClosed, "commutator of basis maps " + std::to_string(a + 1) + " and " +
                                              std::to_string(b + 1) + " leaves the space");
      }
      c.set(a, b, sol.particular);
    }
  }
  std::vector<std::string> params;
  for (const auto& d : ds.basis) {
    for (VarId v : d.variables()) {
      const std::string name = variable_name(v);
      if (std::find(params.begin(), params.end(), name) == params.end()) params.push_back(name);
    }
  }
  return LieAlgebra(c, default_labels(m, "D"), params);
}

bool is_characteristically_nilpotent(const LieAlgebra& g) {
  if (g.is_parametric()) throw Error(ErrorKind::Usage, "CNLA test needs a parameter-free algebra");
  const DerivationSpace ds = derivation_space(g);
  if (ds.basis.empty()) return true;
  return is_nilpotent(derivation_lie_structure(ds));
}

bool space_contains(const DerivationSpace& outer, const DerivationSpace& inner) {
  const std::size_t n = outer.algebra_dim;
  std::vector<Vector> vs;
  for (const auto& m : outer.basis) vs.push_back(map_coordinates(m));
  const Subspace s = Subspace::span(n * n, vs);
  for (const auto& m : inner.basis) {
    if (!s.contains(map_coordinates(m))) return false;
  }
  return true;
}

}  // namespace liedd
