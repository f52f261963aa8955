#include "liedd/rmatrix.hpp"

#include <algorithm>

namespace liedd {

namespace {

bool has_parameters(const LieAlgebra& g, const LinearMap& r) { return g.is_parametric() || r.has_parameters(); }

/// Table of [e_m, e_k]_R, row-major.
std::vector<Vector> r_table(const LieAlgebra& g, const LinearMap& r) {
  const std::size_t n = g.dim();
  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(r.column(j));
  std::vector<Vector> t(n * n, g.zero());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      t[a * n + b] = g.bracket(images[a], g.basis(b)) + g.bracket(g.basis(a), images[b]);
      t[b * n + a] = scale(Scalar(-1), t[a * n + b]);
    }
  }
  return t;
}

Vector table_bracket(const std::vector<Vector>& t, std::size_t n, const Vector& u, std::size_t k) {
  Vector out = zero_vector(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (u[m].is_zero()) continue;
    const Vector& v = t[m * n + k];
    for (std::size_t c = 0; c < n; ++c) {
      if (!v[c].is_zero()) out[c] += u[m] * v[c];
    }
  }
  return out;
}

void check_shape(const LieAlgebra& g, const LinearMap& r) {
  if (r.rows() != g.dim() || r.cols() != g.dim()) {
    throw Error(ErrorKind::AlgebraMismatch, "map size does not match the algebra");
  }
}

}  // namespace

Vector b_r(const LieAlgebra& g, const LinearMap& r, const Vector& x, const Vector& y) {
  const Vector rx = r * x;
  const Vector ry = r * y;
  return g.bracket(rx, ry) - r * (g.bracket(rx, y) + g.bracket(x, ry));
}

Vector r_bracket(const LieAlgebra& g, const LinearMap& r, const Vector& x, const Vector& y) {
  return g.bracket(r * x, y) + g.bracket(x, r * y);
}

bool RBracketObstruction::vanishes() const {
  return std::all_of(values.begin(), values.end(), [](const auto& e) { return is_zero(e.second); });
}

RBracketObstruction r_bracket_obstruction(const LieAlgebra& g, const LinearMap& r) {
  check_shape(g, r);
  const std::size_t n = g.dim();
  const auto t = r_table(g, r);
  RBracketObstruction out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector v = table_bracket(t, n, t[i * n + j], k) + table_bracket(t, n, t[j * n + k], i) +
                   table_bracket(t, n, t[k * n + i], j);
        out.values.push_back({Triple{i, j, k}, std::move(v)});
      }
    }
  }
  return out;
}

RMatrixCheck is_classical_rmatrix(const LieAlgebra& g, const LinearMap& r) {
  check_shape(g, r);
  const std::size_t n = g.dim();
  const bool parametric = has_parameters(g, r);
  const auto t = r_table(g, r);
  RMatrixCheck out;
  ConditionCollector conditions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector v = table_bracket(t, n, t[i * n + j], k) + table_bracket(t, n, t[j * n + k], i) +
                   table_bracket(t, n, t[k * n + i], j);
        if (is_zero(v)) continue;
        if (!out.witness) {
          out.witness = Triple{i, j, k};
          out.value = v;
        }
        if (!parametric) {
          out.status = Status::Fails;
          return out;
        }
        conditions.add(v);
      }
    }
  }
  out.status = conditions.status();
  if (out.status == Status::Conditional) out.conditions = conditions.conditions();
  return out;
}

MYBESolution mybe_solve(const LieAlgebra& g, const LinearMap& r) {
  check_shape(g, r);
  const std::size_t n = g.dim();
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = b_r(g, r, g.basis(i), g.basis(j));
      const Vector& c = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (b[k].is_zero() && c[k].is_zero()) continue;
        rows.push_back(Vector{c[k]});
        rhs.push_back(-b[k]);
      }
    }
  }
  MYBESolution out;
  if (rows.empty()) {
    out.verdict = MYBESolution::Verdict::AllScalars;
    return out;
  }
  const auto sol = solve_affine(Matrix::from_rows(rows, 1), rhs);
  out.exceptional = sol.exceptional;
  switch (sol.kind) {
    case AffineSolution::Kind::NoSolution: out.verdict = MYBESolution::Verdict::NoSolution; break;
    case AffineSolution::Kind::Unique:
      out.verdict = MYBESolution::Verdict::Unique;
      out.lambda = sol.particular.at(0);
      break;
    case AffineSolution::Kind::Affine: out.verdict = MYBESolution::Verdict::AllScalars; break;
  }
  return out;
}

LieAlgebra build_double(const LieAlgebra& g, const LinearMap& d, DoubleMode mode) {
  check_shape(g, d);
  const std::size_t n = g.dim();
  if (mode == DoubleMode::Derivation) {
    const auto check = is_derivation(g, d);
    if (!check.holds) {
      throw Error(ErrorKind::NotADerivation,
                  "map is not a derivation at (" + g.labels()[check.failing_pair->first] + ", " +
                      g.labels()[check.failing_pair->second] + ")");
    }
  }
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c.set(i, j, mode == DoubleMode::Derivation ? d * g.bracket_basis(i, j)
                                                 : r_bracket(g, d, g.basis(i), g.basis(j)));
    }
  }
  std::vector<std::string> params = g.params();
  for (VarId v : d.variables()) {
    const std::string name = variable_name(v);
    if (std::find(params.begin(), params.end(), name) == params.end()) params.push_back(name);
  }
  LieAlgebra out(c, g.labels(), params);
  out.set_name(g.name().empty() ? std::string() : g.name() + "_D");
  return out;
}

bool ad_cube_is_derivation(const LieAlgebra& g, const Vector& z) { return is_derivation(g, g.ad(z).pow(3)).holds; }

ExtremalCheck is_extremal(const LieAlgebra& g, const Vector& z) {
  const std::size_t n = g.dim();
  ExtremalCheck out;
  out.functional = zero_vector(n);
  if (is_zero(z)) {
    out.extremal = true;
    return out;
  }
  std::size_t p = 0;
  while (z[p].is_zero()) ++p;
  const Matrix ad2 = g.ad(z).pow(2);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = ad2.column(j);
    const Scalar f = col[p] / z[p];
    if (col != scale(f, z)) return ExtremalCheck{false, {}};
    out.functional[j] = f;
  }
  out.extremal = true;
  return out;
}

bool is_sandwich(const LieAlgebra& g, const Vector& z) { return g.ad(z).pow(2).is_zero(); }

bool recognize_r31(const LieAlgebra& g) {
  // r_{3,1} = span(x) + A with A abelian of dim 2 and ad(x)|A = id. Given
  // dim g = 3, dim g' = 2 and g' abelian, any x with ad(x)|g' = id lies
  // outside g', so g = span(x) + g' with exactly those brackets.
  if (g.is_parametric()) throw Error(ErrorKind::Usage, "r_{3,1} recognition needs a parameter-free algebra");
  if (g.dim() != 3) return false;
  const Subspace whole = Subspace::whole(3);
  const Subspace derived = bracket_span(g, whole, whole);
  if (derived.dim() != 2) return false;
  const auto& b = derived.basis();
  if (!is_zero(g.bracket(b[0], b[1]))) return false;
  std::vector<Vector> rows;
  Vector rhs;
  for (const auto& v : b) {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(g.bracket(g.basis(i), v));
    for (std::size_t k = 0; k < 3; ++k) {
      Vector row(3);
      for (std::size_t i = 0; i < 3; ++i) row[i] = images[i][k];
      rows.push_back(std::move(row));
      rhs.push_back(v[k]);
    }
  }
  return solve_affine(Matrix::from_rows(rows, 3), rhs).kind != AffineSolution::Kind::NoSolution;
}

}  // namespace liedd
