#include "liedd/lie_algebra.hpp"

#include <algorithm>

namespace liedd {

// ------------------------------------------------------ StructureConstants

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim) {}

void StructureConstants::set(std::size_t i, std::size_t j, Vector value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) {
    throw Error(ErrorKind::AlgebraMismatch, "structure constant index or length out of range");
  }
  if (i == j) {
    if (!is_zero(value)) throw Error(ErrorKind::Usage, "[e_i, e_i] must vanish");
    return;
  }
  if (i > j) {
    std::swap(i, j);
    value = scale(Scalar(-1), value);
  }
  if (is_zero(value)) {
    upper_.erase({i, j});
  } else {
    upper_[{i, j}] = std::move(value);
  }
}

void StructureConstants::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff) {
  Vector v = get(i, j);
  v.at(k) += coeff;
  set(i, j, std::move(v));
}

Vector StructureConstants::get(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vector(dim_);
  const bool flip = i > j;
  auto it = upper_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == upper_.end()) return zero_vector(dim_);
  return flip ? scale(Scalar(-1), it->second) : it->second;
}

// ---------------------------------------------------------------- Jacobi

namespace {

std::string vector_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace

JacobiViolation::JacobiViolation(JacobiFailure failure, const std::string& detail)
    : Error(ErrorKind::JacobiViolation,
            (detail.empty() ? std::string() : detail + ": ") + "Jacobi identity fails on basis triple (" +
                std::to_string(failure.i + 1) + ", " + std::to_string(failure.j + 1) + ", " +
                std::to_string(failure.k + 1) + ") with value " + vector_string(failure.value)),
      failure_(std::move(failure)) {}

std::vector<std::string> default_labels(std::size_t n, const std::string& stem) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(stem + std::to_string(i + 1));
  return labels;
}

std::optional<JacobiFailure> find_jacobi_failure(const StructureConstants& c) {
  LieAlgebra raw;
  raw.dim_ = c.dim();
  raw.constants_ = c;
  raw.build_tables();
  for (std::size_t i = 0; i < raw.dim_; ++i) {
    for (std::size_t j = i + 1; j < raw.dim_; ++j) {
      for (std::size_t k = j + 1; k < raw.dim_; ++k) {
        Vector v = raw.jacobiator(i, j, k);
        if (!is_zero(v)) return JacobiFailure{i, j, k, std::move(v)};
      }
    }
  }
  return std::nullopt;
}

// -------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(const StructureConstants& constants, std::vector<std::string> labels,
                       std::vector<std::string> params)
    : dim_(constants.dim()), constants_(constants), labels_(std::move(labels)), params_(std::move(params)) {
  if (labels_.empty()) labels_ = default_labels(dim_);
  if (labels_.size() != dim_) throw Error(ErrorKind::Usage, "label count does not match dimension");
  build_tables();
  if (auto failure = find_jacobi_failure(constants_)) throw JacobiViolation(*failure);
}

void LieAlgebra::build_tables() {
  dense_.assign(dim_ * dim_, Vector{});
  sparse_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Vector v = constants_.get(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!v[k].is_zero()) sparse_[i * dim_ + j].emplace_back(k, v[k]);
      }
      dense_[i * dim_ + j] = std::move(v);
    }
  }
}

void LieAlgebra::declare_params(const std::vector<std::string>& extra) {
  for (const auto& p : extra) {
    if (std::find(params_.begin(), params_.end(), p) == params_.end()) params_.push_back(p);
  }
}

bool LieAlgebra::is_parametric() const {
  return std::any_of(dense_.begin(), dense_.end(), [](const Vector& v) {
    return std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_rational(); });
  });
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::AlgebraMismatch, "element dimension mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == i || y[j].is_zero()) continue;
      const auto& entries = sparse_[i * dim_ + j];
      if (entries.empty()) continue;
      const Scalar coeff = x[i] * y[j];
      for (const auto& [k, c] : entries) out[k] += coeff * c;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& z) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector col = bracket(z, basis(j));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

Vector LieAlgebra::jacobiator(std::size_t i, std::size_t j, std::size_t k) const {
  Vector out = bracket(bracket_basis(i, j), basis(k));
  out = out + bracket(bracket_basis(j, k), basis(i));
  return out + bracket(bracket_basis(k, i), basis(j));
}

std::string LieAlgebra::element_to_string(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < labels_.size(); ++i) {
    const Scalar& c = v[i];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      negative = c.rational() < 0;
      const Rational mag = abs(c.rational());
      coeff = mag == 1 ? std::string() : to_string(mag) + "*";
    } else {
      std::string text = c.to_string();
      const bool monomial = text.find_first_of("/(") == std::string::npos &&
                            text.find(" + ") == std::string::npos && text.find(" - ") == std::string::npos;
      if (monomial && text[0] == '-') {
        negative = true;
        text.erase(0, 1);
      }
      coeff = monomial ? text + "*" : "(" + text + ")*";
    }
    const std::string term = coeff + labels_[i];
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

Vector LieAlgebra::parse_element(std::string_view text, std::vector<std::string>* extend) const {
  ParseOptions options;
  options.declared = params_;
  for (const auto& l : labels_) options.declared.push_back(l);
  std::vector<std::string> fresh;
  options.extend = extend != nullptr ? &fresh : nullptr;
  const Scalar s = parse_scalar(text, options);

  std::vector<VarId> label_ids;
  for (const auto& l : labels_) label_ids.push_back(intern_variable(l));
  auto label_index = [&](VarId v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < label_ids.size(); ++i) {
      if (label_ids[i] == v) return i;
    }
    return std::nullopt;
  };

  const Polynomial den = s.denominator();
  for (const auto& t : den.terms()) {
    for (const auto& p : t.mono.powers()) {
      if (label_index(p.var)) throw Error(ErrorKind::Parse, "basis label in a denominator: " + std::string(text));
    }
  }
  std::vector<std::vector<Polynomial::Term>> parts(dim_);
  const Polynomial num = s.numerator();
  for (const auto& t : num.terms()) {
    std::optional<std::size_t> which;
    Monomial rest;
    for (const auto& p : t.mono.powers()) {
      if (auto idx = label_index(p.var)) {
        if (which || p.exp != 1) throw Error(ErrorKind::Parse, "element is not linear in the basis: " + std::string(text));
        which = idx;
      } else {
        rest = rest * Monomial::variable(p.var, p.exp);
      }
    }
    if (!which) throw Error(ErrorKind::Parse, "term without a basis label in element: " + std::string(text));
    parts[*which].push_back({rest, t.coeff});
  }
  Vector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!parts[i].empty()) v[i] = Scalar::fraction(Polynomial::from_terms(parts[i]), den);
  }
  if (extend != nullptr) {
    for (const auto& name : fresh) {
      if (std::find(extend->begin(), extend->end(), name) == extend->end()) extend->push_back(name);
    }
  }
  return v;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  std::vector<Vector> rows;
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw Error(ErrorKind::AlgebraMismatch, "subspace vector length mismatch");
    if (!liedd::is_zero(v)) rows.push_back(v);
  }
  if (rows.empty()) return s;
  Echelon e = row_reduce(Matrix::from_rows(rows, ambient));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(clear_denominators(e.reduced.row(r)));
  s.exceptional_ = std::move(e.exceptional);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vector(ambient, i));
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (liedd::is_zero(v)) return true;
  if (basis_.empty()) return false;
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)).rank == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.is_zero()) return true;
  if (basis_.empty()) return false;
  std::vector<Vector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return rank(Matrix::from_rows(rows, ambient_)).rank == dim();
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> brackets;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) brackets.push_back(g.bracket(x, y));
  }
  return Subspace::span(g.dim(), brackets);
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector& b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = b[k];
    }
  }
  auto ns = nullspace(m);
  Subspace z = Subspace::span(n, ns.basis);
  return z;
}

namespace {

template <typename Next>
Series build_series(const LieAlgebra& g, Next next) {
  Series s;
  s.terms.push_back(Subspace::whole(g.dim()));
  if (g.dim() == 0) {
    s.length = 0;
    return s;
  }
  for (;;) {
    Subspace n = next(s.terms.back());
    s.exceptional.merge(n.exceptional());
    if (n.dim() == s.terms.back().dim()) break;
    s.terms.push_back(std::move(n));
    if (s.terms.back().is_zero()) {
      s.length = s.terms.size() - 1;
      break;
    }
  }
  return s;
}

}  // namespace

Series lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::whole(g.dim());
  return build_series(g, [&](const Subspace& last) { return bracket_span(g, whole, last); });
}

Series derived_series(const LieAlgebra& g) {
  return build_series(g, [&](const Subspace& last) { return bracket_span(g, last, last); });
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) { return lower_central_series(g).length; }

std::optional<std::size_t> solvability_class(const LieAlgebra& g) { return derived_series(g).length; }

bool is_abelian(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (!is_zero(g.bracket_basis(i, j))) return false;
    }
  }
  return true;
}

bool is_nilpotent(const LieAlgebra& g) { return nilpotency_class(g).has_value(); }

namespace {

Subspace second_derived(const LieAlgebra& g) {
  const Subspace whole = Subspace::whole(g.dim());
  const Subspace d1 = bracket_span(g, whole, whole);
  return bracket_span(g, d1, d1);
}

}  // namespace

bool is_metabelian(const LieAlgebra& g) { return second_derived(g).is_zero(); }

bool is_center_by_metabelian(const LieAlgebra& g) { return center(g).contains(second_derived(g)); }

// ------------------------------------------------------------ constructors

MatrixRealization from_matrices(const std::vector<Matrix>& mats, std::vector<std::string> labels) {
  if (mats.empty()) return {LieAlgebra(StructureConstants(0), std::move(labels)), {}};
  const std::size_t size = mats.front().rows();
  for (const auto& m : mats) {
    if (!m.is_square() || m.rows() != size) throw Error(ErrorKind::AlgebraMismatch, "matrices must be square of equal size");
  }
  std::vector<Vector> flat;
  flat.reserve(mats.size());
  for (const auto& m : mats) flat.push_back(m.flatten());
  const Matrix basis = Matrix::from_columns(flat, size * size);
  if (rank(basis).rank != mats.size()) throw Error(ErrorKind::NotIndependent, "matrices are linearly dependent");

  const std::size_t n = mats.size();
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix comm = commutator(mats[i], mats[j]);
      if (comm.is_zero()) continue;
      const auto sol = solve_affine(basis, comm.flatten());
      if (sol.kind != AffineSolution::Kind::Unique) {
        throw Error(ErrorKind::NotClosed, "commutator of matrices " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) + " leaves the span: " + comm.to_string());
      }
      c.set(i, j, sol.particular);
    }
  }
  return {LieAlgebra(c, std::move(labels)), mats};
}

Matrix leibniz_system(std::size_t n,
                      const std::function<const Vector&(std::size_t, std::size_t)>& product,
                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Scalar& t) {
  Matrix m(pairs.size() * n, n * n);
  std::size_t row = 0;
  for (const auto& [i, j] : pairs) {
    const Vector& eij = product(i, j);
    for (std::size_t out = 0; out < n; ++out, ++row) {
      // t * D(e_i e_j), component `out`
      for (std::size_t k = 0; k < n; ++k) {
        if (!eij[k].is_zero()) m(row, out * n + k) += t * eij[k];
      }
      // - D(e_i) e_j - e_i D(e_j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& a = product(k, j)[out];
        if (!a.is_zero()) m(row, k * n + i) -= a;
        const Scalar& b = product(i, k)[out];
        if (!b.is_zero()) m(row, k * n + j) -= b;
      }
    }
  }
  return m;
}

MapSpace derivations_of_bilinear(const BilinearAlgebra& a) {
  const std::size_t n = a.dim;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  }
  const Matrix sys = leibniz_system(
      n, [&](std::size_t i, std::size_t j) -> const Vector& { return a.product(i, j); }, pairs);
  auto ns = nullspace(sys);
  MapSpace out;
  for (const auto& v : ns.basis) out.basis.push_back(Matrix::unflatten(v, n, n));
  out.exceptional = std::move(ns.exceptional);
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.dim();
  const std::size_t m = h.dim();
  StructureConstants c(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(n + m);
      for (std::size_t k = 0; k < n; ++k) v[k] = g.bracket_basis(i, j)[k];
      c.set(i, j, std::move(v));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector v(n + m);
      for (std::size_t k = 0; k < m; ++k) v[n + k] = h.bracket_basis(i, j)[k];
      c.set(n + i, n + j, std::move(v));
    }
  }
  std::vector<std::string> params = g.params();
  for (const auto& p : h.params()) {
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  }
  return LieAlgebra(c, default_labels(n + m), params);
}

std::map<VarId, Rational> to_var_assignment(const std::map<std::string, Rational>& values) {
  std::map<VarId, Rational> out;
  for (const auto& [name, v] : values) out.emplace(intern_variable(name), v);
  return out;
}

LieAlgebra specialize(const LieAlgebra& g, const std::map<std::string, Rational>& values) {
  for (const auto& [name, v] : values) {
    if (std::find(g.params().begin(), g.params().end(), name) == g.params().end()) {
      throw Error(ErrorKind::UnknownName, "unknown parameter '" + name + "'");
    }
  }
  const auto assignment = to_var_assignment(values);
  const std::size_t n = g.dim();
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = g.bracket_basis(i, j);
      for (auto& s : v) s = s.substitute(assignment);
      c.set(i, j, std::move(v));
    }
  }
  std::vector<std::string> remaining;
  for (const auto& p : g.params()) {
    if (!values.count(p)) remaining.push_back(p);
  }
  LieAlgebra out(c, g.labels(), remaining);
  out.set_name(g.name());
  return out;
}

}  // namespace liedd
