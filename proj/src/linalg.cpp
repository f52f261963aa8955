#include "liedd/linalg.hpp"

#include <algorithm>
#include <utility>

#include "liedd/error.hpp"

namespace liedd {

// ------------------------------------------------------------------ Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::AlgebraMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::AlgebraMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorKind::AlgebraMismatch, "flattened size mismatch");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

bool Matrix::is_zero() const { return liedd::is_zero(data_); }

bool Matrix::has_parameters() const {
  return std::any_of(data_.begin(), data_.end(), [](const Scalar& s) { return !s.is_rational(); });
}

std::vector<VarId> Matrix::variables() const { return variables_of(data_); }

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::AlgebraMismatch, "matrix shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::AlgebraMismatch, "matrix shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::AlgebraMismatch, "matrix shape mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  }
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::AlgebraMismatch, "matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_);
  m.data_ = scale(c, data_);
  return m;
}

Matrix Matrix::pow(unsigned k) const {
  if (!is_square()) throw Error(ErrorKind::AlgebraMismatch, "power of a non-square matrix");
  Matrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * (*this);
  return result;
}

Matrix Matrix::substitute(const std::map<VarId, Rational>& values) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].substitute(values);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------- ExceptionalSet

void ExceptionalSet::insert(const Polynomial& p) {
  if (p.is_constant()) return;
  if (std::find(polys_.begin(), polys_.end(), p) != polys_.end()) return;
  polys_.push_back(p);
  std::sort(polys_.begin(), polys_.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.to_string() < b.to_string();
  });
}

void ExceptionalSet::add(const Polynomial& p) {
  if (p.is_constant()) return;
  const auto vars = p.variables();
  if (vars.size() != 1) {
    insert(poly_normalize(p));
    return;
  }
  const auto roots = rational_roots(p);
  const Polynomial x = Polynomial::variable(vars.front());
  for (const auto& r : roots.roots) {
    insert(x.scaled(Rational(r.get_den())) - Polynomial(Rational(r.get_num())));
  }
  insert(roots.residual);
}

void ExceptionalSet::merge(const ExceptionalSet& other) {
  for (const auto& p : other.polys_) insert(p);
}

bool ExceptionalSet::vanishes_at(const std::map<VarId, Rational>& values) const {
  return std::any_of(polys_.begin(), polys_.end(),
                     [&](const Polynomial& p) { return p.substitute(values).is_zero(); });
}

bool ExceptionalSet::contains(const Polynomial& p) const {
  const Polynomial n = poly_normalize(p);
  return std::find(polys_.begin(), polys_.end(), n) != polys_.end();
}

std::vector<std::string> ExceptionalSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(polys_.size());
  for (const auto& p : polys_) out.push_back(p.to_string());
  return out;
}

// ------------------------------------------------------------- elimination

Echelon row_reduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c).is_rational() && !m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) {
      for (std::size_t i = r; i < rows; ++i) {
        if (!m(i, c).is_zero()) {
          pivot = i;
          break;
        }
      }
    }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t cc = 0; cc < cols; ++cc) std::swap(m(pivot, cc), m(r, cc));
    }
    const Scalar p = m(r, c);
    if (!p.is_rational()) e.exceptional.add(p.numerator());
    if (!p.is_one()) {
      for (std::size_t cc = c; cc < cols; ++cc) {
        if (!m(r, cc).is_zero()) m(r, cc) /= p;
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar f = m(i, c);
      if (f.is_zero()) continue;
      for (std::size_t cc = c; cc < cols; ++cc) {
        if (!m(r, cc).is_zero()) m(i, cc) -= f * m(r, cc);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

namespace {

std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t unknowns) {
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : e.pivots) {
    if (c < unknowns) is_pivot[c] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    Vector v(unknowns);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      if (e.pivots[k] < unknowns) v[e.pivots[k]] = -e.reduced(k, f);
    }
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

}  // namespace

NullspaceResult nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  NullspaceResult out;
  out.basis = kernel_from_echelon(e, m.cols());
  out.exceptional = std::move(e.exceptional);
  return out;
}

RankResult rank(const Matrix& m) {
  Echelon e = row_reduce(m);
  return {e.pivots.size(), std::move(e.exceptional)};
}

AffineSolution solve_affine(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::AlgebraMismatch, "right-hand side length mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  Echelon e = row_reduce(std::move(aug));
  AffineSolution out;
  out.exceptional = e.exceptional;
  if (!e.pivots.empty() && e.pivots.back() == n) {
    out.kind = AffineSolution::Kind::NoSolution;
    return out;
  }
  out.particular = Vector(n);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.particular[e.pivots[k]] = e.reduced(k, n);
  out.directions = kernel_from_echelon(e, n);
  out.kind = out.directions.empty() ? AffineSolution::Kind::Unique : AffineSolution::Kind::Affine;
  return out;
}

Vector clear_denominators(const Vector& v) {
  std::vector<Polynomial> dens;
  for (const auto& s : v) {
    if (!s.is_rational()) {
      Polynomial d = s.denominator();
      if (!d.is_constant()) dens.push_back(std::move(d));
    }
  }
  if (dens.empty()) return v;
  Polynomial lcm(Rational(1));
  for (const auto& d : dens) {
    if (divide_exact(lcm, d)) continue;
    std::vector<VarId> vars = lcm.variables();
    for (VarId id : d.variables()) vars.push_back(id);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() <= 1) {
      const Polynomial g = gcd_univariate(lcm, d);
      lcm = *divide_exact(lcm * d, g);
    } else {
      lcm = lcm * d;
    }
  }
  return scale(Scalar(primitive_part(lcm)), v);
}

}  // namespace liedd
