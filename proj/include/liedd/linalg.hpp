#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liedd/scalar.hpp"

namespace liedd {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  /// Row-major flattening; n*n coordinates for square maps.
  Vector flatten() const { return data_; }
  static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  bool is_zero() const;
  bool has_parameters() const;
  std::vector<VarId> variables() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Scalar& c) const;
  Matrix pow(unsigned k) const;
  Matrix substitute(const std::map<VarId, Rational>& values) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Commutator AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Parameter values where a generic elimination result may be wrong.
/// Univariate entries are split into rational linear factors.
class ExceptionalSet {
 public:
  void add(const Polynomial& p);
  void merge(const ExceptionalSet& other);
  bool empty() const { return polys_.empty(); }
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  /// True when some member vanishes under the (full) assignment.
  bool vanishes_at(const std::map<VarId, Rational>& values) const;
  bool contains(const Polynomial& p) const;
  std::vector<std::string> to_strings() const;

 private:
  void insert(const Polynomial& p);
  std::vector<Polynomial> polys_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  ExceptionalSet exceptional;
};

/// Gauss-Jordan over Q(params). Pivot choice per column: first
/// parameter-free nonzero entry, else first nonzero entry; the numerator of
/// every parametric pivot goes into the exceptional set.
Echelon row_reduce(Matrix m);

struct NullspaceResult {
  std::vector<Vector> basis;
  ExceptionalSet exceptional;
};

NullspaceResult nullspace(const Matrix& m);

struct RankResult {
  std::size_t rank = 0;
  ExceptionalSet exceptional;
};

RankResult rank(const Matrix& m);

struct AffineSolution {
  enum class Kind { NoSolution, Unique, Affine };
  Kind kind = Kind::NoSolution;
  Vector particular;
  std::vector<Vector> directions;
  ExceptionalSet exceptional;
};

AffineSolution solve_affine(const Matrix& m, const Vector& rhs);

/// Multiplies by the lcm of the entry denominators when some are non-constant.
Vector clear_denominators(const Vector& v);

}  // namespace liedd
