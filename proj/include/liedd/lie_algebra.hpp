#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liedd/error.hpp"
#include "liedd/linalg.hpp"
#include "liedd/scalar.hpp"

namespace liedd {

/// Brackets [e_i, e_j] for i < j; the rest follows from skew-symmetry.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }
  /// Sets [e_i, e_j] = value for i != j (the opposite pair gets -value).
  void set(std::size_t i, std::size_t j, Vector value);
  /// Adds coeff * e_k to [e_i, e_j].
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff);
  /// [e_i, e_j] for any i, j.
  Vector get(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Vector> upper_;
};

struct JacobiFailure {
  std::size_t i, j, k;
  Vector value;
};

class JacobiViolation : public Error {
 public:
  explicit JacobiViolation(JacobiFailure failure, const std::string& detail = {});
  const JacobiFailure& failure() const { return failure_; }

 private:
  JacobiFailure failure_;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Validates the Jacobi identity on all basis triples i < j < k.
  LieAlgebra(const StructureConstants& constants, std::vector<std::string> labels = {},
             std::vector<std::string> params = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  /// Appends parameter names that are not yet declared.
  void declare_params(const std::vector<std::string>& extra);
  bool is_parametric() const;

  const StructureConstants& constants() const { return constants_; }
  /// [e_i, e_j] as a dense coordinate vector.
  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return dense_[i * dim_ + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of x -> [z, x]; column j holds [z, e_j].
  Matrix ad(const Vector& z) const;
  Vector basis(std::size_t i) const { return unit_vector(dim_, i); }
  Vector zero() const { return zero_vector(dim_); }

  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  Vector jacobiator(std::size_t i, std::size_t j, std::size_t k) const;

  std::string element_to_string(const Vector& v) const;
  /// Parses `c1*e1 + c2*e2 + ...` over the basis labels. Undeclared
  /// identifiers are rejected unless `extend` is given, which receives them.
  Vector parse_element(std::string_view text, std::vector<std::string>* extend = nullptr) const;

 private:
  friend std::optional<JacobiFailure> find_jacobi_failure(const StructureConstants&);
  void build_tables();

  std::size_t dim_ = 0;
  StructureConstants constants_;
  std::vector<std::string> labels_;
  std::vector<std::string> params_;
  std::string name_;
  std::vector<Vector> dense_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

/// First basis triple (lexicographic, i < j < k) where the Jacobiator is nonzero.
std::optional<JacobiFailure> find_jacobi_failure(const StructureConstants& c);

std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");

// ---------------------------------------------------------------- subspaces

class Subspace {
 public:
  Subspace() = default;
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const ExceptionalSet& exceptional() const { return exceptional_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  ExceptionalSet exceptional_;
};

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace center(const LieAlgebra& g);

struct Series {
  std::vector<Subspace> terms;        // terms[0] = g, until stabilization
  std::optional<std::size_t> length;  // index of the first zero term
  ExceptionalSet exceptional;
};

Series lower_central_series(const LieAlgebra& g);
Series derived_series(const LieAlgebra& g);
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g);
std::optional<std::size_t> solvability_class(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_metabelian(const LieAlgebra& g);
bool is_center_by_metabelian(const LieAlgebra& g);

// ------------------------------------------------------------ constructors

struct MatrixRealization {
  LieAlgebra algebra;
  std::vector<Matrix> embedding;  // basis element i -> matrix
};

/// Structure constants of the span of `mats` under the commutator.
MatrixRealization from_matrices(const std::vector<Matrix>& mats, std::vector<std::string> labels = {});

/// Algebra with an arbitrary bilinear product e_i * e_j.
struct BilinearAlgebra {
  std::size_t dim = 0;
  std::vector<Vector> products;  // row-major n x n table of e_i * e_j
  const Vector& product(std::size_t i, std::size_t j) const { return products[i * dim + j]; }
};

/// Rows of the linear system t*D(e_i e_j) = D(e_i) e_j + e_i D(e_j) in the
/// n*n unknowns D(r, c) (index r*n + c), over the listed pairs.
Matrix leibniz_system(std::size_t n,
                      const std::function<const Vector&(std::size_t, std::size_t)>& product,
                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                      const Scalar& t = Scalar(1));

struct MapSpace {
  std::vector<Matrix> basis;
  ExceptionalSet exceptional;
};

MapSpace derivations_of_bilinear(const BilinearAlgebra& a);

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// Substitutes rational values for every parameter and re-validates.
LieAlgebra specialize(const LieAlgebra& g, const std::map<std::string, Rational>& values);

std::map<VarId, Rational> to_var_assignment(const std::map<std::string, Rational>& values);

}  // namespace liedd
