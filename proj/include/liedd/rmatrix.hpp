#pragma once

#include <array>
#include <optional>
#include <vector>

#include "liedd/derivations.hpp"
#include "liedd/verdict.hpp"

namespace liedd {

/// B_R(x,y) = [Rx,Ry] - R([Rx,y] + [x,Ry])
Vector b_r(const LieAlgebra& g, const LinearMap& r, const Vector& x, const Vector& y);

/// [x,y]_R = [Rx,y] + [x,Ry]
Vector r_bracket(const LieAlgebra& g, const LinearMap& r, const Vector& x, const Vector& y);

using Triple = std::array<std::size_t, 3>;

struct RBracketObstruction {
  std::vector<std::pair<Triple, Vector>> values;  // every triple i<j<k, in order

  bool vanishes() const;
};

/// Jacobiator of [ , ]_R on all increasing basis triples.
RBracketObstruction r_bracket_obstruction(const LieAlgebra& g, const LinearMap& r);

struct RMatrixCheck {
  Status status = Status::Holds;
  std::optional<Triple> witness;  // first failing triple
  Vector value;
  std::vector<Condition> conditions;  // parametric inputs only
};

RMatrixCheck is_classical_rmatrix(const LieAlgebra& g, const LinearMap& r);

struct MYBESolution {
  enum class Verdict { NoSolution, Unique, AllScalars };
  Verdict verdict = Verdict::NoSolution;
  Scalar lambda;
  ExceptionalSet exceptional;
};

/// Solves B_R(e_i,e_j) + lambda [e_i,e_j] = 0 for all i<j in the unknown lambda.
MYBESolution mybe_solve(const LieAlgebra& g, const LinearMap& r);

enum class DoubleMode { Derivation, RMatrix };

/// Algebra with bracket D([x,y]) (Derivation mode, D checked) or [Rx,y]+[x,Ry].
/// Throws NotADerivation or JacobiViolation.
LieAlgebra build_double(const LieAlgebra& g, const LinearMap& d, DoubleMode mode = DoubleMode::Derivation);

bool ad_cube_is_derivation(const LieAlgebra& g, const Vector& z);

struct ExtremalCheck {
  bool extremal = false;
  Vector functional;  // f_z(e_j) when extremal
};

ExtremalCheck is_extremal(const LieAlgebra& g, const Vector& z);
bool is_sandwich(const LieAlgebra& g, const Vector& z);

bool recognize_r31(const LieAlgebra& g);

}  // namespace liedd
