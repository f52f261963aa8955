#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liedd/lie_algebra.hpp"

namespace liedd {

/// Square matrix acting on the coordinates of an algebra; column j is the image of e_j.
using LinearMap = Matrix;

struct DerivationSpace {
  enum class Kind { Ordinary, Generalized, Inner };

  Kind kind = Kind::Ordinary;
  Scalar t = Scalar(1);  // only meaningful for Generalized
  std::size_t algebra_dim = 0;
  std::vector<LinearMap> basis;
  ExceptionalSet exceptional;

  std::size_t dim() const { return basis.size(); }
};

DerivationSpace derivation_space(const LieAlgebra& g);

/// Solutions of t*D([x,y]) = [D(x),y] + [x,D(y)].
DerivationSpace generalized_derivation_space(const LieAlgebra& g, const Scalar& t);

/// Span of ad(e_1), ..., ad(e_n).
DerivationSpace inner_derivations(const LieAlgebra& g);

struct DerivationCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  Vector defect;  // D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] at the failing pair
};

DerivationCheck is_derivation(const LieAlgebra& g, const LinearMap& m);

/// Commutator algebra of the space, in its own basis. Throws NotClosed.
LieAlgebra derivation_lie_structure(const DerivationSpace& ds);

bool is_characteristically_nilpotent(const LieAlgebra& g);

/// Flattened coordinates of a linear map (index r*n + c).
Vector map_coordinates(const LinearMap& m);
LinearMap map_from_coordinates(const Vector& v, std::size_t n);

/// True when every map of `inner` lies in the span of `outer`.
bool space_contains(const DerivationSpace& outer, const DerivationSpace& inner);

}  // namespace liedd
