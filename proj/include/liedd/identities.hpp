#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedd/derivations.hpp"
#include "liedd/verdict.hpp"

namespace liedd {

/// Id1: D([Dx,[y,w]] + [Dy,[w,x]] + [Dw,[x,y]])
/// Id2: [Dx,[y,z]] + [Dy,[z,x]] + [Dz,[x,y]]
/// Id3: [z,[[z,x],[y,w]]] + [z,[[z,y],[w,x]]] + [z,[[z,w],[x,y]]]
/// Id4: [z,[[z,x],[z,y]]]
/// Id6: [z,[[w,x],[w,y]]] - [w,[[z,w],[x,y]]]
/// Std5: sum over S4 of sgn(p) [x_p1,[x_p2,[x_p3,[x_p4,x0]]]]
/// Meta: [[z,x],[z,y]]
enum class IdentityId { Id1, Id2, Id3, Id4, Id6, Std5, Meta };

std::string to_string(IdentityId id);
/// Accepts "1", "2", "3", "4", "6", "s5", "meta".
IdentityId parse_identity_id(const std::string& text);

struct Arity {
  std::size_t maps;
  std::size_t elements;
};

Arity arity(IdentityId id);

/// Left-hand side (difference of the two sides for Id6). Slot order:
/// Id1/Id2 (D; x,y,w), Id3 (z; x,y,w), Id4 (z; x,y), Id6 (z,w; x,y),
/// Std5 (x0..x4), Meta (z; x,y). Throws ArityMismatch.
Vector eval_identity(const LieAlgebra& g, IdentityId id, const std::vector<LinearMap>& maps,
                     const std::vector<Vector>& elements);

struct Quantifier {
  enum class Kind { Fixed, AllDerivations, AllInnerDerivations, AllElements };

  Kind kind = Kind::AllElements;
  std::optional<LinearMap> map;    // Fixed for Id1/Id2
  std::optional<Vector> element;   // Fixed for Id3/Id4/Meta

  static Quantifier fixed_map(LinearMap m) { return {Kind::Fixed, std::move(m), std::nullopt}; }
  static Quantifier fixed_element(Vector z) { return {Kind::Fixed, std::nullopt, std::move(z)}; }
  static Quantifier all_derivations() { return {Kind::AllDerivations, std::nullopt, std::nullopt}; }
  static Quantifier all_inner() { return {Kind::AllInnerDerivations, std::nullopt, std::nullopt}; }
  static Quantifier all_elements() { return {Kind::AllElements, std::nullopt, std::nullopt}; }
};

std::string to_string(Quantifier::Kind k);
/// Accepts "fixed", "all-der", "all-inner", "all-elem".
Quantifier::Kind parse_quantifier_kind(const std::string& text);

/// Natural quantifier: all derivations for Id1/Id2, all elements otherwise.
Quantifier default_quantifier(IdentityId id);

struct Witness {
  std::vector<std::size_t> maps;      // indices into the swept map basis
  std::vector<std::size_t> elements;  // basis indices, slot order as in eval_identity
};

struct IdentityReport {
  IdentityId identity = IdentityId::Id1;
  Quantifier::Kind quantifier = Quantifier::Kind::AllElements;
  Status status = Status::Holds;
  std::optional<Witness> witness;
  Vector value;  // evaluation at the witness
  std::vector<Condition> conditions;
  ExceptionalSet exceptional;
  std::size_t swept_maps = 0;  // size of the derivation basis used, if any
  std::vector<LinearMap> map_basis;  // maps the witness indices refer to
};

/// Throws IncompatibleQuantifier when the quantifier does not fit the identity.
IdentityReport check_quantified(const LieAlgebra& g, IdentityId id, const Quantifier& q);

struct AuditFinding {
  std::string label;
  bool value;
};

struct AuditReport {
  std::string name;
  std::vector<AuditFinding> findings;
};

/// The audits throw Error(Internal) when the asserted implication is violated.
AuditReport implication_audit(const LieAlgebra& g);
AuditReport metabelian_equivalences(const LieAlgebra& g);
AuditReport id6_from_id3_audit(const LieAlgebra& g);
AuditReport cbm_implies_id34_audit(const LieAlgebra& g);

/// Nonzero derivation satisfying Id2: any derivation for class <= 2,
/// otherwise ad(w) with w in g^{k-2} outside the center. Throws NotNilpotent.
LinearMap nilpotent_witness_derivation(const LieAlgebra& g);

}  // namespace liedd
