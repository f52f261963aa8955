#include "doctest.h"

#include "generators.hpp"
#include "liedd/acceptance.hpp"
#include "liedd/catalog.hpp"
#include "liedd/derivations.hpp"

using namespace liedd;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::builtin();
  return c;
}

Rational q(long n) { return Rational(n); }

std::vector<LieAlgebra> fixed_entries() {
  std::vector<LieAlgebra> out;
  for (const auto& e : cat().entries()) {
    if (e.params.empty() && e.integer_params.empty() && cat().get(e.name).dim() <= 10) out.push_back(cat().get(e.name));
  }
  return out;
}

}  // namespace

TEST_SUITE("derivations") {
  TEST_CASE("known dimensions") {
    CHECK(derivation_space(cat().get("sl2")).dim() == 3);
    CHECK(derivation_space(cat().get("n3")).dim() == 6);
    CHECK(derivation_space(cat().get("r2")).dim() == 2);
    CHECK(derivation_space(cat().get("abelian", {{"n", q(2)}})).dim() == 4);
    CHECK(derivation_space(cat().get("g2")).dim() == 14);
  }

  TEST_CASE("glambda dimensions and exceptional set") {
    const auto ds = derivation_space(cat().get("glambda"));
    CHECK(ds.dim() == 12);
    CHECK(ds.exceptional.vanishes_at(to_var_assignment({{"lambda", q(-1)}})));
    CHECK_FALSE(ds.exceptional.vanishes_at(to_var_assignment({{"lambda", q(5)}})));
    CHECK(derivation_space(cat().get("glambda", {{"lambda", q(-1)}})).dim() == 13);
    CHECK(derivation_space(cat().get("glambda", {{"lambda", q(0)}})).dim() == 12);
  }

  TEST_CASE("generalized derivations") {
    CHECK(generalized_derivation_space(cat().get("glambda", {{"lambda", q(1)}}), Scalar(3)).dim() == 12);
    CHECK(generalized_derivation_space(cat().get("glambda", {{"lambda", q(2)}}), Scalar(3)).dim() == 11);
    for (const auto& g : fixed_entries()) {
      const auto ordinary = derivation_space(g);
      const auto t1 = generalized_derivation_space(g, Scalar(1));
      INFO(g.name());
      CHECK(space_contains(ordinary, t1));
      CHECK(space_contains(t1, ordinary));
    }
  }

  TEST_CASE("inner derivations") {
    CHECK(inner_derivations(cat().get("sl2")).dim() == 3);
    CHECK(inner_derivations(cat().get("n3")).dim() == 2);
    CHECK(inner_derivations(cat().get("abelian", {{"n", q(3)}})).dim() == 0);
    const LieAlgebra inner_n3 = derivation_lie_structure(inner_derivations(cat().get("n3")));
    CHECK(is_abelian(inner_n3));
  }

  TEST_CASE("is_derivation") {
    const LieAlgebra ex44 = cat().get("ex44");
    CHECK(is_derivation(ex44, Matrix::diagonal({Scalar(0), Scalar(1), Scalar(1), Scalar(2)})).holds);
    const auto id = is_derivation(cat().get("sl2"), Matrix::identity(3));
    CHECK_FALSE(id.holds);
    REQUIRE(id.failing_pair.has_value());
    CHECK_FALSE(is_zero(id.defect));
    testing::Gen gen(7);
    for (const auto& g : fixed_entries()) {
      CHECK(is_derivation(g, g.ad(gen.element(g.dim()))).holds);
    }
  }

  TEST_CASE("Der of the abelian plane is gl2") {
    const LieAlgebra der = derivation_lie_structure(derivation_space(cat().get("abelian", {{"n", q(2)}})));
    CHECK(der.dim() == 4);
    CHECK(derived_series(der).terms.at(1).dim() == 3);
  }

  TEST_CASE("characteristically nilpotent") {
    const LieAlgebra ex413 = cat().get("ex413");
    CHECK(is_characteristically_nilpotent(ex413));
    CHECK(is_nilpotent(derivation_lie_structure(derivation_space(ex413))));
    for (long n = 3; n <= 6; ++n) CHECK_FALSE(is_characteristically_nilpotent(cat().get("filiform", {{"n", q(n)}})));
    CHECK_FALSE(is_characteristically_nilpotent(cat().get("abelian", {{"n", q(2)}})));
    CHECK_THROWS_AS(is_characteristically_nilpotent(cat().get("glambda")), Error);
  }

  TEST_CASE("map coordinates round-trip") {
    testing::Gen gen(3);
    const Matrix m = gen.rational_matrix(4, 4);
    CHECK(map_from_coordinates(map_coordinates(m), 4) == m);
  }

  TEST_CASE("catalog-wide invariants") {
    for (const auto& g : property_sample(cat())) {
      if (g.dim() > 10) continue;
      INFO(g.name());
      const auto ds = derivation_space(g);
      for (const auto& d : ds.basis) CHECK(is_derivation(g, d).holds);
      CHECK(space_contains(ds, inner_derivations(g)));
      CHECK(ds.dim() + center(g).dim() >= g.dim());
    }
  }
}
