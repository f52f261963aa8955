#include "doctest.h"

#include <algorithm>

#include "generators.hpp"
#include "liedd/acceptance.hpp"
#include "liedd/catalog.hpp"
#include "liedd/identities.hpp"
#include "liedd/rmatrix.hpp"
#include "liedd/tables.hpp"

using namespace liedd;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::builtin();
  return c;
}

const std::vector<LieAlgebra>& sample() {
  static const std::vector<LieAlgebra> s = property_sample(cat());
  return s;
}

Status status(const LieAlgebra& g, IdentityId id, const Quantifier& q) { return check_quantified(g, id, q).status; }

/// Position of the alternating block within the element slots.
std::pair<std::size_t, std::size_t> alternating_block(IdentityId id) {
  switch (id) {
    case IdentityId::Id1:
    case IdentityId::Id2: return {0, 3};
    case IdentityId::Id3: return {1, 3};
    case IdentityId::Id4: return {1, 2};
    case IdentityId::Id6: return {2, 2};
    default: return {0, 5};
  }
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("evaluation spot values") {
    const LieAlgebra ex413 = cat().get("ex413");
    CHECK(eval_identity(ex413, IdentityId::Id4, {}, {ex413.basis(0), ex413.basis(1), ex413.basis(2)}) ==
          scale(Scalar(-1), ex413.basis(7)));
    const LieAlgebra sl2 = cat().get("sl2");
    const Matrix zero(3, 3);
    CHECK(is_zero(eval_identity(sl2, IdentityId::Id1, {zero}, {sl2.zero(), sl2.zero(), sl2.zero()})));
    CHECK(is_zero(eval_identity(sl2, IdentityId::Id6, {}, {sl2.zero(), sl2.zero(), sl2.zero(), sl2.zero()})));
    CHECK(is_zero(eval_identity(sl2, IdentityId::Std5, {}, std::vector<Vector>(5, sl2.zero()))));
    CHECK_THROWS_AS(eval_identity(sl2, IdentityId::Id4, {}, {sl2.zero()}), Error);
    CHECK_THROWS_AS(eval_identity(sl2, IdentityId::Id2, {}, {sl2.zero(), sl2.zero(), sl2.zero()}), Error);
  }

  TEST_CASE("quantified verdicts") {
    const LieAlgebra sl2 = cat().get("sl2");
    CHECK(status(sl2, IdentityId::Id1, Quantifier::all_derivations()) == Status::Holds);
    const auto id2 = check_quantified(sl2, IdentityId::Id2, Quantifier::all_derivations());
    CHECK(id2.status == Status::Fails);
    REQUIRE(id2.witness.has_value());
    const Vector again = eval_identity(sl2, IdentityId::Id2, {id2.map_basis.at(id2.witness->maps.at(0))},
                                       {sl2.basis(id2.witness->elements[0]), sl2.basis(id2.witness->elements[1]),
                                        sl2.basis(id2.witness->elements[2])});
    CHECK(again == id2.value);
    CHECK_FALSE(is_zero(again));

    const auto g5 = check_quantified(cat().get("g5_alpha"), IdentityId::Id4, Quantifier::all_elements());
    CHECK(g5.status == Status::Conditional);
    REQUIRE(g5.conditions.size() == 1);
    CHECK(g5.conditions[0].poly.to_string() == "alpha^2 + alpha");
    CHECK(g5.conditions[0].roots == std::vector<Rational>{Rational(-1), Rational(0)});

    const auto gl = check_quantified(cat().get("glambda"), IdentityId::Id2, Quantifier::all_derivations());
    CHECK(gl.status == Status::Conditional);
    REQUIRE(gl.conditions.size() == 1);
    CHECK(gl.conditions[0].poly.to_string() == "lambda - 1");
    CHECK(gl.exceptional.vanishes_at(to_var_assignment({{"lambda", Rational(-1)}})));

    CHECK(status(cat().get("g3"), IdentityId::Id3, Quantifier::all_elements()) == Status::Fails);
    CHECK(status(cat().get("filiform", {{"n", Rational(7)}}), IdentityId::Id2, Quantifier::all_derivations()) ==
          Status::Holds);
  }

  TEST_CASE("incompatible quantifiers") {
    const LieAlgebra sl2 = cat().get("sl2");
    auto kind_of = [&](IdentityId id, const Quantifier& q) {
      try {
        (void)check_quantified(sl2, id, q);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::Internal;
    };
    CHECK(kind_of(IdentityId::Id6, Quantifier::fixed_element(sl2.basis(0))) == ErrorKind::IncompatibleQuantifier);
    CHECK(kind_of(IdentityId::Std5, Quantifier::all_derivations()) == ErrorKind::IncompatibleQuantifier);
    CHECK(kind_of(IdentityId::Id2, Quantifier::fixed_element(sl2.basis(0))) == ErrorKind::IncompatibleQuantifier);
    CHECK(kind_of(IdentityId::Id4, Quantifier::all_derivations()) == ErrorKind::IncompatibleQuantifier);
  }

  TEST_CASE("identity names") {
    for (IdentityId id : {IdentityId::Id1, IdentityId::Id2, IdentityId::Id3, IdentityId::Id4, IdentityId::Id6,
                          IdentityId::Std5}) {
      CHECK(parse_identity_id(to_string(id)) == id);
    }
    for (auto k : {Quantifier::Kind::Fixed, Quantifier::Kind::AllDerivations, Quantifier::Kind::AllInnerDerivations,
                   Quantifier::Kind::AllElements}) {
      CHECK(parse_quantifier_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_identity_id("5"), Error);
  }

  TEST_CASE("audits") {
    for (const auto& g : sample()) {
      INFO(g.name());
      CHECK_NOTHROW((void)implication_audit(g));
      CHECK_NOTHROW((void)metabelian_equivalences(g));
      CHECK_NOTHROW((void)id6_from_id3_audit(g));
      CHECK_NOTHROW((void)cbm_implies_id34_audit(g));
    }
    const auto natural = natural_reports(cat().get("ex413"));
    for (const auto& r : natural) CHECK(r.status == Status::Fails);
    for (const auto& r : natural_reports(cat().get("abelian", {{"n", Rational(3)}}))) CHECK(r.status == Status::Holds);
  }

  TEST_CASE("metabelian examples") {
    const LieAlgebra ex44 = cat().get("ex44");
    CHECK(is_metabelian(ex44));
    CHECK(status(ex44, IdentityId::Id2, Quantifier::all_inner()) == Status::Holds);
    CHECK(status(ex44, IdentityId::Id2, Quantifier::all_derivations()) == Status::Fails);
    const LieAlgebra sl2 = cat().get("sl2");
    CHECK_FALSE(is_metabelian(sl2));
    CHECK(status(sl2, IdentityId::Id2, Quantifier::all_inner()) == Status::Fails);
    const LieAlgebra rr = cat().get("r2_plus_r2");
    CHECK(is_metabelian(rr));
    CHECK(status(rr, IdentityId::Id2, Quantifier::all_inner()) == Status::Holds);
  }

  TEST_CASE("nilpotent witness derivation") {
    for (const char* name : {"n3", "n4", "ex413"}) {
      const LieAlgebra g = cat().get(name);
      const Matrix d = nilpotent_witness_derivation(g);
      INFO(name);
      CHECK_FALSE(d.is_zero());
      CHECK(is_derivation(g, d).holds);
      CHECK(status(g, IdentityId::Id2, Quantifier::fixed_map(d)) == Status::Holds);
    }
    const LieAlgebra n4 = cat().get("n4");
    CHECK(space_contains(inner_derivations(n4), DerivationSpace{DerivationSpace::Kind::Inner, Scalar(1), 4,
                                                                {nilpotent_witness_derivation(n4)}, {}}));
    CHECK_THROWS_AS(nilpotent_witness_derivation(cat().get("sl2")), Error);
  }

  TEST_CASE("(3), (6) and CBM examples") {
    const LieAlgebra sl2 = cat().get("sl2");
    CHECK(status(sl2, IdentityId::Id3, Quantifier::all_elements()) == Status::Holds);
    CHECK(status(sl2, IdentityId::Id6, Quantifier::all_elements()) == Status::Holds);
    CHECK_FALSE(is_center_by_metabelian(sl2));
    CHECK(status(sl2, IdentityId::Id4, Quantifier::all_elements()) == Status::Holds);
    const LieAlgebra ex413 = cat().get("ex413");
    CHECK_FALSE(is_center_by_metabelian(ex413));
    for (const auto& row : table1(cat())) {
      if (!row.marks[2] || row.specializations.size() > 0) continue;
      const LieAlgebra g = cat().get(row.entry);
      if (g.is_parametric()) continue;
      INFO(row.label);
      CHECK(status(g, IdentityId::Id6, Quantifier::all_elements()) == Status::Holds);
    }
  }

  TEST_CASE("alternation certificates") {
    testing::Gen gen(17);
    const std::vector<IdentityId> ids{IdentityId::Id1, IdentityId::Id2, IdentityId::Id3,
                                      IdentityId::Id4, IdentityId::Id6, IdentityId::Std5};
    std::vector<const LieAlgebra*> pool;
    for (const auto& g : sample()) {
      if (g.dim() >= 3 && g.dim() <= 8) pool.push_back(&g);
    }
    for (IdentityId id : ids) {
      const auto [start, len] = alternating_block(id);
      for (int t = 0; t < 100; ++t) {
        const LieAlgebra& g = *pool[static_cast<std::size_t>(gen.integer(0, static_cast<int>(pool.size()) - 1))];
        const std::size_t n = g.dim();
        std::vector<Matrix> maps;
        for (std::size_t m = 0; m < arity(id).maps; ++m) maps.push_back(gen.rational_matrix(n, n, 50, 2));
        std::vector<Vector> elems;
        for (std::size_t e = 0; e < arity(id).elements; ++e) elems.push_back(gen.element(n));
        const std::size_t a = start + static_cast<std::size_t>(gen.integer(0, static_cast<int>(len) - 2));
        std::vector<Vector> swapped = elems;
        std::swap(swapped[a], swapped[a + 1]);
        INFO(to_string(id), " on ", g.name());
        CHECK(eval_identity(g, id, maps, swapped) == scale(Scalar(-1), eval_identity(g, id, maps, elems)));
      }
    }
  }

  TEST_CASE("polarization soundness") {
    testing::Gen gen(19);
    for (const auto& g : sample()) {
      if (g.dim() > 5) continue;
      const std::size_t n = g.dim();
      for (IdentityId id : {IdentityId::Id3, IdentityId::Id4}) {
        const Status verdict = status(g, id, Quantifier::all_elements());
        bool brute_holds = true;
        for (int t = 0; t < 500 && brute_holds; ++t) {
          std::vector<Vector> elems;
          for (std::size_t e = 0; e < arity(id).elements; ++e) elems.push_back(gen.element(n, 3));
          brute_holds = is_zero(eval_identity(g, id, {}, elems));
        }
        INFO(to_string(id), " on ", g.name());
        if (!brute_holds) CHECK(verdict == Status::Fails);
        if (verdict == Status::Holds) {
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
              for (std::size_t k = j; k < n; ++k) {
                const Vector z = g.basis(i) + g.basis(j) + g.basis(k);
                std::vector<Vector> elems{z};
                for (std::size_t e = 1; e < arity(id).elements; ++e) elems.push_back(gen.element(n));
                CHECK(is_zero(eval_identity(g, id, {}, elems)));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("(1) for D holds iff the double is a Lie algebra") {
    testing::Gen gen(23);
    std::vector<std::pair<const LieAlgebra*, DerivationSpace>> pool;
    for (const auto& g : sample()) {
      if (g.dim() >= 3 && g.dim() <= 8) pool.emplace_back(&g, derivation_space(g));
    }
    int failures = 0;
    for (int t = 0; t < 50; ++t) {
      const auto& [g, ds] = pool[static_cast<std::size_t>(gen.integer(0, static_cast<int>(pool.size()) - 1))];
      const Matrix d = gen.combination(ds.basis, g->dim());
      const bool holds = status(*g, IdentityId::Id1, Quantifier::fixed_map(d)) == Status::Holds;
      bool builds = true;
      try {
        (void)build_double(*g, d);
      } catch (const JacobiViolation&) {
        builds = false;
      }
      failures += holds ? 0 : 1;
      INFO(g->name());
      CHECK(holds == builds);
    }
    CHECK(failures > 0);
  }

  TEST_CASE("standard identity in dimension at most 3") {
    for (const auto& g : sample()) {
      if (g.dim() <= 3) CHECK(status(g, IdentityId::Std5, Quantifier::all_elements()) == Status::Holds);
    }
  }

  TEST_CASE("quantifier monotonicity") {
    for (const auto& g : sample()) {
      if (g.dim() > 8) continue;
      for (IdentityId id : {IdentityId::Id1, IdentityId::Id2}) {
        const Status all = status(g, id, Quantifier::all_derivations());
        const Status inner = status(g, id, Quantifier::all_inner());
        INFO(to_string(id), " on ", g.name());
        if (all == Status::Holds) CHECK(inner == Status::Holds);
        if (inner == Status::Holds) {
          for (std::size_t i = 0; i < g.dim(); ++i) {
            CHECK(status(g, id, Quantifier::fixed_map(g.ad(g.basis(i)))) == Status::Holds);
          }
        }
      }
    }
  }
}
