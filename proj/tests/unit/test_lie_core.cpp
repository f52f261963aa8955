#include "doctest.h"

#include "liedd/lie_algebra.hpp"

using namespace liedd;

namespace {

struct Entry {
  std::size_t i, j, k;
  const char* coeff;
};

StructureConstants table(std::size_t n, std::initializer_list<Entry> entries,
                         const std::vector<std::string>& params = {}) {
  StructureConstants c(n);
  for (const auto& e : entries) c.add(e.i - 1, e.j - 1, e.k - 1, parse_scalar(e.coeff, {params}));
  return c;
}

Matrix unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = Scalar(1);
  return m;
}

}  // namespace

TEST_SUITE("lie_core") {
  TEST_CASE("bracket is skew and bilinear") {
    const LieAlgebra sl2(table(3, {{1, 2, 3, "1"}, {1, 3, 1, "-2"}, {2, 3, 2, "2"}}));
    const Vector x = sl2.parse_element("e1 + 2*e3");
    const Vector y = sl2.parse_element("e2 - e3");
    CHECK(sl2.bracket(x, y) == scale(Scalar(-1), sl2.bracket(y, x)));
    CHECK(sl2.element_to_string(sl2.bracket(sl2.basis(0), sl2.basis(1))) == "e3");
    CHECK(sl2.element_to_string(sl2.bracket(x, y)) == "2*e1 - 4*e2 + e3");
    CHECK(sl2.element_to_string(sl2.zero()) == "0");
  }

  TEST_CASE("ad matrix columns") {
    const LieAlgebra n3(table(3, {{1, 2, 3, "1"}}));
    const Matrix a = n3.ad(n3.basis(0));
    CHECK(a.column(1) == n3.basis(2));
    CHECK(a.column(0) == n3.zero());
    CHECK(a.pow(2).is_zero());
  }

  TEST_CASE("Jacobi violation carries the first failing triple") {
    // [e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1 is not a Lie algebra
    const auto c = table(3, {{1, 2, 2, "1"}, {1, 3, 3, "1"}, {2, 3, 1, "1"}});
    const auto failure = find_jacobi_failure(c);
    REQUIRE(failure.has_value());
    CHECK(failure->i == 0);
    CHECK(failure->j == 1);
    CHECK(failure->k == 2);
    CHECK_FALSE(is_zero(failure->value));
    try {
      LieAlgebra bad(c);
      FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& e) {
      CHECK(e.kind() == ErrorKind::JacobiViolation);
      CHECK(e.failure().i == 0);
    }
  }

  TEST_CASE("series and classes") {
    const LieAlgebra n4(table(4, {{1, 2, 3, "1"}, {1, 3, 4, "1"}}));
    CHECK(nilpotency_class(n4) == 3);
    CHECK(solvability_class(n4) == 2);
    CHECK(center(n4).dim() == 1);
    CHECK(is_metabelian(n4));

    const LieAlgebra sl2(table(3, {{1, 2, 3, "1"}, {1, 3, 1, "-2"}, {2, 3, 2, "2"}}));
    CHECK_FALSE(nilpotency_class(sl2).has_value());
    CHECK_FALSE(solvability_class(sl2).has_value());
    CHECK(center(sl2).dim() == 0);
    CHECK_FALSE(is_center_by_metabelian(sl2));

    const LieAlgebra ab(StructureConstants(3));
    CHECK(is_abelian(ab));
    CHECK(nilpotency_class(ab) == 1);
  }

  TEST_CASE("parametric algebra and specialization") {
    const LieAlgebra r3(table(3, {{1, 2, 2, "1"}, {1, 3, 3, "lambda"}}, {"lambda"}), {},
                        {"lambda"});
    CHECK(r3.is_parametric());
    CHECK(derived_series(r3).terms.at(1).dim() == 2);
    const LieAlgebra r3zero = specialize(r3, {{"lambda", Rational(0)}});
    CHECK_FALSE(r3zero.is_parametric());
    CHECK(derived_series(r3zero).terms.at(1).dim() == 1);
    CHECK_THROWS_AS(specialize(r3, {{"mu", Rational(0)}}), Error);
  }

  TEST_CASE("from_matrices recovers sl2") {
    const Matrix x = unit(2, 0, 1);
    const Matrix y = unit(2, 1, 0);
    const Matrix h = unit(2, 0, 0) - unit(2, 1, 1);
    const auto real = from_matrices({x, y, h});
    CHECK(real.algebra.dim() == 3);
    CHECK(real.algebra.bracket_basis(0, 1) == real.algebra.basis(2));
    CHECK(real.algebra.bracket_basis(0, 2) == scale(Scalar(-2), real.algebra.basis(0)));

    try {
      (void)from_matrices({x, y});
      FAIL("expected NotClosed");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotClosed);
    }
    try {
      (void)from_matrices({x, x.scaled(Scalar(2))});
      FAIL("expected NotIndependent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotIndependent);
    }
  }

  TEST_CASE("derivations of small bilinear algebras") {
    // quaternions: derivations are the inner ones, dimension 3
    BilinearAlgebra h{4, std::vector<Vector>(16, zero_vector(4))};
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long s) {
      h.products[i * 4 + j] = scale(Scalar(s), unit_vector(4, k));
    };
    for (std::size_t i = 0; i < 4; ++i) {
      set(0, i, i, 1);
      set(i, 0, i, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    set(3, 3, 0, -1);
    set(1, 2, 3, 1);
    set(2, 1, 3, -1);
    set(2, 3, 1, 1);
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);
    set(1, 3, 2, -1);
    CHECK(derivations_of_bilinear(h).basis.size() == 3);

    // Q x Q with pointwise product: only the zero derivation
    BilinearAlgebra q2{2, std::vector<Vector>(4, zero_vector(2))};
    q2.products[0] = unit_vector(2, 0);
    q2.products[3] = unit_vector(2, 1);
    CHECK(derivations_of_bilinear(q2).basis.empty());
  }

  TEST_CASE("direct sum") {
    const LieAlgebra r2(table(2, {{1, 2, 2, "1"}}));
    const LieAlgebra s = direct_sum(r2, r2);
    CHECK(s.dim() == 4);
    CHECK(s.bracket_basis(2, 3) == s.basis(3));
    CHECK(is_zero(s.bracket_basis(0, 2)));
    CHECK(solvability_class(s) == 2);
  }
}
