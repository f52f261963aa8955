#include "doctest.h"

#include "generators.hpp"
#include "liedd/linalg.hpp"

using namespace liedd;

namespace {

Scalar S(const char* text) { return parse_scalar(text, {{"lambda", "a", "b"}}); }

Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (const char* s : r) v.push_back(S(s));
    out.push_back(std::move(v));
  }
  const std::size_t cols = out.empty() ? 0 : out.front().size();
  return Matrix::from_rows(out, cols);
}

std::map<VarId, Rational> at_lambda(long value) { return {{intern_variable("lambda"), Rational(value)}}; }

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("nullspace of a rational matrix") {
    const Matrix m = M({{"1", "2", "3"}, {"2", "4", "6"}});
    const auto ns = nullspace(m);
    CHECK(ns.basis.size() == 2);
    CHECK(ns.exceptional.empty());
    for (const auto& v : ns.basis) CHECK(is_zero(m * v));
  }

  TEST_CASE("parametric rank records exceptional values") {
    const Matrix m = M({{"1", "1"}, {"1", "lambda"}});
    const auto r = rank(m);
    CHECK(r.rank == 2);
    CHECK(r.exceptional.contains(S("lambda - 1").numerator()));
    CHECK(r.exceptional.vanishes_at(at_lambda(1)));
    CHECK_FALSE(r.exceptional.vanishes_at(at_lambda(2)));
    CHECK(rank(m.substitute(at_lambda(1))).rank == 1);
  }

  TEST_CASE("solve_affine") {
    const Matrix a = M({{"1", "1"}, {"1", "-1"}});
    auto sol = solve_affine(a, {S("2"), S("0")});
    REQUIRE(sol.kind == AffineSolution::Kind::Unique);
    CHECK(sol.particular == Vector{S("1"), S("1")});

    sol = solve_affine(M({{"1", "1"}, {"2", "2"}}), {S("1"), S("3")});
    CHECK(sol.kind == AffineSolution::Kind::NoSolution);

    sol = solve_affine(M({{"1", "1"}}), {S("1")});
    REQUIRE(sol.kind == AffineSolution::Kind::Affine);
    CHECK(sol.directions.size() == 1);
  }

  TEST_CASE("matrix arithmetic") {
    const Matrix x = M({{"0", "1"}, {"0", "0"}});
    const Matrix y = M({{"0", "0"}, {"1", "0"}});
    const Matrix h = M({{"1", "0"}, {"0", "-1"}});
    CHECK(commutator(x, y) == h);
    CHECK(commutator(h, x) == x.scaled(S("2")));
    CHECK(x.pow(2).is_zero());
    CHECK(h.to_string() == "[[1, 0], [0, -1]]");
    CHECK(Matrix::unflatten(h.flatten(), 2, 2) == h);
  }

  TEST_CASE("rank plus nullity on random rational matrices") {
    testing::Gen gen(5150);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = static_cast<std::size_t>(gen.integer(1, 6));
      const auto cols = static_cast<std::size_t>(gen.integer(1, 6));
      const Matrix m = gen.rational_matrix(rows, cols);
      const auto ns = nullspace(m);
      REQUIRE(rank(m).rank + ns.basis.size() == cols);
      for (const auto& v : ns.basis) REQUIRE(is_zero(m * v));
    }
  }

  TEST_CASE("parametric nullspace specializes soundly off the exceptional set") {
    testing::Gen gen(9001);
    for (int trial = 0; trial < 60; ++trial) {
      Matrix m = gen.rational_matrix(3, 4, 70);
      // sprinkle lambda into a few entries
      for (int k = 0; k < 3; ++k) {
        const auto r = static_cast<std::size_t>(gen.integer(0, 2));
        const auto c = static_cast<std::size_t>(gen.integer(0, 3));
        m(r, c) = m(r, c) + S("lambda") * Scalar(Rational(gen.integer(-2, 2)));
      }
      const auto ns = nullspace(m);
      for (const auto& v : ns.basis) REQUIRE(is_zero(m * v));
      for (int value = -3; value <= 3; ++value) {
        const auto at = at_lambda(value);
        if (ns.exceptional.vanishes_at(at)) continue;
        const Matrix ms = m.substitute(at);
        REQUIRE(nullspace(ms).basis.size() == ns.basis.size());
        for (const auto& v : ns.basis) {
          Vector vs;
          for (const auto& s : v) vs.push_back(s.substitute(at));
          REQUIRE(is_zero(ms * vs));
        }
      }
    }
  }
}
